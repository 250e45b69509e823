#include "tropikit/lp.hpp"

namespace tropikit {

void LinearProgram::add_ineq(const QVec& a, const Rational& b)
{
    if (int(a.size()) != vars) throw std::invalid_argument("add_ineq: dimension mismatch");
    QMat next(A_ineq.rows + 1, vars);
    for (int i = 0; i < A_ineq.rows; ++i) next.set_row(i, A_ineq.row(i));
    next.set_row(A_ineq.rows, a);
    A_ineq = std::move(next);
    b_ineq.push_back(b);
}

void LinearProgram::add_eq(const QVec& a, const Rational& b)
{
    if (int(a.size()) != vars) throw std::invalid_argument("add_eq: dimension mismatch");
    QMat next(A_eq.rows + 1, vars);
    for (int i = 0; i < A_eq.rows; ++i) next.set_row(i, A_eq.row(i));
    next.set_row(A_eq.rows, a);
    A_eq = std::move(next);
    b_eq.push_back(b);
}

namespace {

// Dense tableau for min cost*y, M y = rhs, y >= 0.
struct Tableau {
    int m, n;
    QMat T;
    QVec rhs;
    QVec cost; // reduced costs
    Rational cost0 = 0;
    std::vector<int> basis;

    void pivot(int r, int c)
    {
        Rational inv = 1 / T(r, c);
        for (int j = 0; j < n; ++j) T(r, j) *= inv;
        rhs[r] *= inv;
        for (int i = 0; i < m; ++i) {
            if (i == r || T(i, c) == 0) continue;
            Rational f = T(i, c);
            for (int j = 0; j < n; ++j) T(i, j) -= f * T(r, j);
            rhs[i] -= f * rhs[r];
        }
        if (cost[c] != 0) {
            Rational f = cost[c];
            for (int j = 0; j < n; ++j) cost[j] -= f * T(r, j);
            cost0 -= f * rhs[r];
        }
        basis[r] = c;
    }

    // Bland's rule; returns false when unbounded.
    bool run()
    {
        for (;;) {
            int enter = -1;
            for (int j = 0; j < n; ++j)
                if (cost[j] < 0) { enter = j; break; }
            if (enter < 0) return true;
            int leave = -1;
            Rational best = 0;
            for (int i = 0; i < m; ++i) {
                if (T(i, enter) <= 0) continue;
                Rational ratio = rhs[i] / T(i, enter);
                if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave < 0) return false;
            pivot(leave, enter);
        }
    }
};

struct StandardForm {
    // variable layout: x+ (vars), x- (vars), surplus (one per inequality)
    int vars, nslack, total;
    Tableau tab;
    bool feasible = false;

    explicit StandardForm(const LinearProgram& lp)
    {
        vars = lp.vars;
        nslack = lp.A_ineq.rows;
        total = 2 * vars + nslack;
        const int m = lp.A_ineq.rows + lp.A_eq.rows;

        QMat M(m, total);
        QVec r(m, Rational(0));
        for (int i = 0; i < lp.A_ineq.rows; ++i) {
            for (int j = 0; j < vars; ++j) {
                M(i, j) = lp.A_ineq(i, j);
                M(i, vars + j) = -lp.A_ineq(i, j);
            }
            M(i, 2 * vars + i) = -1; // surplus
            r[i] = lp.b_ineq[i];
        }
        for (int i = 0; i < lp.A_eq.rows; ++i) {
            const int row = lp.A_ineq.rows + i;
            for (int j = 0; j < vars; ++j) {
                M(row, j) = lp.A_eq(i, j);
                M(row, vars + j) = -lp.A_eq(i, j);
            }
            r[row] = lp.b_eq[i];
        }
        for (int i = 0; i < m; ++i)
            if (r[i] < 0) {
                for (int j = 0; j < total; ++j) M(i, j) = -M(i, j);
                r[i] = -r[i];
            }

        // Phase 1 with one artificial per row.
        tab.m = m;
        tab.n = total + m;
        tab.T = QMat(m, tab.n);
        for (int i = 0; i < m; ++i) {
            for (int j = 0; j < total; ++j) tab.T(i, j) = M(i, j);
            tab.T(i, total + i) = 1;
        }
        tab.rhs = r;
        tab.basis.resize(m);
        tab.cost.assign(tab.n, Rational(0));
        tab.cost0 = 0;
        for (int i = 0; i < m; ++i) {
            tab.basis[i] = total + i;
            // reduced costs for cost = sum of artificials
            for (int j = 0; j < tab.n; ++j) tab.cost[j] -= tab.T(i, j);
            tab.cost0 -= tab.rhs[i];
        }
        for (int i = 0; i < m; ++i) tab.cost[total + i] += 1;
        tab.run();
        if (-tab.cost0 != 0) { feasible = false; return; }
        feasible = true;

        // Drive remaining artificials out of the basis.
        for (int i = 0; i < tab.m; ++i) {
            if (tab.basis[i] < total) continue;
            int piv = -1;
            for (int j = 0; j < total; ++j)
                if (tab.T(i, j) != 0) { piv = j; break; }
            if (piv >= 0) tab.pivot(i, piv);
        }
        // Remove rows still basic in an artificial (redundant equations) and
        // drop artificial columns.
        std::vector<int> keep;
        for (int i = 0; i < tab.m; ++i)
            if (tab.basis[i] < total) keep.push_back(i);
        Tableau t2;
        t2.m = int(keep.size());
        t2.n = total;
        t2.T = QMat(t2.m, total);
        t2.rhs.resize(t2.m);
        t2.basis.resize(t2.m);
        for (int k = 0; k < t2.m; ++k) {
            for (int j = 0; j < total; ++j) t2.T(k, j) = tab.T(keep[k], j);
            t2.rhs[k] = tab.rhs[keep[k]];
            t2.basis[k] = tab.basis[keep[k]];
        }
        tab = std::move(t2);
    }

    // Minimizes c over the standard-form variables (already reduced layout).
    LpStatus minimize(const QVec& c_std, QVec& y_out, Rational& val_out)
    {
        tab.cost.assign(tab.n, Rational(0));
        tab.cost0 = 0;
        for (int j = 0; j < tab.n; ++j) tab.cost[j] = c_std[j];
        for (int i = 0; i < tab.m; ++i) {
            const int b = tab.basis[i];
            if (c_std[b] == 0) continue;
            Rational f = c_std[b];
            for (int j = 0; j < tab.n; ++j) tab.cost[j] -= f * tab.T(i, j);
            tab.cost0 -= f * tab.rhs[i];
        }
        if (!tab.run()) return LpStatus::Unbounded;
        y_out.assign(tab.n, Rational(0));
        for (int i = 0; i < tab.m; ++i) y_out[tab.basis[i]] = tab.rhs[i];
        val_out = -tab.cost0;
        return LpStatus::Optimal;
    }

    QVec extract_x(const QVec& y) const
    {
        QVec x(vars);
        for (int j = 0; j < vars; ++j) x[j] = y[j] - y[vars + j];
        return x;
    }
};

} // namespace

LpResult lp_maximize(const LinearProgram& lp, const QVec& objective)
{
    if (int(objective.size()) != lp.vars) throw std::invalid_argument("lp_maximize: objective dimension");
    LpResult res;
    StandardForm sf(lp);
    if (!sf.feasible) { res.status = LpStatus::Infeasible; return res; }
    QVec c(sf.tab.n, Rational(0));
    for (int j = 0; j < lp.vars; ++j) {
        c[j] = -objective[j];
        c[lp.vars + j] = objective[j];
    }
    QVec y;
    Rational val;
    LpStatus st = sf.minimize(c, y, val);
    res.status = st;
    if (st == LpStatus::Optimal) {
        res.x = sf.extract_x(y);
        res.value = -val;
    }
    return res;
}

std::optional<QVec> lp_feasible_point(const LinearProgram& lp)
{
    StandardForm sf(lp);
    if (!sf.feasible) return std::nullopt;
    QVec y(sf.tab.n, Rational(0));
    for (int i = 0; i < sf.tab.m; ++i) y[sf.tab.basis[i]] = sf.tab.rhs[i];
    return sf.extract_x(y);
}

RelintResult lp_relative_interior(const LinearProgram& lp)
{
    RelintResult out;
    if (!lp_feasible_point(lp)) return out;
    out.empty = false;

    // An inequality is implicit when its slack cannot be made positive.
    std::vector<bool> implicit(lp.A_ineq.rows, false);
    for (int i = 0; i < lp.A_ineq.rows; ++i) {
        LinearProgram probe = lp;
        // maximize slack_i capped at 1: introduce cap via extra inequality on objective value
        QVec obj = lp.A_ineq.row(i);
        LpResult r = lp_maximize(probe, obj);
        if (r.status == LpStatus::Optimal && r.value == lp.b_ineq[i]) {
            implicit[i] = true;
            out.implicit_equalities.push_back(i);
        }
    }

    // Maximize a uniform positive slack t (capped) on the non-implicit rows.
    LinearProgram aug;
    aug.vars = lp.vars + 1;
    for (int i = 0; i < lp.A_ineq.rows; ++i) {
        QVec a = lp.A_ineq.row(i);
        a.push_back(implicit[i] ? Rational(0) : Rational(-1));
        aug.add_ineq(a, lp.b_ineq[i]);
        if (implicit[i]) {
            QVec neg = Rational(-1) * lp.A_ineq.row(i);
            neg.push_back(Rational(0));
            aug.add_ineq(neg, -lp.b_ineq[i]);
        }
    }
    for (int i = 0; i < lp.A_eq.rows; ++i) {
        QVec a = lp.A_eq.row(i);
        a.push_back(Rational(0));
        aug.add_eq(a, lp.b_eq[i]);
    }
    {
        QVec tcap(aug.vars, Rational(0));
        tcap[lp.vars] = -1;
        aug.add_ineq(tcap, Rational(-1)); // t <= 1
        QVec tpos(aug.vars, Rational(0));
        tpos[lp.vars] = 1;
        aug.add_ineq(tpos, Rational(0)); // t >= 0
    }
    QVec obj(aug.vars, Rational(0));
    obj[lp.vars] = 1;
    LpResult r = lp_maximize(aug, obj);
    if (r.status != LpStatus::Optimal)
        throw std::runtime_error("lp_relative_interior: capped LP not optimal");
    out.point.assign(r.x.begin(), r.x.begin() + lp.vars);
    return out;
}

int lp_dimension(const LinearProgram& lp)
{
    RelintResult ri = lp_relative_interior(lp);
    if (ri.empty) return -1;
    // Affine hull: equality rows plus implicit inequalities.
    QMat eqs(0, lp.vars);
    eqs = lp.A_eq;
    for (int i : ri.implicit_equalities) {
        QMat next(eqs.rows + 1, lp.vars);
        for (int k = 0; k < eqs.rows; ++k) next.set_row(k, eqs.row(k));
        next.set_row(eqs.rows, lp.A_ineq.row(i));
        eqs = std::move(next);
    }
    if (eqs.rows == 0) return lp.vars;
    return lp.vars - rank(eqs);
}

} // namespace tropikit
