#include "tropikit/cone.hpp"

#include <algorithm>
#include <set>

namespace tropikit {

namespace {

ZVec primitive_or_zero(const ZVec& v)
{
    if (is_zero(v)) return v;
    return primitive_part(v).p;
}

ZMat rows_to_mat(int ambient, const std::vector<ZVec>& rows)
{
    ZMat m(int(rows.size()), ambient);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < ambient; ++j) m(i, j) = rows[i][j];
    return m;
}

// Orthogonal projection of r off the span of L, canonicalized to a primitive
// integer vector (zero if r lies in the span).
ZVec reduce_mod_span(const ZVec& r, const std::vector<ZVec>& L)
{
    if (L.empty()) return primitive_or_zero(r);
    const int d = int(r.size());
    const int k = int(L.size());
    QMat G(k, k);
    QVec rhs(k);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) G(i, j) = Rational(dot(L[i], L[j]));
        rhs[i] = Rational(dot(L[i], r));
    }
    auto c = solve(G, rhs);
    if (!c) throw std::logic_error("reduce_mod_span: dependent basis");
    QVec res(d);
    for (int j = 0; j < d; ++j) {
        res[j] = Rational(r[j]);
        for (int i = 0; i < k; ++i) res[j] -= (*c)[i] * Rational(L[i][j]);
    }
    if (is_zero(res)) return ZVec(d, Int(0));
    return primitive_part(clear_denominators(res)).p;
}

int rank_of_rows(int ambient, const std::vector<ZVec>& rows)
{
    if (rows.empty()) return 0;
    return rank(rows_to_mat(ambient, rows));
}

std::vector<ZVec> dedupe(std::vector<ZVec> v)
{
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

struct DDState {
    int ambient;
    std::vector<ZVec> L;
    std::vector<ZVec> R;
    std::vector<ZVec> doneIneq, doneEq;

    explicit DDState(int d) : ambient(d)
    {
        for (int i = 0; i < d; ++i) {
            ZVec e(d, Int(0));
            e[i] = 1;
            L.push_back(e);
        }
    }

    void refresh_lineality()
    {
        std::vector<ZVec> all = doneIneq;
        all.insert(all.end(), doneEq.begin(), doneEq.end());
        ZMat k = integer_kernel(rows_to_mat(ambient, all));
        L.clear();
        for (int i = 0; i < k.rows; ++i) L.push_back(k.row(i));
    }

    void filter_extreme()
    {
        std::vector<ZVec> kept;
        const int want = ambient - int(L.size()) - 1;
        for (auto& r : R) {
            ZVec c = reduce_mod_span(r, L);
            if (is_zero(c)) continue;
            std::vector<ZVec> tight = doneEq;
            for (const auto& a : doneIneq)
                if (dot(a, c) == 0) tight.push_back(a);
            if (rank_of_rows(ambient, tight) == want) kept.push_back(c);
        }
        R = dedupe(std::move(kept));
    }

    void step(const ZVec& a, bool is_eq)
    {
        if (is_zero(a)) return;
        int hit = -1;
        for (int i = 0; i < int(L.size()); ++i)
            if (dot(a, L[i]) != 0) { hit = i; break; }
        if (hit >= 0) {
            ZVec lhat = L[hit];
            if (dot(a, lhat) < 0) lhat = negate(lhat);
            const Int al = dot(a, lhat);
            std::vector<ZVec> next;
            for (const auto& r : R) {
                const Int ar = dot(a, r);
                ZVec nr(ambient);
                for (int j = 0; j < ambient; ++j) nr[j] = al * r[j] - ar * lhat[j];
                next.push_back(primitive_or_zero(nr));
            }
            if (!is_eq) next.push_back(lhat);
            R = std::move(next);
        } else {
            std::vector<ZVec> plus, zero, minus;
            for (const auto& r : R) {
                const Int ar = dot(a, r);
                if (ar > 0) plus.push_back(r);
                else if (ar < 0) minus.push_back(r);
                else zero.push_back(r);
            }
            std::vector<ZVec> next = zero;
            if (!is_eq) next.insert(next.end(), plus.begin(), plus.end());
            for (const auto& p : plus)
                for (const auto& m : minus) {
                    const Int ap = dot(a, p), am = dot(a, m);
                    ZVec nr(ambient);
                    for (int j = 0; j < ambient; ++j) nr[j] = ap * m[j] - am * p[j];
                    next.push_back(primitive_or_zero(nr));
                }
            R = std::move(next);
        }
        (is_eq ? doneEq : doneIneq).push_back(a);
        refresh_lineality();
        filter_extreme();
    }
};

} // namespace

VRep dd_rays(int ambient, const std::vector<ZVec>& ineqs, const std::vector<ZVec>& eqs)
{
    DDState st(ambient);
    for (const auto& e : eqs) st.step(e, true);
    for (const auto& a : ineqs) st.step(a, false);
    if (st.doneIneq.empty() && st.doneEq.empty()) st.refresh_lineality();
    VRep out;
    out.rays = st.R;
    out.lineality = st.L;
    return out;
}

VRep enumerate_rays_bruteforce(int ambient, const std::vector<ZVec>& ineqs, const std::vector<ZVec>& eqs)
{
    std::vector<ZVec> all = ineqs;
    all.insert(all.end(), eqs.begin(), eqs.end());
    ZMat kern = integer_kernel(rows_to_mat(ambient, all));
    std::vector<ZVec> L;
    for (int i = 0; i < kern.rows; ++i) L.push_back(kern.row(i));

    const int m = int(ineqs.size());
    const int want = ambient - int(L.size()) - 1;
    std::vector<ZVec> found;
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        std::vector<QVec> sys;
        for (const auto& e : eqs) sys.push_back(to_qvec(e));
        for (int i = 0; i < m; ++i)
            if (mask & (1u << i)) sys.push_back(to_qvec(ineqs[i]));
        QMat sm(int(sys.size()), ambient);
        for (int i = 0; i < sm.rows; ++i) sm.set_row(i, sys[i]);
        QMat k = kernel_basis(sm);
        if (k.rows != int(L.size()) + 1) continue;
        for (int i = 0; i < k.rows; ++i) {
            ZVec cand = reduce_mod_span(primitive_or_zero(clear_denominators(k.row(i))), L);
            if (is_zero(cand)) continue;
            for (int sign = 0; sign < 2; ++sign) {
                ZVec v = sign ? negate(cand) : cand;
                bool feas = true;
                for (const auto& a : ineqs)
                    if (dot(a, v) < 0) { feas = false; break; }
                for (const auto& e : eqs)
                    if (dot(e, v) != 0) { feas = false; break; }
                if (!feas) continue;
                std::vector<ZVec> tight;
                for (const auto& e : eqs) tight.push_back(e);
                for (const auto& a : ineqs)
                    if (dot(a, v) == 0) tight.push_back(a);
                if (rank_of_rows(ambient, tight) == want) found.push_back(v);
            }
        }
    }
    VRep out;
    out.rays = dedupe(std::move(found));
    out.lineality = L;
    return out;
}

HRep remove_redundant_rows(int ambient, HRep h)
{
    for (auto& r : h.ineqs) r = primitive_or_zero(r);
    std::erase_if(h.ineqs, [](const ZVec& v) { return is_zero(v); });
    h.ineqs = dedupe(std::move(h.ineqs));

    for (size_t i = 0; i < h.ineqs.size();) {
        LinearProgram lp;
        lp.vars = ambient;
        for (size_t j = 0; j < h.ineqs.size(); ++j) {
            if (j == i) continue;
            lp.add_ineq(to_qvec(h.ineqs[j]), Rational(0));
        }
        for (const auto& e : h.eqs) lp.add_eq(to_qvec(e), Rational(0));
        lp.add_ineq(Rational(-1) * to_qvec(h.ineqs[i]), Rational(1));
        if (lp_feasible_point(lp))
            ++i; // the row cuts something off
        else
            h.ineqs.erase(h.ineqs.begin() + i);
    }
    return h;
}

HRep fm_eliminate(int ambient, const HRep& h, int var)
{
    auto drop = [&](const QVec& row) {
        ZVec z = primitive_or_zero(clear_denominators(row));
        ZVec out;
        out.reserve(ambient - 1);
        for (int j = 0; j < ambient; ++j)
            if (j != var) out.push_back(z[j]);
        return out;
    };

    HRep out;
    int pivot = -1;
    for (size_t i = 0; i < h.eqs.size(); ++i)
        if (h.eqs[i][var] != 0) { pivot = int(i); break; }
    if (pivot >= 0) {
        const QVec p = to_qvec(h.eqs[pivot]);
        auto reduce = [&](const ZVec& row) {
            QVec q = to_qvec(row);
            Rational f = q[var] / p[var];
            for (int j = 0; j < ambient; ++j) q[j] -= f * p[j];
            return drop(q);
        };
        for (size_t i = 0; i < h.eqs.size(); ++i)
            if (int(i) != pivot) out.eqs.push_back(reduce(h.eqs[i]));
        for (const auto& a : h.ineqs) out.ineqs.push_back(reduce(a));
    } else {
        for (const auto& e : h.eqs) out.eqs.push_back(drop(to_qvec(e)));
        std::vector<ZVec> plus, minus;
        for (const auto& a : h.ineqs) {
            if (a[var] > 0) plus.push_back(a);
            else if (a[var] < 0) minus.push_back(a);
            else out.ineqs.push_back(drop(to_qvec(a)));
        }
        for (const auto& p : plus)
            for (const auto& m : minus) {
                QVec q(ambient);
                for (int j = 0; j < ambient; ++j)
                    q[j] = Rational(p[var] * m[j] - m[var] * p[j]);
                out.ineqs.push_back(drop(q));
            }
    }
    std::erase_if(out.ineqs, [](const ZVec& v) { return is_zero(v); });
    std::erase_if(out.eqs, [](const ZVec& v) { return is_zero(v); });
    return remove_redundant_rows(ambient - 1, std::move(out));
}

Cone Cone::from_h(int ambient, std::vector<ZVec> in_ineqs, std::vector<ZVec> in_eqs)
{
    std::erase_if(in_ineqs, [](const ZVec& v) { return tropikit::is_zero(v); });
    std::erase_if(in_eqs, [](const ZVec& v) { return tropikit::is_zero(v); });
    VRep vr = dd_rays(ambient, in_ineqs, in_eqs);

    Cone c;
    c.ambient = ambient;
    c.rays = vr.rays;
    c.lineality = vr.lineality;

    // Canonical equations: annihilator of the span of the generators.
    std::vector<ZVec> gens = c.rays;
    gens.insert(gens.end(), c.lineality.begin(), c.lineality.end());
    ZMat genm = rows_to_mat(ambient, gens);
    ZMat ann = integer_kernel(genm.rows ? genm : ZMat(0, ambient));
    for (int i = 0; i < ann.rows; ++i) c.eqs.push_back(ann.row(i));

    // Canonical inequalities: reduce the inputs modulo the equations, then
    // drop implied rows.
    std::vector<ZVec> eqspan = c.eqs;
    HRep h;
    h.eqs = c.eqs;
    for (const auto& a : in_ineqs) {
        ZVec red = reduce_mod_span(a, eqspan.empty() ? std::vector<ZVec>{} : eqspan);
        if (!tropikit::is_zero(red)) h.ineqs.push_back(red);
    }
    h = remove_redundant_rows(ambient, std::move(h));
    c.ineqs = h.ineqs;
    return c;
}

Cone Cone::from_v(int ambient, std::vector<ZVec> in_rays, std::vector<ZVec> in_lin)
{
    std::erase_if(in_rays, [](const ZVec& v) { return tropikit::is_zero(v); });
    std::erase_if(in_lin, [](const ZVec& v) { return tropikit::is_zero(v); });
    // H-description via the dual cone's ray enumeration.
    VRep dual = dd_rays(ambient, in_rays, in_lin);
    return from_h(ambient, dual.rays, dual.lineality);
}

Cone Cone::zero(int ambient)
{
    return from_v(ambient, {}, {});
}

Cone Cone::full(int ambient)
{
    return from_h(ambient, {}, {});
}

int Cone::dim() const
{
    return ambient - int(eqs.size());
}

bool Cone::contains(const QVec& x) const
{
    for (const auto& a : ineqs)
        if (dot(to_qvec(a), x) < 0) return false;
    for (const auto& e : eqs)
        if (dot(to_qvec(e), x) != 0) return false;
    return true;
}

bool Cone::contains_in_relint(const QVec& x) const
{
    for (const auto& a : ineqs)
        if (dot(to_qvec(a), x) <= 0) return false;
    for (const auto& e : eqs)
        if (dot(to_qvec(e), x) != 0) return false;
    return true;
}

bool Cone::contains(const Cone& other) const
{
    for (const auto& r : other.rays)
        if (!contains(to_qvec(r))) return false;
    for (const auto& l : other.lineality)
        if (!contains(to_qvec(l)) || !contains(to_qvec(negate(l)))) return false;
    return true;
}

bool Cone::equals(const Cone& other) const
{
    return contains(other) && other.contains(*this);
}

QVec Cone::relint_point() const
{
    QVec p(ambient, Rational(0));
    for (const auto& r : rays)
        for (int j = 0; j < ambient; ++j) p[j] += Rational(r[j]);
    return p;
}

Cone Cone::dual() const
{
    return from_h(ambient, rays, lineality);
}

Cone Cone::intersect(const Cone& other) const
{
    if (ambient != other.ambient) throw std::invalid_argument("cone intersect: ambient mismatch");
    std::vector<ZVec> i = ineqs, e = eqs;
    i.insert(i.end(), other.ineqs.begin(), other.ineqs.end());
    e.insert(e.end(), other.eqs.begin(), other.eqs.end());
    return from_h(ambient, i, e);
}

RationalSubspace Cone::span() const
{
    std::vector<QVec> gens;
    for (const auto& r : rays) gens.push_back(to_qvec(r));
    for (const auto& l : lineality) gens.push_back(to_qvec(l));
    return RationalSubspace(ambient, gens);
}

RationalSubspace Cone::lineality_space() const
{
    std::vector<QVec> gens;
    for (const auto& l : lineality) gens.push_back(to_qvec(l));
    return RationalSubspace(ambient, gens);
}

Cone project_cone_fm(const Cone& c, const std::vector<int>& keep)
{
    for (size_t i = 0; i + 1 < keep.size(); ++i)
        if (keep[i] >= keep[i + 1])
            throw std::invalid_argument("project_cone_fm: keep list must be increasing");
    HRep h{c.ineqs, c.eqs};
    int ambient = c.ambient;
    for (int var = c.ambient - 1; var >= 0; --var) {
        if (std::find(keep.begin(), keep.end(), var) != keep.end()) continue;
        h = fm_eliminate(ambient, h, var);
        --ambient;
    }
    return Cone::from_h(ambient, h.ineqs, h.eqs);
}

Cone project_cone_dd(const Cone& c, const std::vector<int>& keep)
{
    std::vector<ZVec> rays, lin;
    for (const auto& r : c.rays) {
        ZVec img;
        for (int j : keep) img.push_back(r[j]);
        if (!is_zero(img)) rays.push_back(primitive_or_zero(img));
    }
    for (const auto& l : c.lineality) {
        ZVec img;
        for (int j : keep) img.push_back(l[j]);
        if (!is_zero(img)) lin.push_back(primitive_or_zero(img));
    }
    return Cone::from_v(int(keep.size()), rays, lin);
}

Cone map_cone(const Cone& c, const QMat& m)
{
    if (m.cols != c.ambient) throw std::invalid_argument("map_cone: shape mismatch");
    std::vector<ZVec> rays, lin;
    for (const auto& r : c.rays) {
        QVec img = m * to_qvec(r);
        if (!is_zero(img)) rays.push_back(primitive_part(clear_denominators(img)).p);
    }
    for (const auto& l : c.lineality) {
        QVec img = m * to_qvec(l);
        if (!is_zero(img)) lin.push_back(primitive_part(clear_denominators(img)).p);
    }
    return Cone::from_v(m.rows, rays, lin);
}

} // namespace tropikit
