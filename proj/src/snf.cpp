#include "tropikit/snf.hpp"

namespace tropikit {

namespace {

void swap_rows(ZMat& m, int i, int j)
{
    if (i == j) return;
    for (int c = 0; c < m.cols; ++c) std::swap(m(i, c), m(j, c));
}

void swap_cols(ZMat& m, int i, int j)
{
    if (i == j) return;
    for (int r = 0; r < m.rows; ++r) std::swap(m(r, i), m(r, j));
}

// row[i] += f * row[j]
void add_row(ZMat& m, int i, int j, const Int& f)
{
    for (int c = 0; c < m.cols; ++c) m(i, c) += f * m(j, c);
}

void add_col(ZMat& m, int i, int j, const Int& f)
{
    for (int r = 0; r < m.rows; ++r) m(r, i) += f * m(r, j);
}

void negate_row(ZMat& m, int i)
{
    for (int c = 0; c < m.cols; ++c) m(i, c) = -m(i, c);
}

} // namespace

SnfResult smith_normal_form(const ZMat& m)
{
    SnfResult res;
    res.D = m;
    res.U = ZMat::identity(m.rows);
    res.V = ZMat::identity(m.cols);
    ZMat& D = res.D;
    ZMat& U = res.U;
    ZMat& V = res.V;

    const int nmin = std::min(m.rows, m.cols);
    for (int s = 0; s < nmin; ++s) {
        // Move a minimal nonzero entry of the trailing block to (s,s), then
        // shrink it by remainders until it divides its whole row and column.
        for (;;) {
            int pi = -1, pj = -1;
            Int best = 0;
            for (int i = s; i < D.rows; ++i)
                for (int j = s; j < D.cols; ++j) {
                    if (D(i, j) == 0) continue;
                    Int v = abs(D(i, j));
                    if (pi < 0 || v < best) { best = v; pi = i; pj = j; }
                }
            if (pi < 0) break; // trailing block all zero
            swap_rows(D, s, pi); swap_rows(U, s, pi);
            swap_cols(D, s, pj); swap_cols(V, s, pj);

            bool clean = true;
            for (int i = s + 1; i < D.rows; ++i) {
                if (D(i, s) == 0) continue;
                Int q = D(i, s) / D(s, s);
                if (q != 0) { add_row(D, i, s, -q); add_row(U, i, s, -q); }
                if (D(i, s) != 0) clean = false;
            }
            for (int j = s + 1; j < D.cols; ++j) {
                if (D(s, j) == 0) continue;
                Int q = D(s, j) / D(s, s);
                if (q != 0) { add_col(D, j, s, -q); add_col(V, j, s, -q); }
                if (D(s, j) != 0) clean = false;
            }
            if (!clean) continue;

            // Entry divides trailing block? If not, fold the offending row in.
            bool divides = true;
            for (int i = s + 1; i < D.rows && divides; ++i)
                for (int j = s + 1; j < D.cols; ++j)
                    if (D(i, j) % D(s, s) != 0) {
                        add_row(D, s, i, Int(1)); add_row(U, s, i, Int(1));
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        if (D(s, s) < 0) { negate_row(D, s); negate_row(U, s); }
    }
    return res;
}

LatticeIndex lattice_index(const ZMat& generators)
{
    const int n = generators.cols;
    if (n == 0) return finite_index(1);
    SnfResult s = smith_normal_form(generators);
    Int idx = 1;
    int r = 0;
    const int nmin = std::min(s.D.rows, s.D.cols);
    for (int i = 0; i < nmin; ++i)
        if (s.D(i, i) != 0) { idx *= s.D(i, i); ++r; }
    if (r < n) return infinite_index();
    return finite_index(idx);
}

PrimitivePart primitive_part(const ZVec& v)
{
    Int g = 0;
    for (const auto& x : v) g = gcd(g, x);
    if (g == 0) throw std::invalid_argument("primitive_part: zero vector");
    PrimitivePart out;
    out.g = g;
    out.p.resize(v.size());
    for (size_t i = 0; i < v.size(); ++i) out.p[i] = v[i] / g;
    return out;
}

ZMat hermite_normal_form(const ZMat& m)
{
    std::vector<ZVec> rows;
    for (int i = 0; i < m.rows; ++i) rows.push_back(m.row(i));
    const int n = m.cols;
    int r0 = 0;
    for (int col = 0; col < n && r0 < int(rows.size()); ++col) {
        for (;;) {
            int best = -1;
            for (int i = r0; i < int(rows.size()); ++i) {
                if (rows[size_t(i)][size_t(col)] == 0) continue;
                if (best < 0 || abs(rows[size_t(i)][size_t(col)]) < abs(rows[size_t(best)][size_t(col)]))
                    best = i;
            }
            if (best < 0) break;
            std::swap(rows[size_t(r0)], rows[size_t(best)]);
            bool clean = true;
            for (int i = r0 + 1; i < int(rows.size()); ++i) {
                Int a = rows[size_t(i)][size_t(col)];
                if (a == 0) continue;
                Int q = a / rows[size_t(r0)][size_t(col)];
                for (int j = 0; j < n; ++j) rows[size_t(i)][size_t(j)] -= q * rows[size_t(r0)][size_t(j)];
                if (rows[size_t(i)][size_t(col)] != 0) clean = false;
            }
            if (clean) break;
        }
        if (rows[size_t(r0)][size_t(col)] == 0) continue;
        if (rows[size_t(r0)][size_t(col)] < 0)
            for (int j = 0; j < n; ++j) rows[size_t(r0)][size_t(j)] = -rows[size_t(r0)][size_t(j)];
        const Int& p = rows[size_t(r0)][size_t(col)];
        for (int i = 0; i < r0; ++i) {
            Int a = rows[size_t(i)][size_t(col)];
            Int q = a / p;
            if (a - q * p < 0) q -= 1;
            if (q == 0) continue;
            for (int j = 0; j < n; ++j) rows[size_t(i)][size_t(j)] -= q * rows[size_t(r0)][size_t(j)];
        }
        ++r0;
    }
    ZMat out(r0, n);
    for (int i = 0; i < r0; ++i)
        for (int j = 0; j < n; ++j) out(i, j) = rows[size_t(i)][size_t(j)];
    return out;
}

ZMat saturate_rowspace(const ZMat& m)
{
    SnfResult s = smith_normal_form(m);
    int r = 0;
    const int nmin = std::min(s.D.rows, s.D.cols);
    for (int i = 0; i < nmin; ++i)
        if (s.D(i, i) != 0) ++r;
    // m = U^-1 D V^-1; the Q-span of rows of m is spanned by the first r rows
    // of V^-1, and those rows generate the saturated lattice.
    ZMat vinv = z_inverse_unimodular(s.V);
    ZMat out(r, m.cols);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < m.cols; ++j) out(i, j) = vinv(i, j);
    return out;
}

ZMat integer_kernel(const ZMat& m)
{
    SnfResult s = smith_normal_form(m);
    int r = 0;
    const int nmin = std::min(s.D.rows, s.D.cols);
    for (int i = 0; i < nmin; ++i)
        if (s.D(i, i) != 0) ++r;
    ZMat out(m.cols - r, m.cols);
    for (int k = r; k < m.cols; ++k)
        for (int j = 0; j < m.cols; ++j) out(k - r, j) = s.V(j, k);
    return out;
}

LatticeQuotientGroup solve_torus_congruence(const ZMat& A, int unknowns)
{
    LatticeQuotientGroup g;
    if (A.rows == 0) {
        g.dim = unknowns;
        return g;
    }
    if (A.cols != unknowns) throw std::invalid_argument("solve_torus_congruence: shape mismatch");
    SnfResult s = smith_normal_form(A);
    int r = 0;
    const int nmin = std::min(s.D.rows, s.D.cols);
    for (int i = 0; i < nmin; ++i) {
        if (s.D(i, i) == 0) continue;
        ++r;
        if (s.D(i, i) != 1) {
            g.cyclic_factors.push_back(s.D(i, i));
            g.torsion_order *= s.D(i, i);
        }
    }
    g.dim = unknowns - r;
    return g;
}

} // namespace tropikit
