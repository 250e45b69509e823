#include "tropikit/subspace.hpp"

namespace tropikit {

RationalSubspace::RationalSubspace(int ambient, const std::vector<QVec>& spanning)
    : ambient_(ambient)
{
    QMat m(int(spanning.size()), ambient);
    for (int i = 0; i < m.rows; ++i) {
        if (int(spanning[i].size()) != ambient)
            throw std::invalid_argument("subspace: vector dimension mismatch");
        m.set_row(i, spanning[i]);
    }
    std::vector<int> pivots = rref(m);
    basis_ = QMat(int(pivots.size()), ambient);
    for (int i = 0; i < basis_.rows; ++i) basis_.set_row(i, m.row(i));
}

RationalSubspace RationalSubspace::full(int ambient)
{
    RationalSubspace s(ambient);
    s.basis_ = QMat::identity(ambient);
    return s;
}

bool RationalSubspace::contains(const QVec& v) const
{
    if (int(v.size()) != ambient_) throw std::invalid_argument("subspace contains: dimension mismatch");
    QVec r = v;
    for (int i = 0; i < basis_.rows; ++i) {
        // basis rows are rref: locate the pivot and eliminate it from r
        int p = -1;
        for (int j = 0; j < ambient_; ++j)
            if (basis_(i, j) != 0) { p = j; break; }
        if (p < 0) continue;
        if (r[p] == 0) continue;
        Rational f = r[p] / basis_(i, p);
        for (int j = 0; j < ambient_; ++j) r[j] -= f * basis_(i, j);
    }
    return is_zero(r);
}

bool RationalSubspace::contains(const RationalSubspace& other) const
{
    for (int i = 0; i < other.basis_.rows; ++i)
        if (!contains(other.basis_.row(i))) return false;
    return true;
}

RationalSubspace RationalSubspace::sum(const RationalSubspace& other) const
{
    if (ambient_ != other.ambient_) throw std::invalid_argument("subspace sum: ambient mismatch");
    std::vector<QVec> rows;
    for (int i = 0; i < basis_.rows; ++i) rows.push_back(basis_.row(i));
    for (int i = 0; i < other.basis_.rows; ++i) rows.push_back(other.basis_.row(i));
    return RationalSubspace(ambient_, rows);
}

RationalSubspace RationalSubspace::annihilator() const
{
    QMat k = kernel_basis(basis_);
    std::vector<QVec> rows;
    for (int i = 0; i < k.rows; ++i) rows.push_back(k.row(i));
    return RationalSubspace(ambient_, rows);
}

RationalSubspace RationalSubspace::intersect(const RationalSubspace& other) const
{
    return annihilator().sum(other.annihilator()).annihilator();
}

bool is_generic(const QVec& v, const std::vector<RationalSubspace>& forbidden)
{
    for (const auto& s : forbidden) {
        if (!s.is_proper())
            throw std::invalid_argument("is_generic: forbidden subspace is not proper");
        if (s.contains(v)) return false;
    }
    return true;
}

QVec sample_generic(int ambient, const std::vector<RationalSubspace>& forbidden, std::mt19937_64& rng)
{
    std::uniform_int_distribution<long> dist(1000003, 2000003);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        QVec v(ambient);
        for (int i = 0; i < ambient; ++i) v[i] = Rational(Int(dist(rng)));
        bool coprime = true;
        for (int i = 0; i < ambient && coprime; ++i)
            for (int j = i + 1; j < ambient; ++j)
                if (gcd(rat_num(v[i]), rat_num(v[j])) != 1) { coprime = false; break; }
        if (!coprime) continue;
        if (is_generic(v, forbidden)) return v;
    }
    throw std::runtime_error("sample_generic: no generic vector found");
}

} // namespace tropikit
