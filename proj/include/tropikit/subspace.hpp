#pragma once

#include "tropikit/matrix.hpp"

#include <random>

namespace tropikit {

// Linear subspace of Q^n, stored as a reduced-row-echelon basis so that
// equality is plain comparison.
class RationalSubspace {
public:
    RationalSubspace() = default;
    explicit RationalSubspace(int ambient) : ambient_(ambient), basis_(0, ambient) {}
    RationalSubspace(int ambient, const std::vector<QVec>& spanning);

    static RationalSubspace full(int ambient);

    int ambient_dimension() const { return ambient_; }
    int dim() const { return basis_.rows; }
    bool is_proper() const { return dim() < ambient_; }
    const QMat& basis() const { return basis_; }

    bool contains(const QVec& v) const;
    bool contains(const RationalSubspace& other) const;
    bool operator==(const RationalSubspace& o) const { return ambient_ == o.ambient_ && basis_ == o.basis_; }

    RationalSubspace sum(const RationalSubspace& other) const;
    RationalSubspace intersect(const RationalSubspace& other) const;
    // Orthogonal complement under the standard pairing.
    RationalSubspace annihilator() const;

private:
    int ambient_ = 0;
    QMat basis_; // rref rows
};

bool is_generic(const QVec& v, const std::vector<RationalSubspace>& forbidden);

// Samples a vector with large pairwise-coprime coordinates until it avoids
// every listed proper subspace.
QVec sample_generic(int ambient, const std::vector<RationalSubspace>& forbidden, std::mt19937_64& rng);

} // namespace tropikit
