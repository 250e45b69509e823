#pragma once

#include "tropikit/matrix.hpp"

namespace tropikit {

struct SnfResult {
    ZMat U; // rows x rows, unimodular
    ZMat D; // diagonal, d1 | d2 | ..., nonnegative
    ZMat V; // cols x cols, unimodular
};

// U * m * V = D with |det U| = |det V| = 1.
SnfResult smith_normal_form(const ZMat& m);

struct LatticeIndex {
    bool finite = false;
    Int value = 0; // meaningful only when finite

    std::string str() const { return finite ? value.str() : "infinite"; }
    bool operator==(const LatticeIndex&) const = default;
};

inline LatticeIndex finite_index(Int v) { return {true, std::move(v)}; }
inline LatticeIndex infinite_index() { return {false, 0}; }

// Index in Z^n of the sublattice generated by the rows of `generators`.
LatticeIndex lattice_index(const ZMat& generators);

struct PrimitivePart {
    ZVec p;
    Int g;
};

// v = g * p with gcd(p) = 1, g > 0.  Throws on the zero vector.
PrimitivePart primitive_part(const ZVec& v);

// Row-style Hermite normal form of the lattice spanned by the rows: echelon
// over Z, positive pivots, entries above each pivot reduced into [0, pivot).
// Zero rows are dropped, so the result is a canonical basis of the row lattice.
ZMat hermite_normal_form(const ZMat& m);

// Basis (rows) of the saturation {x in Z^n : x in Q-span of rows of m}.
ZMat saturate_rowspace(const ZMat& m);

// Rows span the integer kernel {x in Z^n : m x = 0}; the basis is saturated.
ZMat integer_kernel(const ZMat& m);

// Group {x in (C/Z)^N : A x = 0 mod Z^M} = (C*)^dim x product of cyclic groups.
struct LatticeQuotientGroup {
    int dim = 0;             // complex dimension of the identity component
    Int torsion_order = 1;   // number of connected components
    std::vector<Int> cyclic_factors; // nontrivial invariant factors, divisibility order
};

LatticeQuotientGroup solve_torus_congruence(const ZMat& A, int unknowns);

} // namespace tropikit
