#pragma once

#include "tropikit/dualcomplex.hpp"
#include "tropikit/tropical.hpp"

namespace tropikit {

// A graph broken along a set of "split" edges: `refined` collapses onto
// `base` via `kappa`, except that the split edges survive unchanged and carry
// no matching condition.  The vertices freed by the collapse may move inside
// their pieces, and `cone_direction` picks the side of each split edge the
// deformation is allowed to approach from.
struct SplitType {
    TropicalGraph base;
    TropicalGraph refined;
    CollapseMap kappa;
    std::vector<int> split_edges; // edge ids, present in both graphs
    QVec cone_direction;
};

GraphReport validate_split(const SplitType& s, const Decomposition& d, const DualComplex& dc);

// True when every facet of the piece is itself a piece of the decomposition,
// so cutting along the piece's boundary stays inside the given walls.
bool split_eligible(int member_id, const Decomposition& d);

// Total order on the split edges: sort by the least-numbered marking in the
// subtree hanging off each edge away from the root; on a shared least marking
// the edge whose far vertex is closer to that marking comes first.  Edges
// left unordered by the markings fall back to id order and are reported.
struct SplitOrder {
    std::vector<int> edges;
    bool tie_broken_by_id = false;
    std::string note;
};
SplitOrder order_split_edges(const TropicalGraph& refined, const std::vector<int>& split_edges);

// Vector space of unsigned relative weights: a tangent vector per vertex,
// lying in the direction space of the vertex's piece, with differences across
// every non-split edge proportional to that edge's slope.
struct RelativeWeightSpace {
    int ambient = 0;            // n * |vertices|, in vertex blocks
    std::vector<int> vertex_ids;
    std::vector<QVec> basis;
    bool rational = true;

    int dim() const { return int(basis.size()); }
    QVec vertex_part(const QVec& x, int vertex_id) const;
};
RelativeWeightSpace unsigned_relative_weights(const SplitType& s, const Decomposition& d,
                                              const DualComplex& dc);

// Image of the relative weight cone under the per-split-edge difference maps
// T |-> proj(T(v_plus) - T(v_minus)) where proj is orthogonal projection off
// the edge slope.  One n-dimensional block per split edge, in the order of
// `edges`; each block lies in the hyperplane orthogonal to its slope.
struct DiscrepancyCone {
    int ambient = 0; // n * |split_edges|
    std::vector<int> edges;
    Cone cone;

    int dim() const { return cone.dim(); }
};
DiscrepancyCone discrepancy_cone(const SplitType& s, const Decomposition& d,
                                 const DualComplex& dc);

// Decides whether deformation parameters growing lexicographically along the
// split-edge order can realize the cone direction on every split edge at
// once.  Substituting c_e = t^k (k descending along the order) into each
// facet functional of the discrepancy cone leaves a polynomial in t that must
// vanish identically (equalities) or have positive leading coefficient
// (strict inequalities).  Directions lying in a proper subspace traced out by
// single-edge weight families are rejected as non-generic before deciding.
struct ConeDecision {
    bool generic = false;
    std::string violated_subspace; // set when !generic
    bool satisfied = false;
    std::string obstruction;              // failing functional when !satisfied
    std::vector<std::pair<int, Rational>> witness; // edge id -> c_e when satisfied
};
ConeDecision cone_condition(const SplitType& s, const Decomposition& d, const DualComplex& dc);

// Rigidity of the broken graph: the base is rigid, every zero-slope edge of
// the refined graph is a boundary node of finite nonzero length, all
// tangencies are 1, and the relative weight cone has the expected dimension
// |split edges| * (n - 1).
bool split_rigid(const SplitType& s, const Decomposition& d, const DualComplex& dc);

// Order of the framed symmetry group of the refined graph; requires the
// group to be finite (rigid split types).
Int framed_multiplicity(const SplitType& s, const Decomposition& d);

// Symmetry groups of the connected components of the refined graph with the
// split edges removed, ordered by least vertex id.  Dimensions add up to the
// dimension of the unbroken symmetry group and component counts multiply.
std::vector<SymmetryInfo> symmetry_splitting(const SplitType& s, const Decomposition& d);

// Consistency of the framed/unframed group orders along the split: the
// central factor Z has order prod gcd(slope(e)) over split edges, computed
// both from the gcds and from the torsion of the split-variable subsystem;
// for rigid types the framed group is finite with order divisible by |Z| and
// the unframed group has the expected dimension.
struct ExactSequenceReport {
    bool ok = true;
    Int z_order = 1;          // product of slope gcds
    Int z_torsion = 1;        // torsion of the split-edge subsystem
    Int framed_order = 0;     // 0 when infinite
    int unframed_dim = 0;     // dim of symmetry group without split matching
    int expected_dim = 0;     // |split| * (n - 1)
    std::vector<std::string> violations;
};
ExactSequenceReport exact_sequence_check(const SplitType& s, const Decomposition& d,
                                         const DualComplex& dc);

} // namespace tropikit
