#pragma once

#include "tropikit/polytope.hpp"

namespace tropikit {

// One face of a Delzant polytope together with its normal-fan cone and a
// saturated lattice basis of the cone's span.
struct FaceCone {
    Polytope face;
    Cone cone;
    std::vector<ZVec> span_lattice;
};

// All faces (the polytope itself through the vertices) with their dual
// cones; the cones assemble into the complete normal fan.  Rejects
// non-Delzant input.
std::vector<FaceCone> face_cones(const Polytope& p);

enum class DisplacedKind { empty, point, higher, degenerate };

struct DisplacedIntersection {
    DisplacedKind kind = DisplacedKind::empty;
    QVec point;         // set when kind == point
    std::string detail; // which certificate failed, when degenerate
};

// Classifies (cone_minus + eta) intersected with cone_plus.  "point" means
// a transversely-cut-out point: complementary dimensions, spans summing to
// the whole space, and the point interior to both relative interiors.  A
// zero-dimensional intersection failing any of those is reported as
// degenerate (the displacement direction is not generic for this pair).
DisplacedIntersection displaced_intersection(const FaceCone& minus,
                                             const FaceCone& plus,
                                             const QVec& eta);

struct GenericityCertificate {
    bool ok = true;
    int minus = -1; // offending pair when not ok
    int plus = -1;
};

// eta must avoid every proper subspace span(cone_i) + span(cone_j).
GenericityCertificate certify_generic(const std::vector<FaceCone>& cones,
                                      const QVec& eta);

struct DiagonalPair {
    int minus = 0; // indices into the face list
    int plus = 0;
    Int multiplicity = 1;
};

struct DiagonalDecomposition {
    std::vector<FaceCone> cones;
    std::vector<DiagonalPair> pairs;
};

// All face pairs whose displaced cones meet in a transverse point, each
// weighted by the index of the sum of the two span lattices in the full
// lattice.  Throws when eta fails the genericity certificate, naming the
// offending pair.
DiagonalDecomposition diagonal_decomposition(const Polytope& p, const QVec& eta);

} // namespace tropikit
