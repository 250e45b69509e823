#pragma once

#include "tropikit/split.hpp"

#include <optional>

namespace tropikit {

// Index bookkeeping for one combinatorial type.  Morse indices are listed
// output first, then one per input leaf.  Maslov indices are per vertex of
// the graph (even for spheres).  Multiplicity tuples sit on nonzero-slope
// interior node edges and list the contact orders with the divisors cut out
// at the node; missing entries mean transverse-free nodes.
struct IndexInput {
    TropicalGraph graph;
    std::vector<int> morse;
    std::map<int, int> maslov;
    std::map<int, std::vector<Int>> node_multiplicities;
};

// i(x_0) - sum_i i(x_i) + d - 2 + sum_v I(v) - 2 #{interior nodes surviving
// the gluing} - #{boundary nodes of length zero} - #{boundary nodes of
// infinite length} - 2 sum_markings (tangency - 1).  Gluing collapses the
// nonzero-slope interior nodes and combines Maslov indices through
// chern_glue, so the value is unchanged by such a collapse.
int expected_dimension(const IndexInput& inp);

struct SplitIndex {
    int total = 0;      // matching dropped: 2(dim-1) extra per split edge
    int quotiented = 0; // after dividing by the tropical symmetry torus
};

// Index of a split type: the bookkeeping data refers to the refined graph.
SplitIndex split_index(const SplitType& s, const IndexInput& data, int dim);

// Maslov index of a sphere or disk not contained in a boundary divisor:
// twice the sum of its intersection multiplicities with the divisors.
Int maslov_toric(const std::vector<Int>& multiplicities);

// Lattice pairing of the oriented edge slope with the facet's primitive
// outward normal.  A nonpositive value means the orientation is wrong.
Int node_multiplicity(const ZVec& slope, const ZVec& facet_normal);

// First Chern number across a node: c(+) + c(-) - 2 sum multiplicities.
Int chern_glue(const Int& c_plus, const Int& c_minus,
               const std::vector<Int>& multiplicities);

// Area data of one component: the fiber polytope's facet levels c_j (taken
// from a reduction point interior to the dual polytope, hence positive), the
// area of the projected map, and the divisor contact orders m(z_i, D_j) as
// one row per intersection point.
struct EnergyInput {
    std::vector<Rational> dual_constants;
    Rational horizontal = 0;
    std::vector<std::vector<Int>> nodal_multiplicities;
};

// Vertical area is tallied in units of 2*pi so the arithmetic stays
// rational: total = horizontal + two_pi_units * 2*pi.
struct AreaBreakdown {
    Rational horizontal = 0;
    Rational two_pi_units = 0;
    Rational hofer_constant = 0;
    Rational hofer_bound = 0; // horizontal + c * sum_i |T(z_i)|
};

// The energy identity plus the topological energy bound.  The bound's
// constant is analytic; callers may pick one, the default is max c_j and
// only the shape of the inequality carries meaning.
AreaBreakdown fiber_area(const EnergyInput& inp,
                         std::optional<Rational> hofer_c = std::nullopt);

// Intersection count of a disk with a divisor dual to k times the
// symplectic class: k times the disk area.  A non-integer or negative
// product flags inconsistent inputs.
Int divisor_count(const Int& degree_k, const Rational& area);

} // namespace tropikit
