#pragma once

#include "tropikit/dualcomplex.hpp"

#include <string>

namespace tropikit {

enum class VertexSort { disk, sphere };
enum class EdgeClass { interior_node, boundary_node, interior_leaf, boundary_leaf };
enum class LengthClass { zero, finite, infinite };

// A map component living in the piece `polytope`.  The Chern vector of the
// vertical part enters balancing as an ambient representative modulo the
// piece's direction lattice; `horizontally_constant` stands in for zero.
struct TropVertex {
    int id = -1;
    int polytope = -1;
    VertexSort sort = VertexSort::sphere;
    std::optional<ZVec> chern;
    bool horizontally_constant = false;
};

// Edges are oriented (v_plus, v_minus).  Node edges carry both endpoints;
// leaves dangle at v_minus (v_plus = -1) with the slope pointing away from
// the graph.  Boundary nodes carry a length class.
struct TropEdge {
    int id = -1;
    int v_plus = -1;
    int v_minus = -1;
    EdgeClass cls = EdgeClass::interior_node;
    ZVec slope;
    std::optional<LengthClass> length;

    bool is_node() const
    {
        return cls == EdgeClass::interior_node || cls == EdgeClass::boundary_node;
    }
    bool is_leaf() const { return !is_node(); }
    bool is_boundary() const
    {
        return cls == EdgeClass::boundary_node || cls == EdgeClass::boundary_leaf;
    }
};

struct TropMarking {
    int edge = -1;    // an interior leaf
    int tangency = 1; // contact order with the tropical divisor
};

struct TropicalGraph {
    std::vector<TropVertex> vertices;
    std::vector<TropEdge> edges;
    std::vector<TropMarking> markings;
    int root_leaf = -1; // boundary leaf carrying the output; -1 for closed graphs

    const TropVertex* vertex(int id) const;
    const TropEdge* edge(int id) const;
    std::vector<int> edges_at(int vertex_id) const;
};

struct GraphReport {
    bool ok = true;
    std::vector<std::string> violations;

    void fail(std::string v)
    {
        ok = false;
        violations.push_back(std::move(v));
    }
};

// Structural invariants (tree shape, boundary subtree with root, zero slope
// on boundary edges, slopes in the lattice of the shared face) plus
// nonemptiness of the weight set, decided by exact arithmetic.
GraphReport validate_tropical(const TropicalGraph& g, const Decomposition& d,
                              const DualComplex& dc);

// Weight set of a graph: one point of R^ambient per vertex, concatenated in
// block order.  Also reused for cones of relative weights, where each block
// holds a displacement instead of a position.
struct WeightCone {
    int ambient = 0;             // coordinates per vertex block
    std::vector<int> vertex_ids; // block order
    Polytope set;                // subset of R^{ambient * blocks}
    bool empty = true;
    int dim = -1;
    QVec anchor; // relative-interior point when nonempty

    int block_of(int vertex_id) const;
    QVec vertex_part(const QVec& point, int vertex_id) const;
};

// Points of the dual complex, one per vertex, with T(v+) - T(v-) on the ray
// R_{>=0} T(e) for every node edge.
WeightCone weight_cone(const TropicalGraph& g, const Decomposition& d,
                       const DualComplex& dc);

// Solutions (g_v, z_e) of g_{v+} g_{v-}^{-1} = z_e^{T(e)} with g_v in the
// subtorus attached to the vertex piece.  The framed group replaces each z_e
// by an n_e-th root, one per node edge of nonzero slope.
struct SymmetryInfo {
    int dim = 0;             // complex dimension of the identity component
    Int component_count = 1; // always finite
    std::map<int, Int> framing_orders; // node edge id -> n_e
    int framed_dim = 0;
    Int framed_component_count = 1;

    bool finite() const { return dim == 0; }
    std::string order_str() const;
    std::string framed_order_str() const;
};

SymmetryInfo symmetry_group(const TropicalGraph& g, const Decomposition& d);

// Finite tropical symmetry group; equivalently the weight set is a point.
bool is_rigid(const TropicalGraph& g, const Decomposition& d);

struct BalanceReport {
    bool ok = false; // inputs adequate
    bool balanced = false;
    std::string error;
};

// Sum of outgoing slopes at the vertex (+T(e) when the vertex is v_minus,
// -T(e) when it is v_plus, leaves as outgoing) against the Chern vector,
// compared after projection modulo the piece's directions.
BalanceReport check_balancing(const TropicalGraph& g, const Decomposition& d,
                              int vertex_id);

struct CollapseMap {
    std::map<int, int> vertex_map; // source vertex id -> target vertex id
    std::vector<int> collapsed;    // collapsed edge ids of the source graph
    bool trivial = false;          // all collapsed slopes zero
};

struct CollapseResult {
    GraphReport report;
    TropicalGraph graph;
    CollapseMap map;
};

// Quotient by the listed node edges.  Every merged class keeps its least
// vertex id and lands on the smallest member containing all its pieces;
// surviving edges keep ids and slopes.
CollapseResult collapse_edges(const TropicalGraph& g, const std::vector<int>& edge_ids,
                              const Decomposition& d);

// The identity collapse of a graph onto itself.
CollapseMap identity_collapse(const TropicalGraph& g);

// Cone of relative weights for a collapse gprime -> g: per source vertex a
// displacement in the tangent cone of its cell along the target vertex's
// cell, with differences on R_{>=0} T(e) for collapsed edges and R T(e) for
// surviving ones.  Edges listed in split_edges carry no difference condition.
// Throws std::invalid_argument when kappa is not a collapse of gprime onto g.
WeightCone relative_weight_cone(const TropicalGraph& gprime, const TropicalGraph& g,
                                const CollapseMap& kappa, const Decomposition& d,
                                const DualComplex& dc,
                                const std::vector<int>& split_edges = {});

} // namespace tropikit
