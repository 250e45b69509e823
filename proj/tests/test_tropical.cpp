#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "tropikit/scenes.hpp"

#include <algorithm>
#include <stdexcept>

using namespace tropikit;
using scenes::GraphScene;

namespace {

ZVec zv(const std::vector<int>& v)
{
    ZVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = v[i];
    return out;
}

QVec qv(const std::vector<Rational>& v)
{
    return QVec(v.begin(), v.end());
}

bool mentions(const GraphReport& r, const std::string& needle)
{
    return std::any_of(r.violations.begin(), r.violations.end(), [&](const std::string& s) {
        return s.find(needle) != std::string::npos;
    });
}

TropVertex piece_vertex(int id, int piece)
{
    TropVertex v;
    v.id = id;
    v.polytope = piece;
    return v;
}

TropEdge node_edge(int id, int v_plus, int v_minus, ZVec slope)
{
    TropEdge e;
    e.id = id;
    e.v_plus = v_plus;
    e.v_minus = v_minus;
    e.slope = std::move(slope);
    return e;
}

TropEdge leaf_edge(int id, int vertex, ZVec slope, EdgeClass cls)
{
    TropEdge e;
    e.id = id;
    e.v_minus = vertex;
    e.cls = cls;
    e.slope = std::move(slope);
    return e;
}

Int framing_product(const SymmetryInfo& si)
{
    Int p = 1;
    for (const auto& [edge, n] : si.framing_orders) p *= n;
    return p;
}

} // namespace

TEST_CASE("three-valent star is rigid with a forced center")
{
    GraphScene s = scenes::star_graph_three();
    const Decomposition& d = s.cut.decomposition;

    CHECK(s.graph.edges_at(0).size() == 3);
    CHECK(s.graph.vertex(3)->polytope == s.cut.member({-1, 1}));
    CHECK(s.graph.edge(2)->slope == zv({2, -1}));

    REQUIRE(validate_tropical(s.graph, d, s.complex).ok);

    WeightCone w = weight_cone(s.graph, d, s.complex);
    REQUIRE(!w.empty);
    CHECK(w.dim == 0);
    CHECK(w.vertex_part(w.anchor, 0) == qv({Rational(1, 3), Rational(1, 3)}));
    CHECK(w.vertex_part(w.anchor, 2) == qv({0, 1}));

    SymmetryInfo si = symmetry_group(s.graph, d);
    CHECK(si.dim == 0);
    CHECK(si.component_count == 3);
    CHECK(si.framed_dim == 0);
    CHECK(si.framed_component_count == 3);
    CHECK(si.order_str() == "3");
    CHECK(si.finite());
    CHECK(is_rigid(s.graph, d));

    for (const auto& v : s.graph.vertices) {
        BalanceReport b = check_balancing(s.graph, d, v.id);
        CHECK(b.ok);
        CHECK(b.balanced);
    }
}

TEST_CASE("two-valent star is rigid with order-two symmetry")
{
    GraphScene s = scenes::star_graph_two();
    const Decomposition& d = s.cut.decomposition;
    REQUIRE(validate_tropical(s.graph, d, s.complex).ok);

    WeightCone w = weight_cone(s.graph, d, s.complex);
    CHECK(w.dim == 0);
    CHECK(w.anchor == qv({Rational(1, 2), Rational(1, 2), 0, 1, 0, 0}));

    SymmetryInfo si = symmetry_group(s.graph, d);
    CHECK(si.dim == 0);
    CHECK(si.component_count == 2);
    CHECK(si.framed_component_count == 2);
    CHECK(is_rigid(s.graph, d));
    for (const auto& v : s.graph.vertices) CHECK(check_balancing(s.graph, d, v.id).balanced);
}

TEST_CASE("negated slope leaves no weight")
{
    GraphScene s = scenes::star_graph_infeasible();
    GraphReport r = validate_tropical(s.graph, s.cut.decomposition, s.complex);
    CHECK(!r.ok);
    CHECK(mentions(r, "no weight"));

    WeightCone w = weight_cone(s.graph, s.cut.decomposition, s.complex);
    CHECK(w.empty);
    CHECK(w.dim == -1);
}

TEST_CASE("structural validation rejects malformed graphs")
{
    GraphScene s = scenes::star_graph_three();
    const Decomposition& d = s.cut.decomposition;

    SUBCASE("cycles")
    {
        s.graph.edges.push_back(node_edge(3, 1, 2, zv({0, 0})));
        CHECK(mentions(validate_tropical(s.graph, d, s.complex), "cycle"));
    }
    SUBCASE("disconnected")
    {
        s.graph.edges.pop_back();
        CHECK(mentions(validate_tropical(s.graph, d, s.complex), "not connected"));
    }
    SUBCASE("loops")
    {
        s.graph.edges[0] = node_edge(0, 1, 1, zv({-1, -1}));
        CHECK(mentions(validate_tropical(s.graph, d, s.complex), "loop"));
    }
    SUBCASE("unresolved endpoint")
    {
        s.graph.edges[0].v_plus = 9;
        CHECK(mentions(validate_tropical(s.graph, d, s.complex), "unresolved"));
    }
    SUBCASE("duplicate identifiers")
    {
        s.graph.vertices[1].id = 0;
        CHECK(mentions(validate_tropical(s.graph, d, s.complex), "duplicate"));
    }
    SUBCASE("zero slope across distinct pieces")
    {
        s.graph.edges[0].slope = zv({0, 0});
        CHECK(mentions(validate_tropical(s.graph, d, s.complex), "joins different pieces"));
    }
    SUBCASE("markings sit on interior leaves")
    {
        s.graph.markings = {{0, 1}};
        CHECK(mentions(validate_tropical(s.graph, d, s.complex), "interior leaf"));
    }
    SUBCASE("tangencies are positive")
    {
        s.graph.edges.push_back(leaf_edge(3, 1, zv({0, 0}), EdgeClass::interior_leaf));
        s.graph.markings = {{3, 0}};
        CHECK(mentions(validate_tropical(s.graph, d, s.complex), "nonpositive tangency"));
    }
    SUBCASE("leaf slopes live in the lattice of their piece")
    {
        s.graph.edges.push_back(leaf_edge(3, 1, zv({0, 1}), EdgeClass::interior_leaf));
        CHECK(mentions(validate_tropical(s.graph, d, s.complex), "lattice of its piece"));
    }
}

TEST_CASE("boundary validation tracks disks and the root")
{
    SUBCASE("boundary edges carry zero slope")
    {
        GraphScene s = scenes::disk_pair_graph();
        s.graph.edges[0].slope = zv({1, 0});
        CHECK(mentions(validate_tropical(s.graph, s.cut.decomposition, s.complex),
                       "nonzero slope"));
    }
    SUBCASE("boundary edges touch only disks")
    {
        GraphScene s = scenes::disk_pair_graph();
        s.graph.vertices[1].sort = VertexSort::sphere;
        CHECK(mentions(validate_tropical(s.graph, s.cut.decomposition, s.complex),
                       "sphere vertex"));
    }
    SUBCASE("disks require a root leaf")
    {
        GraphScene s = scenes::single_disk_graph();
        s.graph.root_leaf = -1;
        CHECK(mentions(validate_tropical(s.graph, s.cut.decomposition, s.complex),
                       "no root leaf"));
    }
    SUBCASE("the root sits on a disk")
    {
        GraphScene s = scenes::single_disk_graph();
        s.graph.vertices[0].sort = VertexSort::sphere;
        CHECK(mentions(validate_tropical(s.graph, s.cut.decomposition, s.complex),
                       "sphere vertex"));
    }
    SUBCASE("disks form one subtree around the root")
    {
        GraphScene s = scenes::star_graph_three();
        s.graph.vertices[1].sort = VertexSort::disk;
        s.graph.vertices[2].sort = VertexSort::disk;
        s.graph.edges.push_back(leaf_edge(3, 1, zv({0, 0}), EdgeClass::boundary_leaf));
        s.graph.root_leaf = 3;
        CHECK(mentions(validate_tropical(s.graph, s.cut.decomposition, s.complex),
                       "connected subtree"));
    }
}

TEST_CASE("edges across pieces that do not meet are rejected")
{
    auto lc = scenes::line_two_cuts();
    DualComplex dc = build_dual_complex(lc.gluing, lc.decomposition);
    TropicalGraph g;
    g.vertices = {piece_vertex(0, 0), piece_vertex(1, 4)};
    g.edges = {node_edge(0, 1, 0, zv({1}))};
    CHECK(mentions(validate_tropical(g, lc.decomposition, dc), "do not meet"));
}

TEST_CASE("slopes must annihilate the directions of the shared face")
{
    GraphScene s = scenes::star_graph_three();
    const Decomposition& d = s.cut.decomposition;
    TropicalGraph g;
    g.vertices = {piece_vertex(0, s.cut.member({0, 1})), piece_vertex(1, s.cut.member({1, 1}))};
    g.edges = {node_edge(0, 1, 0, zv({1, 0}))};
    CHECK(validate_tropical(g, d, s.complex).ok);

    g.edges[0].slope = zv({1, 1});
    CHECK(mentions(validate_tropical(g, d, s.complex), "lattice of the shared face"));
}

TEST_CASE("weight families slide where the graph is loose")
{
    SUBCASE("parallel neck")
    {
        GraphScene s = scenes::parallel_neck_graph();
        const Decomposition& d = s.cut.decomposition;
        REQUIRE(validate_tropical(s.graph, d, s.complex).ok);

        WeightCone w = weight_cone(s.graph, d, s.complex);
        CHECK(w.dim == 1);
        CHECK(w.set.contains(qv({0, 0, 0, 0, 1, 1})));
        CHECK(w.set.contains(qv({1, 1, 0, 0, 1, 1})));
        CHECK(!w.set.contains(qv({1, 0, 0, 0, 1, 1})));
        QVec c = w.vertex_part(w.anchor, 0);
        CHECK(c[0] == c[1]);

        SymmetryInfo si = symmetry_group(s.graph, d);
        CHECK(si.dim == 1);
        CHECK(si.component_count == 1);
        CHECK(si.order_str() == "infinite");
        CHECK(!is_rigid(s.graph, d));
        for (const auto& v : s.graph.vertices) CHECK(check_balancing(s.graph, d, v.id).balanced);
    }
    SUBCASE("pinned center with a loose arm")
    {
        GraphScene s = scenes::split_center_graph();
        const Decomposition& d = s.cut.decomposition;
        REQUIRE(validate_tropical(s.graph, d, s.complex).ok);

        WeightCone w = weight_cone(s.graph, d, s.complex);
        CHECK(w.dim == 1);
        const QVec pinned = qv({Rational(1, 3), Rational(1, 3)});
        CHECK(w.vertex_part(w.anchor, 0) == pinned);
        CHECK(w.set.contains(qv({Rational(1, 3), Rational(1, 3), 1, 0, 0, 0, 0, 1, 1, 0})));
        CHECK(w.set.contains(qv({Rational(1, 3), Rational(1, 3), Rational(1, 3), Rational(1, 3),
                                 0, 0, 0, 1, 1, 0})));
        CHECK(!w.set.contains(qv({Rational(1, 3), Rational(1, 3), 0, Rational(1, 2),
                                  0, 0, 0, 1, 1, 0})));

        SymmetryInfo si = symmetry_group(s.graph, d);
        CHECK(si.dim == 1);
        CHECK(si.component_count == 3);
    }
}

TEST_CASE("disk graphs validate and stay put")
{
    for (GraphScene s : {scenes::single_disk_graph(), scenes::disk_pair_graph()}) {
        const Decomposition& d = s.cut.decomposition;
        REQUIRE(validate_tropical(s.graph, d, s.complex).ok);
        WeightCone w = weight_cone(s.graph, d, s.complex);
        CHECK(w.dim == 0);
        SymmetryInfo si = symmetry_group(s.graph, d);
        CHECK(si.dim == 0);
        CHECK(si.component_count == 1);
        for (const auto& v : s.graph.vertices) CHECK(check_balancing(s.graph, d, v.id).balanced);
    }
}

TEST_CASE("pinned center graph is rigid of order two")
{
    GraphScene s = scenes::pinned_center_graph();
    const Decomposition& d = s.cut.decomposition;
    REQUIRE(validate_tropical(s.graph, d, s.complex).ok);

    WeightCone w = weight_cone(s.graph, d, s.complex);
    CHECK(w.dim == 0);
    CHECK(w.vertex_part(w.anchor, 0) == qv({Rational(1, 2), Rational(1, 2)}));

    SymmetryInfo si = symmetry_group(s.graph, d);
    CHECK(si.dim == 0);
    CHECK(si.component_count == 2);
    CHECK(si.framed_component_count == 2);
    for (const auto& v : s.graph.vertices) CHECK(check_balancing(s.graph, d, v.id).balanced);
}

TEST_CASE("symmetry dimension matches the weight family across the library")
{
    const std::vector<GraphScene> library = {
        scenes::star_graph_three(),   scenes::star_graph_two(),
        scenes::split_center_graph(), scenes::single_disk_graph(),
        scenes::parallel_neck_graph(), scenes::pinned_center_graph(),
        scenes::disk_pair_graph(),
    };
    for (size_t i = 0; i < library.size(); ++i) {
        INFO("library graph ", i);
        const GraphScene& s = library[i];
        CHECK(symmetry_group(s.graph, s.cut.decomposition).dim ==
              weight_cone(s.graph, s.cut.decomposition, s.complex).dim);
    }
}

TEST_CASE("framed order is the plain order times the framings when finite")
{
    const std::vector<GraphScene> rigid = {
        scenes::star_graph_three(), scenes::star_graph_two(),
        scenes::pinned_center_graph(), scenes::single_disk_graph(),
        scenes::disk_pair_graph(),
    };
    for (size_t i = 0; i < rigid.size(); ++i) {
        INFO("rigid graph ", i);
        SymmetryInfo si = symmetry_group(rigid[i].graph, rigid[i].cut.decomposition);
        REQUIRE(si.finite());
        CHECK(si.framed_component_count == si.component_count * framing_product(si));
    }
}

TEST_CASE("a doubled slope doubles both orders")
{
    GraphScene s = scenes::star_graph_three();
    TropicalGraph g;
    g.vertices = {piece_vertex(0, s.cut.member({1, 1})), piece_vertex(1, s.cut.member({-1, -1}))};
    g.edges = {node_edge(0, 1, 0, zv({2, 2}))};
    REQUIRE(validate_tropical(g, s.cut.decomposition, s.complex).ok);

    SymmetryInfo si = symmetry_group(g, s.cut.decomposition);
    CHECK(si.dim == 0);
    CHECK(si.component_count == 2);
    CHECK(si.framing_orders.at(0) == 2);
    CHECK(si.framed_component_count == 4);
    CHECK(si.framed_order_str() == "4");
}

TEST_CASE("balancing compares against the vertical degree")
{
    GraphScene s = scenes::star_graph_three();
    const Decomposition& d = s.cut.decomposition;

    s.graph.vertices[0].chern = zv({1, 0});
    BalanceReport off = check_balancing(s.graph, d, 0);
    CHECK(off.ok);
    CHECK(!off.balanced);

    s.graph.vertices[0].chern.reset();
    BalanceReport missing = check_balancing(s.graph, d, 0);
    CHECK(!missing.ok);
    CHECK(!missing.error.empty());

    s.graph.vertices[0].horizontally_constant = true;
    CHECK(check_balancing(s.graph, d, 0).balanced);

    s.graph.vertices[1].chern = zv({5, 7});
    CHECK(check_balancing(s.graph, d, 1).balanced);

    CHECK(!check_balancing(s.graph, d, 9).ok);
}

TEST_CASE("collapsing the middle edge rebuilds the star")
{
    GraphScene s = scenes::split_center_graph();
    const Decomposition& d = s.cut.decomposition;

    CollapseResult c = collapse_edges(s.graph, {3}, d);
    REQUIRE(c.report.ok);
    CHECK(!c.map.trivial);
    CHECK(c.map.collapsed == std::vector<int>{3});
    CHECK(c.map.vertex_map.at(1) == 0);
    CHECK(c.map.vertex_map.at(4) == 4);
    REQUIRE(c.graph.vertices.size() == 4);
    CHECK(c.graph.vertex(0)->polytope == s.cut.member({0, 0}));
    CHECK(c.graph.edge(2)->v_minus == 0);
    CHECK(validate_tropical(c.graph, d, s.complex).ok);
    CHECK(symmetry_group(c.graph, d).component_count == 3);

    WeightCone rel = relative_weight_cone(s.graph, c.graph, c.map, d, s.complex);
    CHECK(rel.dim == 1);
    CHECK(rel.set.contains(qv({0, 0, 2, -1, 0, 0, 0, 0, 0, 0})));
    CHECK(!rel.set.contains(qv({0, 0, -2, 1, 0, 0, 0, 0, 0, 0})));

    CHECK(symmetry_group(s.graph, d).dim >= 1);

    WeightCone wp = weight_cone(s.graph, d, s.complex);
    WeightCone wt = weight_cone(c.graph, d, s.complex);
    REQUIRE(wt.dim == 0);
    auto difference = [&](const QVec& p) {
        QVec out;
        for (int id : wp.vertex_ids) {
            QVec a = wp.vertex_part(p, id);
            QVec b = wt.vertex_part(wt.anchor, c.map.vertex_map.at(id));
            for (size_t j = 0; j < a.size(); ++j) out.push_back(a[j] - b[j]);
        }
        return out;
    };
    CHECK(rel.set.contains(difference(wp.anchor)));
    for (const auto& p : wp.set.vertices) CHECK(rel.set.contains(difference(p)));
}

TEST_CASE("collapsing a neck edge lands on the larger piece")
{
    GraphScene s = scenes::parallel_neck_graph();
    const Decomposition& d = s.cut.decomposition;

    CollapseResult c = collapse_edges(s.graph, {0}, d);
    REQUIRE(c.report.ok);
    CHECK(!c.map.trivial);
    REQUIRE(c.graph.vertices.size() == 2);
    CHECK(c.graph.vertex(0)->polytope == s.cut.member({1, 1}));
    CHECK(*c.graph.vertex(0)->chern == zv({1, 1}));
    CHECK(validate_tropical(c.graph, d, s.complex).ok);

    WeightCone rel = relative_weight_cone(s.graph, c.graph, c.map, d, s.complex);
    CHECK(rel.dim == 1);
    CHECK(rel.set.contains(qv({1, 1, 0, 0, 0, 0})));
    CHECK(!rel.set.contains(qv({-1, -1, 0, 0, 0, 0})));

    CHECK(symmetry_group(s.graph, d).dim >= 1);

    WeightCone wp = weight_cone(s.graph, d, s.complex);
    WeightCone wt = weight_cone(c.graph, d, s.complex);
    REQUIRE(wt.dim == 0);
    for (const auto& p : wp.set.vertices) {
        QVec diff;
        for (int id : wp.vertex_ids) {
            QVec a = wp.vertex_part(p, id);
            QVec b = wt.vertex_part(wt.anchor, c.map.vertex_map.at(id));
            for (size_t j = 0; j < a.size(); ++j) diff.push_back(a[j] - b[j]);
        }
        CHECK(rel.set.contains(diff));
    }
}

TEST_CASE("zero-slope collapse is trivial and motionless")
{
    GraphScene s = scenes::disk_pair_graph();
    const Decomposition& d = s.cut.decomposition;

    CollapseResult c = collapse_edges(s.graph, {0}, d);
    REQUIRE(c.report.ok);
    CHECK(c.map.trivial);
    CHECK(c.graph.vertex(0)->sort == VertexSort::disk);
    CHECK(c.graph.edge(1)->v_minus == 0);
    CHECK(validate_tropical(c.graph, d, s.complex).ok);

    WeightCone rel = relative_weight_cone(s.graph, c.graph, c.map, d, s.complex);
    CHECK(rel.dim == 0);
    CHECK(rel.set.contains(qv({0, 0, 0, 0})));
}

TEST_CASE("collapse rejects bad edge lists")
{
    GraphScene s = scenes::star_graph_three();
    CHECK(!collapse_edges(s.graph, {7}, s.cut.decomposition).report.ok);
    CHECK(mentions(collapse_edges(s.graph, {0, 0}, s.cut.decomposition).report, "twice"));

    GraphScene disk = scenes::single_disk_graph();
    CHECK(mentions(collapse_edges(disk.graph, {0}, disk.cut.decomposition).report,
                   "cannot be collapsed"));
}

TEST_CASE("slack edges open a direction at the pinned center")
{
    GraphScene s = scenes::pinned_center_graph();
    const Decomposition& d = s.cut.decomposition;
    CollapseMap id = identity_collapse(s.graph);

    WeightCone tight = relative_weight_cone(s.graph, s.graph, id, d, s.complex);
    CHECK(tight.dim == 0);

    WeightCone slack = relative_weight_cone(s.graph, s.graph, id, d, s.complex, {0});
    CHECK(slack.dim == 1);
    CHECK(slack.set.contains(qv({1, -1, 0, 0, 0, 0, 0, 0})));
    CHECK(slack.set.contains(qv({-1, 1, 0, 0, 0, 0, 0, 0})));
    CHECK(!slack.set.contains(qv({1, 1, 0, 0, 0, 0, 0, 0})));
}

TEST_CASE("relative weights demand a genuine collapse")
{
    GraphScene s = scenes::parallel_neck_graph();
    const Decomposition& d = s.cut.decomposition;
    CollapseResult c = collapse_edges(s.graph, {0}, d);
    REQUIRE(c.report.ok);

    CollapseMap broken = c.map;
    broken.vertex_map.erase(1);
    CHECK_THROWS_AS(relative_weight_cone(s.graph, c.graph, broken, d, s.complex),
                    std::invalid_argument);

    CHECK_THROWS_AS(relative_weight_cone(s.graph, c.graph, c.map, d, s.complex, {0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(relative_weight_cone(s.graph, c.graph, c.map, d, s.complex, {9}),
                    std::invalid_argument);

    CollapseMap wrong_target = c.map;
    wrong_target.vertex_map[2] = 0;
    CHECK_THROWS_AS(relative_weight_cone(s.graph, c.graph, wrong_target, d, s.complex),
                    std::invalid_argument);
}
