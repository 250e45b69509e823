#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "tropikit/index_energy.hpp"
#include "tropikit/scenes.hpp"

#include <random>
#include <stdexcept>

using namespace tropikit;
using scenes::SplitScene;

namespace {

ZVec zv(const std::vector<int>& v)
{
    return ZVec(v.begin(), v.end());
}

TropVertex vertex(int id, VertexSort sort)
{
    TropVertex v;
    v.id = id;
    v.polytope = 0;
    v.sort = sort;
    return v;
}

TropEdge node(int id, int v_plus, int v_minus, ZVec slope)
{
    TropEdge e;
    e.id = id;
    e.v_plus = v_plus;
    e.v_minus = v_minus;
    e.slope = std::move(slope);
    return e;
}

TropEdge leaf(int id, int vertex, EdgeClass cls)
{
    TropEdge e;
    e.id = id;
    e.v_minus = vertex;
    e.cls = cls;
    e.slope = {Int(0), Int(0)};
    return e;
}

IndexInput one_disk(int inputs, int out_index, int in_index, int maslov)
{
    IndexInput inp;
    inp.graph.vertices = {vertex(0, VertexSort::disk)};
    inp.graph.edges.push_back(leaf(0, 0, EdgeClass::boundary_leaf));
    inp.graph.root_leaf = 0;
    for (int i = 0; i < inputs; ++i)
        inp.graph.edges.push_back(leaf(1 + i, 0, EdgeClass::boundary_leaf));
    inp.morse.push_back(out_index);
    for (int i = 0; i < inputs; ++i) inp.morse.push_back(in_index);
    inp.maslov[0] = maslov;
    return inp;
}

// Tree of sphere vertices with random slopes, markings, and index data.
IndexInput random_input(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> nverts(2, 6);
    std::uniform_int_distribution<int> small(-2, 2);
    std::uniform_int_distribution<int> evens(-3, 3);
    std::uniform_int_distribution<int> coin(0, 1);
    std::uniform_int_distribution<int> tang(1, 3);
    std::uniform_int_distribution<int> mult(1, 3);

    IndexInput inp;
    const int m = nverts(rng);
    int next_edge = 0;
    for (int v = 0; v < m; ++v) {
        inp.graph.vertices.push_back(vertex(v, VertexSort::sphere));
        inp.maslov[v] = 2 * evens(rng);
        if (v > 0) {
            std::uniform_int_distribution<int> parent(0, v - 1);
            ZVec slope = {Int(small(rng)), Int(small(rng))};
            inp.graph.edges.push_back(node(next_edge++, parent(rng), v, slope));
        }
    }
    for (const TropEdge& e : inp.graph.edges) {
        if (is_zero(e.slope)) continue;
        std::vector<Int> tuple;
        for (int j = coin(rng) + 1; j > 0; --j) tuple.push_back(mult(rng));
        inp.node_multiplicities[e.id] = tuple;
    }
    for (int v = 0; v < m; ++v) {
        if (!coin(rng)) continue;
        const int id = next_edge++;
        inp.graph.edges.push_back(leaf(id, v, EdgeClass::interior_leaf));
        inp.graph.markings.push_back({id, tang(rng)});
    }
    inp.morse = {0};
    return inp;
}

// Merge v_minus into v_plus along edge eid, combining Maslov indices through
// the Chern gluing rule; a by-hand counterpart of the internal gluing.
IndexInput collapse_one(const IndexInput& inp, int eid)
{
    const TropEdge picked = *inp.graph.edge(eid);
    IndexInput out;
    out.morse = inp.morse;
    out.graph.root_leaf = inp.graph.root_leaf;
    out.graph.markings = inp.graph.markings;
    const int keep = picked.v_plus;
    const int gone = picked.v_minus;
    for (const TropVertex& v : inp.graph.vertices)
        if (v.id != gone) out.graph.vertices.push_back(v);
    for (const TropEdge& e : inp.graph.edges) {
        if (e.id == eid) continue;
        TropEdge c = e;
        if (c.v_plus == gone) c.v_plus = keep;
        if (c.v_minus == gone) c.v_minus = keep;
        out.graph.edges.push_back(c);
    }
    for (const auto& [v, I] : inp.maslov)
        if (v != gone && v != keep) out.maslov[v] = I;
    const Int glued = 2 * chern_glue(Int(inp.maslov.at(keep) / 2),
                                     Int(inp.maslov.at(gone) / 2),
                                     inp.node_multiplicities.at(eid));
    out.maslov[keep] = glued.convert_to<int>();
    for (const auto& [e, tuple] : inp.node_multiplicities)
        if (e != eid) out.node_multiplicities[e] = tuple;
    return out;
}

} // namespace

TEST_CASE("a disk with matching ends has virtual dimension minus one")
{
    CHECK(expected_dimension(one_disk(1, 4, 4, 0)) == -1);
    CHECK(expected_dimension(one_disk(1, 0, 0, 0)) == -1);
}

TEST_CASE("an index-two disk with output at the top is rigid modulo the torus")
{
    CHECK(expected_dimension(one_disk(0, 2, 0, 2)) == 2);
    CHECK(expected_dimension(one_disk(0, 3, 0, 2)) == 3);
}

TEST_CASE("each bookkeeping term moves the count as stated")
{
    IndexInput base = one_disk(1, 4, 4, 0);

    SUBCASE("tangency above one cuts two dimensions per step")
    {
        base.graph.edges.push_back(leaf(9, 0, EdgeClass::interior_leaf));
        base.graph.markings.push_back({9, 3});
        CHECK(expected_dimension(base) == -1 - 4);
    }
    SUBCASE("a surviving interior node costs two")
    {
        base.graph.vertices.push_back(vertex(1, VertexSort::sphere));
        base.maslov[1] = 0;
        base.graph.edges.push_back(node(9, 0, 1, zv({0, 0})));
        CHECK(expected_dimension(base) == -3);
    }
    SUBCASE("boundary nodes of extreme length cost one each")
    {
        base.graph.vertices.push_back(vertex(1, VertexSort::disk));
        base.maslov[1] = 0;
        TropEdge e = node(9, 0, 1, zv({0, 0}));
        e.cls = EdgeClass::boundary_node;
        e.length = LengthClass::zero;
        base.graph.edges.push_back(e);
        CHECK(expected_dimension(base) == -2);
        base.graph.edges.back().length = LengthClass::infinite;
        CHECK(expected_dimension(base) == -2);
        base.graph.edges.back().length = LengthClass::finite;
        CHECK(expected_dimension(base) == -1);
    }
    SUBCASE("malformed inputs are refused")
    {
        base.morse.pop_back();
        CHECK_THROWS_AS(expected_dimension(base), std::invalid_argument);
        base.morse = {4, 4};
        base.maslov.clear();
        CHECK_THROWS_AS(expected_dimension(base), std::invalid_argument);
        base.maslov[0] = 0;
        base.graph.vertices.push_back(vertex(1, VertexSort::sphere));
        base.maslov[1] = 3;
        base.graph.edges.push_back(node(9, 0, 1, zv({1, 0})));
        CHECK_THROWS_AS(expected_dimension(base), std::invalid_argument);
        base.graph.edges.back().cls = EdgeClass::boundary_node;
        base.graph.edges.back().length.reset();
        base.maslov[1] = 2;
        CHECK_THROWS_AS(expected_dimension(base), std::invalid_argument);
    }
}

TEST_CASE("gluing a node away keeps the index")
{
    SUBCASE("two spheres joined along a double contact")
    {
        IndexInput inp;
        inp.graph.vertices = {vertex(0, VertexSort::sphere), vertex(1, VertexSort::sphere)};
        inp.graph.edges = {node(0, 0, 1, zv({1, 1}))};
        inp.morse = {0};
        inp.maslov[0] = 6;
        inp.maslov[1] = 4;
        inp.node_multiplicities[0] = {Int(1), Int(1)};
        CHECK(expected_dimension(inp) == 0);
        CHECK(expected_dimension(collapse_one(inp, 0)) == 0);
    }
    SUBCASE("random trees, one nonzero-slope collapse at a time")
    {
        std::mt19937_64 rng(61803);
        int exercised = 0;
        for (int trial = 0; trial < 80; ++trial) {
            const IndexInput inp = random_input(rng);
            for (const TropEdge& e : inp.graph.edges) {
                if (e.cls != EdgeClass::interior_node || is_zero(e.slope)) continue;
                CHECK(expected_dimension(inp) == expected_dimension(collapse_one(inp, e.id)));
                ++exercised;
            }
        }
        CHECK(exercised > 100);
    }
}

TEST_CASE("toric Maslov index doubles the contact total")
{
    CHECK(maslov_toric({Int(1)}) == 2);
    CHECK(maslov_toric({}) == 0);
    CHECK(maslov_toric({Int(2), Int(1)}) == 6);

    std::mt19937_64 rng(271828);
    std::uniform_int_distribution<int> mult(1, 9);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<Int> a, b, both;
        for (int i = 0; i < trial % 5; ++i) a.push_back(mult(rng));
        for (int i = 0; i < trial % 3; ++i) b.push_back(mult(rng));
        both = a;
        both.insert(both.end(), b.begin(), b.end());
        CHECK(maslov_toric(both) == maslov_toric(a) + maslov_toric(b));
        CHECK(maslov_toric(a) >= 0);
        CHECK(maslov_toric(a) % 2 == 0);
    }
}

TEST_CASE("node contact orders are lattice pairings")
{
    CHECK(node_multiplicity(zv({1, 1}), zv({1, 0})) == 1);
    CHECK(node_multiplicity(zv({2, 1}), zv({0, 1})) == 1);
    for (int axis = 0; axis < 3; ++axis) {
        ZVec normal(3, Int(0));
        normal[size_t(axis)] = 1;
        CHECK(node_multiplicity(zv({1, 1, 1}), normal) == 1);
    }
    CHECK(node_multiplicity(zv({2, 1}), zv({1, 0})) == 2);
    CHECK_THROWS_AS(node_multiplicity(zv({1, 1}), zv({-1, 0})), std::invalid_argument);
    CHECK_THROWS_AS(node_multiplicity(zv({0, 1}), zv({1, 0})), std::invalid_argument);
    CHECK_THROWS_AS(node_multiplicity(zv({1, 1}), zv({2, 0})), std::invalid_argument);
}

TEST_CASE("Chern numbers glue with a double twist per contact")
{
    CHECK(chern_glue(1, 1, {Int(1)}) == 0);
    CHECK(chern_glue(3, 2, {Int(1), Int(1)}) == 1);
    CHECK(chern_glue(5, 0, {}) == 5);
}

TEST_CASE("split types gain two directions per split edge before quotienting")
{
    for (const SplitScene& s :
         {scenes::split_cube_two_movers(), scenes::split_path_double_mover()}) {
        const int n = s.cut.decomposition.ambient;
        IndexInput data;
        data.morse = {0};
        for (const TropVertex& v : s.type.refined.vertices) data.maslov[v.id] = 2;
        for (const TropEdge& e : s.type.refined.edges)
            if (e.cls == EdgeClass::interior_node && !is_zero(e.slope))
                data.node_multiplicities[e.id] = {Int(1)};

        const SplitIndex si = split_index(s.type, data, n);
        CHECK(si.total ==
              si.quotiented + 2 * int(s.type.split_edges.size()) * (n - 1));

        std::vector<int> nonzero_collapsed;
        for (int id : s.type.kappa.collapsed)
            if (!is_zero(s.type.refined.edge(id)->slope)) nonzero_collapsed.push_back(id);
        const CollapseResult glued =
            collapse_edges(s.type.refined, nonzero_collapsed, s.cut.decomposition);
        REQUIRE(glued.report.ok);
        IndexInput reduced;
        reduced.graph = glued.graph;
        reduced.morse = {0};
        for (const TropVertex& v : glued.graph.vertices) reduced.maslov[v.id] = 0;
        for (const auto& [vid, kept] : glued.map.vertex_map)
            reduced.maslov[kept] += data.maslov.at(vid);
        for (int id : nonzero_collapsed)
            for (const Int& m : data.node_multiplicities.at(id))
                reduced.maslov[glued.map.vertex_map.at(
                    s.type.refined.edge(id)->v_minus)] -= (4 * m).convert_to<int>();
        for (const auto& [e, tuple] : data.node_multiplicities)
            if (glued.graph.edge(e)) reduced.node_multiplicities[e] = tuple;
        CHECK(si.quotiented == expected_dimension(reduced));
    }
}

TEST_CASE("vertical area adds a level-weighted count per contact")
{
    EnergyInput inp;
    inp.dual_constants = {Rational(1)};
    inp.horizontal = Rational(7, 3);

    SUBCASE("no contacts, no change")
    {
        const AreaBreakdown out = fiber_area(inp);
        CHECK(out.horizontal == Rational(7, 3));
        CHECK(out.two_pi_units == 0);
        CHECK(out.hofer_bound == Rational(7, 3));
    }
    SUBCASE("one transverse contact at level one")
    {
        inp.nodal_multiplicities = {{Int(1)}};
        const AreaBreakdown out = fiber_area(inp);
        CHECK(out.two_pi_units == 1);
        CHECK(out.hofer_constant == 1);
        CHECK(out.hofer_bound == Rational(7, 3) + 1);
    }
    SUBCASE("an interval fiber with double contact on each end")
    {
        inp.dual_constants = {Rational(1), Rational(1)};
        inp.nodal_multiplicities = {{Int(2), Int(0)}, {Int(0), Int(2)}};
        CHECK(fiber_area(inp).two_pi_units == 4);
    }
    SUBCASE("the bound weighs the total contact order")
    {
        inp.dual_constants = {Rational(1), Rational(3)};
        inp.nodal_multiplicities = {{Int(1), Int(0)}, {Int(0), Int(2)}};
        const AreaBreakdown out = fiber_area(inp);
        CHECK(out.two_pi_units == 7);
        CHECK(out.hofer_constant == 3);
        CHECK(out.hofer_bound == Rational(7, 3) + 9);
        CHECK(fiber_area(inp, Rational(10)).hofer_bound == Rational(7, 3) + 30);
    }
    SUBCASE("monotone in every multiplicity")
    {
        inp.dual_constants = {Rational(1, 2), Rational(5)};
        inp.nodal_multiplicities = {{Int(1), Int(2)}, {Int(0), Int(1)}};
        const Rational before = fiber_area(inp).two_pi_units;
        for (auto& row : inp.nodal_multiplicities)
            for (auto& m : row) {
                m += 1;
                CHECK(fiber_area(inp).two_pi_units > before);
                m -= 1;
            }
    }
    SUBCASE("bad levels and shapes are refused")
    {
        inp.dual_constants = {Rational(0)};
        CHECK_THROWS_AS(fiber_area(inp), std::invalid_argument);
        inp.dual_constants = {Rational(1)};
        inp.nodal_multiplicities = {{Int(1), Int(1)}};
        CHECK_THROWS_AS(fiber_area(inp), std::invalid_argument);
        inp.nodal_multiplicities = {{Int(-1)}};
        CHECK_THROWS_AS(fiber_area(inp), std::invalid_argument);
    }
}

TEST_CASE("divisor counts are degree times area, integrality enforced")
{
    CHECK(divisor_count(3, Rational(1, 3)) == 1);
    CHECK(divisor_count(2, Rational(2)) == 4);
    CHECK_THROWS_AS(divisor_count(3, Rational(1, 2)), std::invalid_argument);
    CHECK_THROWS_AS(divisor_count(2, Rational(-1)), std::invalid_argument);
    CHECK_THROWS_AS(divisor_count(0, Rational(1)), std::invalid_argument);
}
