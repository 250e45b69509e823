#include "tropikit/scenes.hpp"

#include <stdexcept>

namespace tropikit::scenes {

namespace {

ZVec unit(int n, int i, int sign)
{
    ZVec v(size_t(n), Int(0));
    v[size_t(i)] = sign;
    return v;
}

Polytope unit_cube(int k)
{
    if (k == 0) return point_dual();
    std::vector<Halfspace> hs;
    for (int i = 0; i < k; ++i) {
        hs.push_back({unit(k, i, 1), Rational(0)});
        hs.push_back({unit(k, i, -1), Rational(-1)});
    }
    return Polytope::from_h(k, hs);
}

Polytope segment(Rational a, Rational b)
{
    return Polytope::from_v(1, {QVec{a}, QVec{b}});
}

DecompositionReport must_be_valid(DecompositionReport rep)
{
    if (!rep.ok) throw std::logic_error("scene decomposition invalid: " + rep.violations.front());
    return rep;
}

} // namespace

int CutScene::member(const std::vector<int>& s) const
{
    for (size_t i = 0; i < signs.size(); ++i)
        if (signs[i] == s) return int(i);
    throw std::invalid_argument("no member with the given sign pattern");
}

CutScene coordinate_cuts(int n)
{
    CutScene scene;
    std::vector<Polytope> members;

    std::vector<int> s(size_t(n), -1);
    for (;;) {
        scene.signs.push_back(s);
        std::vector<Halfspace> hs;
        std::vector<AffineEquation> eqs;
        for (int i = 0; i < n; ++i) {
            if (s[size_t(i)] == 0)
                eqs.push_back({unit(n, i, 1), Rational(0)});
            else
                hs.push_back({unit(n, i, s[size_t(i)]), Rational(0)});
        }
        members.push_back(Polytope::from_h(n, hs, eqs));

        int k = 0;
        for (; k < n && s[size_t(k)] == 1; ++k) s[size_t(k)] = -1;
        if (k == n) break;
        ++s[size_t(k)];
    }

    DecompositionReport rep;
    scene.decomposition = make_decomposition(n, std::move(members), rep);
    must_be_valid(rep);

    for (size_t id = 0; id < scene.signs.size(); ++id) {
        const auto& sg = scene.signs[id];
        DualCellSpec spec;
        spec.polytope = int(id);
        int zeros = 0;
        QVec anchor(size_t(n), Rational(0));
        for (int i = 0; i < n; ++i) {
            if (sg[size_t(i)] == 0) ++zeros;
            if (sg[size_t(i)] < 0) anchor[size_t(i)] = 1;
        }
        spec.local = unit_cube(zeros);
        spec.anchor = anchor;
        scene.gluing.duals.push_back(std::move(spec));
    }
    return scene;
}

CutScene line_single_cut()
{
    CutScene scene;
    std::vector<Polytope> members;
    members.push_back(Polytope::from_h(1, {{unit(1, 0, -1), Rational(0)}}));
    members.push_back(Polytope::from_h(1, {}, {{unit(1, 0, 1), Rational(0)}}));
    members.push_back(Polytope::from_h(1, {{unit(1, 0, 1), Rational(0)}}));
    scene.signs = {{-1}, {0}, {1}};

    DecompositionReport rep;
    scene.decomposition = make_decomposition(1, std::move(members), rep);
    must_be_valid(rep);

    scene.gluing.duals = {
        {0, point_dual(), QVec{Rational(1)}},
        {1, segment(-1, 1), QVec{Rational(0)}},
        {2, point_dual(), QVec{Rational(-1)}},
    };
    return scene;
}

GluingDatum line_single_cut_swapped()
{
    GluingDatum g = line_single_cut().gluing;
    std::swap(g.duals[0].anchor, g.duals[2].anchor);
    return g;
}

CutScene line_two_cuts()
{
    CutScene scene;
    std::vector<Polytope> members;
    members.push_back(Polytope::from_h(1, {{unit(1, 0, -1), Rational(0)}}));
    members.push_back(Polytope::from_h(1, {}, {{unit(1, 0, 1), Rational(0)}}));
    members.push_back(Polytope::from_h(1, {{unit(1, 0, 1), Rational(0)}, {unit(1, 0, -1), Rational(-5)}}));
    members.push_back(Polytope::from_h(1, {}, {{unit(1, 0, 1), Rational(5)}}));
    members.push_back(Polytope::from_h(1, {{unit(1, 0, 1), Rational(5)}}));
    scene.signs = {{-1}, {0}, {1}, {2}, {3}};

    DecompositionReport rep;
    scene.decomposition = make_decomposition(1, std::move(members), rep);
    must_be_valid(rep);

    scene.gluing.duals = {
        {0, point_dual(), QVec{Rational(1)}},
        {1, segment(0, 1), QVec{Rational(0)}},
        {2, point_dual(), QVec{Rational(0)}},
        {3, segment(0, 1), QVec{Rational(-1)}},
        {4, point_dual(), QVec{Rational(-1)}},
    };
    return scene;
}

namespace {

ZVec zv(int a, int b)
{
    return {Int(a), Int(b)};
}

TropVertex sphere_at(int id, int piece, int cx, int cy)
{
    TropVertex v;
    v.id = id;
    v.polytope = piece;
    v.chern = zv(cx, cy);
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

TropEdge root_leaf_at(int id, int vertex)
{
    TropEdge e;
    e.id = id;
    e.v_minus = vertex;
    e.cls = EdgeClass::boundary_leaf;
    e.slope = zv(0, 0);
    return e;
}

GraphScene cross_scene()
{
    GraphScene s;
    s.cut = coordinate_cuts(2);
    s.complex = build_dual_complex(s.cut.gluing, s.cut.decomposition);
    return s;
}

} // namespace

GraphScene star_graph_three()
{
    GraphScene s = cross_scene();
    const int center = s.cut.member({0, 0});
    s.graph.vertices = {
        sphere_at(0, center, 0, 0),
        sphere_at(1, s.cut.member({1, 1}), 1, 1),
        sphere_at(2, s.cut.member({1, -1}), 1, -2),
        sphere_at(3, s.cut.member({-1, 1}), -2, 1),
    };
    s.graph.edges = {
        node(0, 1, 0, zv(-1, -1)),
        node(1, 2, 0, zv(-1, 2)),
        node(2, 3, 0, zv(2, -1)),
    };
    return s;
}

GraphScene star_graph_two()
{
    GraphScene s = cross_scene();
    s.graph.vertices = {
        sphere_at(0, s.cut.member({0, 0}), -2, 0),
        sphere_at(1, s.cut.member({1, -1}), 1, -1),
        sphere_at(2, s.cut.member({1, 1}), 1, 1),
    };
    s.graph.edges = {
        node(0, 1, 0, zv(-1, 1)),
        node(1, 2, 0, zv(-1, -1)),
    };
    return s;
}

GraphScene star_graph_infeasible()
{
    GraphScene s = star_graph_three();
    s.graph.edges[0].slope = zv(1, 1);
    return s;
}

GraphScene split_center_graph()
{
    GraphScene s = cross_scene();
    const int center = s.cut.member({0, 0});
    s.graph.vertices = {
        sphere_at(0, center, 0, 0),
        sphere_at(1, center, 0, 0),
        sphere_at(2, s.cut.member({1, 1}), 1, 1),
        sphere_at(3, s.cut.member({1, -1}), 1, -2),
        sphere_at(4, s.cut.member({-1, 1}), -2, 1),
    };
    s.graph.edges = {
        node(0, 2, 0, zv(-1, -1)),
        node(1, 3, 0, zv(-1, 2)),
        node(2, 4, 1, zv(2, -1)),
        node(3, 1, 0, zv(2, -1)),
    };
    return s;
}

GraphScene single_disk_graph()
{
    GraphScene s = cross_scene();
    TropVertex v = sphere_at(0, s.cut.member({1, 1}), 0, 0);
    v.sort = VertexSort::disk;
    s.graph.vertices = {v};
    s.graph.edges = {root_leaf_at(0, 0)};
    s.graph.root_leaf = 0;
    return s;
}

GraphScene parallel_neck_graph()
{
    GraphScene s = cross_scene();
    s.graph.vertices = {
        sphere_at(0, s.cut.member({0, 0}), 0, 0),
        sphere_at(1, s.cut.member({1, 1}), 1, 1),
        sphere_at(2, s.cut.member({-1, -1}), -1, -1),
    };
    s.graph.edges = {
        node(0, 1, 0, zv(-1, -1)),
        node(1, 0, 2, zv(-1, -1)),
    };
    return s;
}

GraphScene pinned_center_graph()
{
    GraphScene s = cross_scene();
    s.graph.vertices = {
        sphere_at(0, s.cut.member({0, 0}), -1, -1),
        sphere_at(1, s.cut.member({1, 1}), 1, 1),
        sphere_at(2, s.cut.member({-1, 1}), -1, 1),
        sphere_at(3, s.cut.member({1, -1}), 1, -1),
    };
    s.graph.edges = {
        node(0, 0, 1, zv(1, 1)),
        node(1, 2, 0, zv(1, -1)),
        node(2, 3, 0, zv(-1, 1)),
    };
    return s;
}

namespace {

ZVec zv3(int a, int b, int c)
{
    return {Int(a), Int(b), Int(c)};
}

TropVertex sphere_with(int id, int piece, ZVec chern)
{
    TropVertex v;
    v.id = id;
    v.polytope = piece;
    v.chern = std::move(chern);
    return v;
}

CollapseMap collapse(std::map<int, int> vertex_map, std::vector<int> collapsed)
{
    CollapseMap km;
    km.vertex_map = std::move(vertex_map);
    km.collapsed = std::move(collapsed);
    km.trivial = false;
    return km;
}

// Base for the single-neck scenes: one edge across the cross from the
// quadrant (+,+) corner to the (-,-) corner.
TropicalGraph neck_base(const CutScene& cut)
{
    TropicalGraph g;
    g.vertices = {
        sphere_at(0, cut.member({1, 1}), 1, 1),
        sphere_at(1, cut.member({-1, -1}), -1, -1),
    };
    g.edges = {node(0, 0, 1, zv(-1, -1))};
    return g;
}

// Base for the path scenes: middle vertex in (-,-) joined to (+,+) and
// (+,-), both edges split.
TropicalGraph path_base(const CutScene& cut)
{
    TropicalGraph g;
    g.vertices = {
        sphere_at(0, cut.member({-1, -1}), -2, -1),
        sphere_at(1, cut.member({1, 1}), 1, 1),
        sphere_at(2, cut.member({1, -1}), 1, 0),
    };
    g.edges = {node(0, 0, 1, zv(1, 1)), node(1, 0, 2, zv(1, 0))};
    return g;
}

SplitScene cross_split_scene()
{
    SplitScene s;
    s.cut = coordinate_cuts(2);
    s.complex = build_dual_complex(s.cut.gluing, s.cut.decomposition);
    return s;
}

} // namespace

SplitScene split_neck_inward()
{
    SplitScene s = cross_split_scene();
    s.type.base = neck_base(s.cut);
    s.type.refined.vertices = {
        sphere_at(0, s.cut.member({0, 0}), -1, 0),
        sphere_at(1, s.cut.member({-1, -1}), -1, -1),
        sphere_at(2, s.cut.member({1, 1}), 2, 1),
    };
    s.type.refined.edges = {node(0, 0, 1, zv(-1, -1)), node(1, 0, 2, zv(2, 1))};
    s.type.kappa = collapse({{0, 0}, {1, 1}, {2, 0}}, {1});
    s.type.split_edges = {0};
    s.type.cone_direction = {Rational(1), Rational(-1)};
    return s;
}

SplitScene split_neck_along_wall()
{
    SplitScene s = cross_split_scene();
    s.type.base = neck_base(s.cut);
    s.type.refined.vertices = {
        sphere_at(0, s.cut.member({1, 1}), 1, 1),
        sphere_at(1, s.cut.member({0, -1}), 0, -1),
        sphere_at(2, s.cut.member({-1, -1}), -1, 0),
    };
    s.type.refined.edges = {node(0, 0, 1, zv(-1, -1)), node(1, 2, 1, zv(1, 0))};
    s.type.kappa = collapse({{0, 0}, {1, 1}, {2, 1}}, {1});
    s.type.split_edges = {0};
    s.type.cone_direction = {Rational(1), Rational(-1)};
    return s;
}

SplitScene split_path_single_mover()
{
    SplitScene s = cross_split_scene();
    s.type.base = path_base(s.cut);
    s.type.refined.vertices = {
        sphere_at(0, s.cut.member({0, 0}), 0, 0),
        sphere_at(1, s.cut.member({1, 1}), 1, 1),
        sphere_at(2, s.cut.member({1, -1}), 1, 0),
        sphere_at(3, s.cut.member({-1, -1}), -2, -1),
    };
    s.type.refined.edges = {
        node(0, 0, 1, zv(1, 1)),
        node(1, 0, 2, zv(1, 0)),
        node(2, 3, 0, zv(2, 1)),
    };
    s.type.kappa = collapse({{0, 0}, {1, 1}, {2, 2}, {3, 0}}, {2});
    s.type.split_edges = {0, 1};
    s.type.cone_direction = {Rational(-3), Rational(-1)};
    return s;
}

SplitScene split_path_double_mover()
{
    SplitScene s = cross_split_scene();
    s.type.base = path_base(s.cut);
    s.type.refined.vertices = {
        sphere_at(0, s.cut.member({0, 0}), 0, 0),
        sphere_at(1, s.cut.member({1, 1}), 1, 1),
        sphere_at(2, s.cut.member({1, -1}), 1, 0),
        sphere_at(3, s.cut.member({0, -1}), -1, -1),
        sphere_at(4, s.cut.member({-1, -1}), -1, 0),
    };
    s.type.refined.edges = {
        node(0, 0, 1, zv(1, 1)),
        node(1, 0, 2, zv(1, 0)),
        node(2, 3, 0, zv(2, 1)),
        node(3, 4, 3, zv(1, 0)),
    };
    s.type.kappa = collapse({{0, 0}, {1, 1}, {2, 2}, {3, 0}, {4, 0}}, {2, 3});
    s.type.split_edges = {0, 1};
    s.type.cone_direction = {Rational(-3), Rational(-1)};
    return s;
}

SplitScene split_cube_two_movers()
{
    SplitScene s;
    s.cut = coordinate_cuts(3);
    s.complex = build_dual_complex(s.cut.gluing, s.cut.decomposition);
    s.type.base.vertices = {
        sphere_with(0, s.cut.member({1, 1, 1}), zv3(1, 1, 1)),
        sphere_with(1, s.cut.member({-1, -1, -1}), zv3(-1, -1, -1)),
    };
    s.type.base.edges = {node(0, 0, 1, zv3(-1, -1, -1))};
    s.type.refined.vertices = {
        sphere_with(0, s.cut.member({0, 0, 1}), zv3(-1, 0, 1)),
        sphere_with(1, s.cut.member({0, 0, -1}), zv3(0, 1, -1)),
        sphere_with(2, s.cut.member({1, 1, 1}), zv3(2, 1, 0)),
        sphere_with(3, s.cut.member({-1, -1, -1}), zv3(-1, -2, 0)),
    };
    s.type.refined.edges = {
        node(0, 0, 1, zv3(-1, -1, -1)),
        node(1, 0, 2, zv3(2, 1, 0)),
        node(2, 3, 1, zv3(1, 2, 0)),
    };
    s.type.kappa = collapse({{0, 0}, {1, 1}, {2, 0}, {3, 1}}, {1, 2});
    s.type.split_edges = {0};
    s.type.cone_direction = {Rational(1), Rational(1), Rational(0)};
    return s;
}

SplitScene split_cube_doubled()
{
    SplitScene s = split_cube_two_movers();
    s.type.base.edges[0].slope = zv3(-2, -2, -2);
    s.type.base.vertices[0].chern = zv3(2, 2, 2);
    s.type.base.vertices[1].chern = zv3(-2, -2, -2);
    s.type.refined.edges[0].slope = zv3(-2, -2, -2);
    s.type.refined.vertices[0].chern = zv3(0, 1, 2);
    s.type.refined.vertices[1].chern = zv3(-1, 0, -2);
    return s;
}

SplitScene split_pinned_center()
{
    GraphScene g = pinned_center_graph();
    SplitScene s;
    s.cut = g.cut;
    s.complex = g.complex;
    s.type.base = g.graph;
    s.type.refined = g.graph;
    s.type.kappa = identity_collapse(g.graph);
    s.type.split_edges = {0};
    s.type.cone_direction = {Rational(1), Rational(-1)};
    return s;
}

GraphScene disk_pair_graph()
{
    GraphScene s = cross_scene();
    const int quadrant = s.cut.member({1, 1});
    TropVertex a = sphere_at(0, quadrant, 0, 0);
    TropVertex b = sphere_at(1, quadrant, 0, 0);
    a.sort = VertexSort::disk;
    b.sort = VertexSort::disk;
    s.graph.vertices = {a, b};
    TropEdge neck = node(0, 1, 0, zv(0, 0));
    neck.cls = EdgeClass::boundary_node;
    neck.length = LengthClass::finite;
    s.graph.edges = {neck, root_leaf_at(1, 0)};
    s.graph.root_leaf = 1;
    return s;
}

} // namespace tropikit::scenes
