#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "tropikit/scenes.hpp"

#include <algorithm>
#include <set>

using namespace tropikit;

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

Halfspace hs(const std::vector<int>& normal, int constant)
{
    return {zv(normal), Rational(constant)};
}

Cone ray_cone(int ambient, const std::vector<std::vector<int>>& rays)
{
    std::vector<ZVec> rs;
    for (const auto& r : rays) rs.push_back(zv(r));
    return Cone::from_v(ambient, rs, {});
}

std::set<std::pair<int, int>> pair_set(const std::vector<std::pair<int, int>>& v)
{
    return {v.begin(), v.end()};
}

} // namespace

TEST_CASE("single cut decomposition, fans, and gluing")
{
    auto sc = scenes::line_single_cut();
    const Decomposition& d = sc.decomposition;
    REQUIRE(d.members.size() == 3);
    CHECK(pair_set(d.face_pairs) == std::set<std::pair<int, int>>{{1, 0}, {1, 2}});
    CHECK(d.supersets(1) == std::vector<int>{0, 1, 2});

    NormalFan fan = normal_fan(d, 1);
    REQUIRE(fan.cones.size() == 3);
    CHECK(fan.cone_of(0)->equals(ray_cone(1, {{-1}})));
    CHECK(fan.cone_of(1)->is_zero());
    CHECK(fan.cone_of(2)->equals(ray_cone(1, {{1}})));

    NormalFan top = normal_fan(d, 2);
    REQUIRE(top.cones.size() == 1);
    CHECK(top.cones[0].second.equals(Cone::full(1)));
    CHECK(top.quotient_cone(2).is_zero());

    GluingReport rep = validate_gluing(sc.gluing, d);
    CHECK(rep.ok);

    DualComplex dc = build_dual_complex(sc.gluing, d);
    CHECK(dc.cells[1].equals(Polytope::from_v(1, {qv({-1}), qv({1})})));
    CHECK(dc.carrier(qv({0})) == 1);
    CHECK(dc.carrier(qv({1})) == 0);
    CHECK(dc.carrier(qv({-1})) == 2);
    CHECK(dc.carrier(qv({2})) == -1);

    GluingReport swapped = validate_gluing(scenes::line_single_cut_swapped(), d);
    CHECK(!swapped.ok);
    REQUIRE(!swapped.violations.empty());
    CHECK(swapped.violations.front().find("matched face") != std::string::npos);
}

TEST_CASE("decomposition closure violations are reported")
{
    Polytope left = Polytope::from_h(1, {hs({-1}, 0)});
    Polytope right = Polytope::from_h(1, {hs({1}, 0)});
    DecompositionReport rep;
    make_decomposition(1, {left, right}, rep);
    CHECK(!rep.ok);
    REQUIRE(!rep.violations.empty());
    CHECK(rep.violations.front().find("not a member") != std::string::npos);

    Polytope a = Polytope::from_v(1, {qv({0}), qv({2})});
    Polytope b = Polytope::from_v(1, {qv({1}), qv({3})});
    DecompositionReport overlap;
    make_decomposition(1, {a, b}, overlap);
    CHECK(!overlap.ok);

    auto sc = scenes::line_single_cut();
    std::vector<std::pair<int, int>> wrong{{0, 1}};
    DecompositionReport faces;
    make_decomposition(1, sc.decomposition.members, faces, &wrong);
    CHECK(!faces.ok);
}

TEST_CASE("planar cross: nine-cone fan at the center and valid gluing")
{
    auto sc = scenes::coordinate_cuts(2);
    const Decomposition& d = sc.decomposition;
    REQUIRE(d.members.size() == 9);

    int center = sc.member({0, 0});
    NormalFan fan = normal_fan(d, center);
    REQUIRE(fan.cones.size() == 9);
    CHECK(fan.cone_of(center)->is_zero());
    CHECK(fan.cone_of(sc.member({1, 1}))->equals(ray_cone(2, {{1, 0}, {0, 1}})));
    CHECK(fan.cone_of(sc.member({-1, 1}))->equals(ray_cone(2, {{-1, 0}, {0, 1}})));
    CHECK(fan.cone_of(sc.member({-1, -1}))->equals(ray_cone(2, {{-1, 0}, {0, -1}})));
    CHECK(fan.cone_of(sc.member({1, 0}))->equals(ray_cone(2, {{1, 0}})));
    CHECK(fan.cone_of(sc.member({0, -1}))->equals(ray_cone(2, {{0, -1}})));
    int dim_counts[3] = {0, 0, 0};
    for (const auto& [id, cone] : fan.cones) ++dim_counts[cone.dim()];
    CHECK(dim_counts[0] == 1);
    CHECK(dim_counts[1] == 4);
    CHECK(dim_counts[2] == 4);

    int wall = sc.member({1, 0});
    NormalFan wfan = normal_fan(d, wall);
    REQUIRE(wfan.cones.size() == 3);
    CHECK(wfan.quotient_cone(wall).is_zero());
    Cone qa = wfan.quotient_cone(sc.member({1, 1}));
    Cone qb = wfan.quotient_cone(sc.member({1, -1}));
    CHECK(qa.dim() == 1);
    CHECK(qb.dim() == 1);
    CHECK(qa.is_pointed());
    CHECK(!qa.equals(qb));

    CHECK(validate_gluing(sc.gluing, d).ok);
}

TEST_CASE("planar cross: dual complex queries and projections")
{
    auto sc = scenes::coordinate_cuts(2);
    DualComplex dc = build_dual_complex(sc.gluing, sc.decomposition);

    int center = sc.member({0, 0});
    int wminus = sc.member({-1, 0});
    CHECK(dc.cells[size_t(center)].equals(
        Polytope::from_h(2, {hs({1, 0}, 0), hs({-1, 0}, -1), hs({0, 1}, 0), hs({0, -1}, -1)})));
    CHECK(dc.cells[size_t(wminus)].equals(
        Polytope::from_v(2, {qv({1, 0}), qv({1, 1})})));

    CHECK(dc.carrier(qv({Rational(1, 2), Rational(1, 2)})) == center);
    CHECK(dc.carrier(qv({1, Rational(1, 2)})) == wminus);
    CHECK(dc.carrier(qv({1, 1})) == sc.member({-1, -1}));
    CHECK(dc.cells_containing(qv({1, Rational(1, 2)})) == std::vector<int>{wminus, center});

    CHECK(dc.project(wminus, qv({Rational(1, 4), Rational(1, 3)})) == qv({1, Rational(1, 3)}));
    CHECK(dc.project(sc.member({-1, -1}), qv({Rational(1, 4), Rational(1, 3)})) == qv({1, 1}));
    CHECK(dc.project(center, qv({Rational(1, 4), Rational(1, 3)})) == qv({Rational(1, 4), Rational(1, 3)}));
}

TEST_CASE("two parallel cuts: path of two intervals")
{
    auto sc = scenes::line_two_cuts();
    GluingReport rep;
    DualComplex dc = build_dual_complex(sc.gluing, sc.decomposition, &rep);
    REQUIRE(rep.ok);

    CHECK(dc.cells[1].equals(Polytope::from_v(1, {qv({0}), qv({1})})));
    CHECK(dc.cells[3].equals(Polytope::from_v(1, {qv({-1}), qv({0})})));
    CHECK(pair_set(dc.identifications) ==
          std::set<std::pair<int, int>>{{1, 0}, {1, 2}, {3, 2}, {3, 4}});

    CHECK(dc.carrier(qv({Rational(1, 2)})) == 1);
    CHECK(dc.carrier(qv({0})) == 2);
    CHECK(dc.carrier(qv({Rational(-1, 2)})) == 3);
    CHECK(dc.carrier(qv({1})) == 0);
    CHECK(dc.carrier(qv({-1})) == 4);
    CHECK(dc.carrier(qv({2})) == -1);
    CHECK(dc.cells_containing(qv({0})) == std::vector<int>{1, 2, 3});
}

TEST_CASE("octant cube: 27 members glue to the unit cube complex")
{
    auto sc = scenes::coordinate_cuts(3);
    REQUIRE(sc.decomposition.members.size() == 27);

    GluingReport rep;
    DualComplex dc = build_dual_complex(sc.gluing, sc.decomposition, &rep);
    REQUIRE(rep.ok);

    int origin = sc.member({0, 0, 0});
    CHECK(dc.cells[size_t(origin)].dim() == 3);
    CHECK(normal_fan(sc.decomposition, origin).cones.size() == 27);

    int axis = sc.member({0, 0, 1});
    CHECK(dc.cells[size_t(axis)].equals(
        Polytope::from_v(3, {qv({0, 0, 0}), qv({1, 0, 0}), qv({0, 1, 0}), qv({1, 1, 0})})));

    int counts[4] = {0, 0, 0, 0};
    for (const auto& cell : dc.cells) ++counts[cell.dim()];
    CHECK(counts[0] == 8);
    CHECK(counts[1] == 12);
    CHECK(counts[2] == 6);
    CHECK(counts[3] == 1);
}
