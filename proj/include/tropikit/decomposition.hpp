#pragma once

#include "tropikit/polytope.hpp"

#include <utility>

namespace tropikit {

struct DecompositionReport {
    bool ok = true;
    std::vector<std::string> violations;

    void fail(std::string v)
    {
        ok = false;
        violations.push_back(std::move(v));
    }
};

// Polyhedral decomposition of a region of R^n: pairwise intersections of
// members are again members and are faces of both, so relative interiors are
// disjoint automatically.
struct Decomposition {
    int ambient = 0;
    std::vector<Polytope> members;
    // (f, p): member f is a proper face of member p (inferred geometrically).
    std::vector<std::pair<int, int>> face_pairs;

    const Polytope& member(int id) const { return members.at(size_t(id)); }
    int find_member(const Polytope& p) const; // -1 when absent
    // ids of members containing the given member, itself included
    std::vector<int> supersets(int id) const;
    std::vector<int> proper_faces_of(int id) const;
};

// Validates closure and poset consistency; a supplied face list must coincide
// with the inferred relation.
Decomposition make_decomposition(int ambient, std::vector<Polytope> members,
                                 DecompositionReport& report,
                                 const std::vector<std::pair<int, int>>* supplied_faces = nullptr);

// Fan of tangent cones Cone_lambda(P) = R_{>=0}(P - lambda) over all members
// P containing the base member, taken at a relative-interior point lambda of
// the base member.  Every cone's lineality contains the base member's
// direction space; quotient_cone is the view modulo that common factor.
struct NormalFan {
    int ambient = 0;
    int at_member = -1;
    QVec base_point;
    QMat quotient_map; // (ambient - dim base) x ambient
    std::vector<std::pair<int, Cone>> cones;

    const Cone* cone_of(int member_id) const;
    Cone quotient_cone(int member_id) const;
};

NormalFan normal_fan(const Decomposition& d, int q);

} // namespace tropikit
