#pragma once

#include "tropikit/cone.hpp"

namespace tropikit {

// normal . x >= constant, with primitive integer normal
struct Halfspace {
    ZVec normal;
    Rational constant = 0;
    bool operator==(const Halfspace&) const = default;
};

struct AffineEquation {
    ZVec normal;
    Rational constant = 0;
    bool operator==(const AffineEquation&) const = default;
};

// Rational polyhedron: conv(vertices) + cone(rec_rays) + span(rec_lineality),
// cross-validated against the minimal halfspace description.
struct Polytope {
    int ambient = 0;
    bool empty = false;
    std::vector<Halfspace> halfspaces;
    std::vector<AffineEquation> equations;
    std::vector<QVec> vertices;
    std::vector<ZVec> rec_rays;
    std::vector<ZVec> rec_lineality;

    static Polytope from_h(int ambient, const std::vector<Halfspace>& hs,
                           const std::vector<AffineEquation>& eqs = {});
    static Polytope from_v(int ambient, const std::vector<QVec>& vertices,
                           const std::vector<ZVec>& rays = {}, const std::vector<ZVec>& lineality = {});

    bool bounded() const { return rec_rays.empty() && rec_lineality.empty(); }
    bool pointed() const { return rec_lineality.empty(); }
    int dim() const; // -1 when empty

    bool contains(const QVec& x) const;
    bool contains_in_relint(const QVec& x) const;
    bool contains_polytope(const Polytope& q) const;
    bool equals(const Polytope& q) const;

    QVec relint_point() const;

    // Direction space of the affine hull.
    RationalSubspace direction_space() const;
    // Integer lattice basis of the direction space (saturated).
    std::vector<ZVec> direction_lattice() const;

    // Indices of halfspaces tight at x (x must lie in the polytope).
    std::vector<int> tight_at(const QVec& x) const;

    // The face cut out by turning the listed halfspaces into equalities.
    Polytope face(const std::vector<int>& tight_halfspaces) const;
    // All nonempty faces, including the polytope itself (deduplicated).
    std::vector<Polytope> all_faces() const;

    // True when q equals a face of this polytope.
    bool has_face(const Polytope& q) const;

    // Tangent cone of directions at a relative-interior point of the face q.
    Cone tangent_cone_at(const Polytope& q) const;
};

struct DelzantReport {
    bool ok = false;
    std::string failing_vertex; // formatted witness when not ok
    std::string reason;
};

// A polytope is Delzant when each vertex is simple and its primitive facet
// normals form a lattice basis of their integral span.
DelzantReport is_delzant(const Polytope& p);

// Intersection, computed on the stacked halfspace descriptions.
Polytope intersect(const Polytope& a, const Polytope& b);

// Cone_Q(P) = R_{>=0}(P - lambda) for lambda in relint Q, plus its dual.
struct ConeAtFace {
    Cone cone;
    Cone dual;
};
ConeAtFace cone_of_polytope_at_face(const Polytope& p, const Polytope& q);

} // namespace tropikit
