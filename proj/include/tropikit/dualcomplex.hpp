#pragma once

#include "tropikit/decomposition.hpp"

#include <map>
#include <optional>

namespace tropikit {

// Dual polytope of one member, in coordinates on the annihilator of the
// member's direction space (basis rows from annihilator_basis) and anchored
// into ambient coordinates.
struct DualCellSpec {
    int polytope = -1;
    Polytope local;
    QVec anchor;
};

struct GluingDatum {
    std::optional<QMat> pairing; // identification of t with t^vee; identity when absent
    std::vector<DualCellSpec> duals;
};

struct GluingReport {
    bool ok = true;
    std::vector<std::string> violations;
    std::vector<Polytope> embedded; // embedded duals, indexed by member id
    // face_match[P][P'] = face of the embedded dual of P matched to member P'
    std::vector<std::map<int, Polytope>> face_match;

    void fail(std::string v)
    {
        ok = false;
        violations.push_back(std::move(v));
    }
};

// Canonical lattice basis (rows, Hermite form) of the annihilator of the
// member's direction space.
ZMat annihilator_basis(const Polytope& member);

// Local polytope for a zero-dimensional dual cell.
Polytope point_dual();

// anchor + B^T y over local points y, with B = annihilator_basis(member).
Polytope embed_dual(const Polytope& member, const DualCellSpec& spec);

// For each member P: (a) the dual tangent cones of the embedded dual at its
// faces, pushed through the pairing, must be exactly the cones of the normal
// fan at P, one face per containing member; (b) for each face pair Q < P, the
// face of Q's dual matched to P must coincide with the embedded dual of P.
GluingReport validate_gluing(const GluingDatum& g, const Decomposition& d);

struct DualComplex {
    int ambient = 0;
    std::vector<Polytope> cells; // embedded duals, indexed by member id
    // (q, p) with member q a face of member p: cells[p] is a face of cells[q]
    std::vector<std::pair<int, int>> identifications;

    std::vector<int> cells_containing(const QVec& w) const;
    // member id whose cell holds w in its relative interior; -1 outside
    int carrier(const QVec& w) const;
    // orthogonal projection onto the affine hull of cells[p]
    QVec project(int p, const QVec& w) const;
};

// Throws std::runtime_error on gluing violations unless a report sink is
// given, in which case the violations land there.
DualComplex build_dual_complex(const GluingDatum& g, const Decomposition& d,
                               GluingReport* report = nullptr);

} // namespace tropikit
