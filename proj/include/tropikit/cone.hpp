#pragma once

#include "tropikit/lp.hpp"
#include "tropikit/snf.hpp"
#include "tropikit/subspace.hpp"

namespace tropikit {

// Convex rational polyhedral cone { x : a.x >= 0 (ineqs), e.x = 0 (eqs) }
// with generators rays/lineality.  Both representations are kept in sync:
// construct via from_h or from_v.
struct Cone {
    int ambient = 0;
    std::vector<ZVec> rays;      // primitive, extreme, reduced mod lineality
    std::vector<ZVec> lineality; // saturated lattice basis of the lineality space
    std::vector<ZVec> ineqs;     // minimal inequality normals (primitive)
    std::vector<ZVec> eqs;       // basis of the span's annihilator

    static Cone from_h(int ambient, std::vector<ZVec> ineqs, std::vector<ZVec> eqs);
    static Cone from_v(int ambient, std::vector<ZVec> rays, std::vector<ZVec> lineality);
    static Cone zero(int ambient);
    static Cone full(int ambient);

    int dim() const;
    int lineality_dim() const { return int(lineality.size()); }
    bool is_pointed() const { return lineality.empty(); }
    bool is_zero() const { return rays.empty() && lineality.empty(); }

    bool contains(const QVec& x) const;
    bool contains_in_relint(const QVec& x) const;
    bool contains(const Cone& other) const; // other subset of this
    bool equals(const Cone& other) const;

    // Sum of extreme rays (zero vector for a linear subspace / zero cone):
    // a relative-interior point.
    QVec relint_point() const;

    Cone dual() const;
    Cone intersect(const Cone& other) const;
    RationalSubspace span() const;
    RationalSubspace lineality_space() const;
};

// Raw ray enumeration (double description); returns extreme rays reduced
// modulo the lineality kernel of the row system.
struct VRep {
    std::vector<ZVec> rays;
    std::vector<ZVec> lineality;
};
VRep dd_rays(int ambient, const std::vector<ZVec>& ineqs, const std::vector<ZVec>& eqs);

// Exhaustive subset-enumeration oracle for the same task (test cross-check).
VRep enumerate_rays_bruteforce(int ambient, const std::vector<ZVec>& ineqs, const std::vector<ZVec>& eqs);

struct HRep {
    std::vector<ZVec> ineqs;
    std::vector<ZVec> eqs;
};

// Removes rows implied by the others (exact LP test).
HRep remove_redundant_rows(int ambient, HRep h);

// Eliminates coordinate `var` by Fourier-Motzkin; result lives in R^(ambient-1).
HRep fm_eliminate(int ambient, const HRep& h, int var);

// Image of the cone under projection to the listed coordinates, computed by
// repeated Fourier-Motzkin elimination on the H-representation.
Cone project_cone_fm(const Cone& c, const std::vector<int>& keep);

// Same image computed on the V-representation (double-description route).
Cone project_cone_dd(const Cone& c, const std::vector<int>& keep);

// Image under an arbitrary linear map given by rows (maps ambient -> rows count).
Cone map_cone(const Cone& c, const QMat& m);

} // namespace tropikit
