#include "tropikit/decomposition.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace tropikit {

int Decomposition::find_member(const Polytope& p) const
{
    for (size_t i = 0; i < members.size(); ++i)
        if (members[i].equals(p)) return int(i);
    return -1;
}

std::vector<int> Decomposition::supersets(int id) const
{
    std::vector<int> out{id};
    for (const auto& [f, p] : face_pairs)
        if (f == id) out.push_back(p);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> Decomposition::proper_faces_of(int id) const
{
    std::vector<int> out;
    for (const auto& [f, p] : face_pairs)
        if (p == id) out.push_back(f);
    std::sort(out.begin(), out.end());
    return out;
}

Decomposition make_decomposition(int ambient, std::vector<Polytope> members,
                                 DecompositionReport& report,
                                 const std::vector<std::pair<int, int>>* supplied_faces)
{
    report = {};
    Decomposition d;
    d.ambient = ambient;
    d.members = std::move(members);

    if (d.members.empty()) report.fail("decomposition has no members");
    for (size_t i = 0; i < d.members.size(); ++i) {
        if (d.members[i].ambient != ambient)
            report.fail("member " + std::to_string(i) + ": ambient dimension mismatch");
        if (d.members[i].empty)
            report.fail("member " + std::to_string(i) + " is empty");
    }
    if (!report.ok) return d;

    for (size_t i = 0; i < d.members.size(); ++i)
        for (size_t j = i + 1; j < d.members.size(); ++j)
            if (d.members[i].equals(d.members[j]))
                report.fail("members " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
    if (!report.ok) return d;

    for (size_t i = 0; i < d.members.size(); ++i)
        for (size_t j = 0; j < d.members.size(); ++j)
            if (i != j && d.members[j].has_face(d.members[i]))
                d.face_pairs.emplace_back(int(i), int(j));

    for (size_t i = 0; i < d.members.size(); ++i) {
        for (size_t j = i + 1; j < d.members.size(); ++j) {
            Polytope cap = intersect(d.members[i], d.members[j]);
            if (cap.empty) continue;
            const std::string pair = "members " + std::to_string(i) + " and " + std::to_string(j);
            if (d.find_member(cap) < 0)
                report.fail("intersection of " + pair + " is not a member");
            if (!d.members[i].has_face(cap) || !d.members[j].has_face(cap))
                report.fail("intersection of " + pair + " is not a face of both");
        }
    }

    if (supplied_faces) {
        std::set<std::pair<int, int>> inferred(d.face_pairs.begin(), d.face_pairs.end());
        std::set<std::pair<int, int>> given(supplied_faces->begin(), supplied_faces->end());
        for (const auto& fp : given)
            if (!inferred.count(fp))
                report.fail("declared face pair (" + std::to_string(fp.first) + "," +
                            std::to_string(fp.second) + ") is not geometric");
        for (const auto& fp : inferred)
            if (!given.count(fp))
                report.fail("face pair (" + std::to_string(fp.first) + "," +
                            std::to_string(fp.second) + ") missing from the declared relation");
    }

    return d;
}

const Cone* NormalFan::cone_of(int member_id) const
{
    for (const auto& [id, c] : cones)
        if (id == member_id) return &c;
    return nullptr;
}

Cone NormalFan::quotient_cone(int member_id) const
{
    const Cone* c = cone_of(member_id);
    if (!c) throw std::invalid_argument("quotient_cone: member not in fan");
    if (quotient_map.rows == 0) {
        Cone zero;
        zero.ambient = 0;
        return zero;
    }
    return map_cone(*c, quotient_map);
}

NormalFan normal_fan(const Decomposition& d, int q)
{
    if (q < 0 || q >= int(d.members.size()))
        throw std::invalid_argument("normal_fan: unknown member");
    const Polytope& base = d.member(q);

    NormalFan fan;
    fan.ambient = d.ambient;
    fan.at_member = q;
    fan.base_point = base.relint_point();

    std::vector<ZVec> dirs = base.direction_lattice();
    if (dirs.empty()) {
        fan.quotient_map = QMat::identity(d.ambient);
    } else {
        ZMat dmat(int(dirs.size()), d.ambient);
        for (size_t i = 0; i < dirs.size(); ++i)
            for (int j = 0; j < d.ambient; ++j) dmat(int(i), j) = dirs[i][size_t(j)];
        SnfResult s = smith_normal_form(dmat);
        int r = 0;
        const int nmin = std::min(s.D.rows, s.D.cols);
        for (int i = 0; i < nmin; ++i)
            if (s.D(i, i) != 0) ++r;
        // Coordinates in the basis given by the rows of V^-1 are V^T x; the
        // first r of them span the direction lattice, the rest present the
        // quotient.
        fan.quotient_map = QMat(d.ambient - r, d.ambient);
        for (int i = r; i < d.ambient; ++i)
            for (int j = 0; j < d.ambient; ++j)
                fan.quotient_map(i - r, j) = Rational(s.V(j, i));
    }

    for (int p : d.supersets(q))
        fan.cones.emplace_back(p, d.member(p).tangent_cone_at(base));
    return fan;
}

} // namespace tropikit
