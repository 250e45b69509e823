#include "tropikit/diagonal.hpp"

#include <stdexcept>

namespace tropikit {

namespace {

std::vector<ZVec> cone_span_lattice(const Cone& c)
{
    std::vector<ZVec> rows = c.rays;
    rows.insert(rows.end(), c.lineality.begin(), c.lineality.end());
    if (rows.empty()) return {};
    const ZMat sat = saturate_rowspace(ZMat::from_rows(rows));
    std::vector<ZVec> out;
    for (int i = 0; i < sat.rows; ++i) out.push_back(sat.row(i));
    return out;
}

RationalSubspace cone_span(const FaceCone& fc)
{
    std::vector<QVec> dirs;
    for (const ZVec& v : fc.span_lattice) dirs.push_back(to_qvec(v));
    return RationalSubspace(fc.cone.ambient, dirs);
}

Polytope cone_as_polytope(const Cone& c, const QVec& apex)
{
    return Polytope::from_v(c.ambient, {apex}, c.rays, c.lineality);
}

} // namespace

std::vector<FaceCone> face_cones(const Polytope& p)
{
    const DelzantReport gate = is_delzant(p);
    if (!gate.ok)
        throw std::invalid_argument("polytope is not Delzant: " + gate.reason);

    std::vector<FaceCone> out;
    for (const Polytope& q : p.all_faces()) {
        FaceCone fc;
        fc.face = q;
        fc.cone = cone_of_polytope_at_face(p, q).dual;
        fc.span_lattice = cone_span_lattice(fc.cone);
        out.push_back(std::move(fc));
    }
    return out;
}

DisplacedIntersection displaced_intersection(const FaceCone& minus,
                                             const FaceCone& plus,
                                             const QVec& eta)
{
    const int n = minus.cone.ambient;
    if (plus.cone.ambient != n || int(eta.size()) != n)
        throw std::invalid_argument("ambient dimension mismatch");

    const Polytope shifted = cone_as_polytope(minus.cone, eta);
    const Polytope fixed = cone_as_polytope(plus.cone, QVec(size_t(n), Rational(0)));
    const Polytope hit = intersect(shifted, fixed);

    DisplacedIntersection out;
    if (hit.empty) return out;
    if (hit.dim() >= 1) {
        out.kind = DisplacedKind::higher;
        return out;
    }

    const QVec z = hit.vertices.at(0);
    out.point = z;
    QVec back = z;
    for (int i = 0; i < n; ++i) back[size_t(i)] -= eta[size_t(i)];

    std::string why;
    if (minus.cone.dim() + plus.cone.dim() != n)
        why = "dimensions do not complement";
    else if (cone_span(minus).sum(cone_span(plus)).is_proper())
        why = "spans do not fill the ambient space";
    else if (!minus.cone.contains_in_relint(back) ||
             !plus.cone.contains_in_relint(z))
        why = "meets a cone boundary";

    if (why.empty()) {
        out.kind = DisplacedKind::point;
    } else {
        out.kind = DisplacedKind::degenerate;
        out.detail = why;
    }
    return out;
}

GenericityCertificate certify_generic(const std::vector<FaceCone>& cones,
                                      const QVec& eta)
{
    for (size_t i = 0; i < cones.size(); ++i) {
        const RationalSubspace si = cone_span(cones[i]);
        for (size_t j = i; j < cones.size(); ++j) {
            const RationalSubspace s = si.sum(cone_span(cones[j]));
            if (s.is_proper() && s.contains(eta))
                return {false, int(i), int(j)};
        }
    }
    return {};
}

DiagonalDecomposition diagonal_decomposition(const Polytope& p, const QVec& eta)
{
    DiagonalDecomposition out;
    out.cones = face_cones(p);

    const GenericityCertificate cert = certify_generic(out.cones, eta);
    if (!cert.ok)
        throw std::invalid_argument(
            "displacement direction lies in the span sum of face pair (" +
            std::to_string(cert.minus) + ", " + std::to_string(cert.plus) + ")");

    const int n = p.ambient;
    for (size_t i = 0; i < out.cones.size(); ++i)
        for (size_t j = 0; j < out.cones.size(); ++j) {
            const DisplacedIntersection hit =
                displaced_intersection(out.cones[i], out.cones[j], eta);
            if (hit.kind == DisplacedKind::degenerate)
                throw std::logic_error("certified direction produced a "
                                       "degenerate pair: " + hit.detail);
            if (hit.kind != DisplacedKind::point) continue;

            std::vector<ZVec> rows = out.cones[i].span_lattice;
            rows.insert(rows.end(), out.cones[j].span_lattice.begin(),
                        out.cones[j].span_lattice.end());
            ZMat stack(int(rows.size()), n);
            for (size_t r = 0; r < rows.size(); ++r) stack.set_row(int(r), rows[r]);
            const LatticeIndex idx = lattice_index(stack);
            if (!idx.finite)
                throw std::logic_error("transverse pair with infinite index");
            out.pairs.push_back({int(i), int(j), idx.value});
        }
    return out;
}

} // namespace tropikit
