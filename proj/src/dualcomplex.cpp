#include "tropikit/dualcomplex.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace tropikit {

ZMat annihilator_basis(const Polytope& member)
{
    std::vector<ZVec> dirs = member.direction_lattice();
    if (dirs.empty()) return hermite_normal_form(ZMat::identity(member.ambient));
    ZMat dmat(int(dirs.size()), member.ambient);
    for (size_t i = 0; i < dirs.size(); ++i)
        for (int j = 0; j < member.ambient; ++j) dmat(int(i), j) = dirs[i][size_t(j)];
    return hermite_normal_form(integer_kernel(dmat));
}

Polytope point_dual()
{
    Polytope p;
    p.ambient = 0;
    p.vertices = {QVec{}};
    return p;
}

Polytope embed_dual(const Polytope& member, const DualCellSpec& spec)
{
    const int n = member.ambient;
    ZMat b = annihilator_basis(member);
    if (spec.local.ambient != b.rows)
        throw std::invalid_argument("embed_dual: local dual dimension does not match the annihilator");
    if (int(spec.anchor.size()) != n)
        throw std::invalid_argument("embed_dual: anchor dimension mismatch");

    auto push_point = [&](const QVec& y) {
        QVec x = spec.anchor;
        for (int i = 0; i < b.rows; ++i)
            for (int j = 0; j < n; ++j) x[size_t(j)] += y[size_t(i)] * Rational(b(i, j));
        return x;
    };
    auto push_dir = [&](const ZVec& y) {
        ZVec x(size_t(n), Int(0));
        for (int i = 0; i < b.rows; ++i)
            for (int j = 0; j < n; ++j) x[size_t(j)] += y[size_t(i)] * b(i, j);
        return x;
    };

    std::vector<QVec> verts;
    for (const auto& v : spec.local.vertices) verts.push_back(push_point(v));
    std::vector<ZVec> rays, lin;
    for (const auto& r : spec.local.rec_rays) rays.push_back(push_dir(r));
    for (const auto& l : spec.local.rec_lineality) lin.push_back(push_dir(l));
    return Polytope::from_v(n, verts, rays, lin);
}

GluingReport validate_gluing(const GluingDatum& g, const Decomposition& d)
{
    GluingReport rep;
    const int n = d.ambient;
    const int m = int(d.members.size());
    rep.embedded.resize(size_t(m));
    rep.face_match.resize(size_t(m));

    std::vector<int> spec_of(size_t(m), -1);
    for (size_t i = 0; i < g.duals.size(); ++i) {
        int id = g.duals[i].polytope;
        if (id < 0 || id >= m) {
            rep.fail("dual " + std::to_string(i) + " references unknown member");
            continue;
        }
        if (spec_of[size_t(id)] >= 0)
            rep.fail("member " + std::to_string(id) + " has more than one dual");
        spec_of[size_t(id)] = int(i);
    }
    for (int id = 0; id < m; ++id)
        if (spec_of[size_t(id)] < 0)
            rep.fail("member " + std::to_string(id) + " has no dual");
    if (!rep.ok) return rep;

    QMat pairing = g.pairing ? *g.pairing : QMat::identity(n);
    if (pairing.rows != n || pairing.cols != n || det(pairing) == 0) {
        rep.fail("pairing matrix is not an invertible n x n matrix");
        return rep;
    }

    for (int id = 0; id < m; ++id) {
        const DualCellSpec& spec = g.duals[size_t(spec_of[size_t(id)])];
        ZMat b = annihilator_basis(d.member(id));
        if (spec.local.ambient != b.rows) {
            rep.fail("member " + std::to_string(id) + ": dual coordinates have dimension " +
                     std::to_string(spec.local.ambient) + ", annihilator has dimension " +
                     std::to_string(b.rows));
            continue;
        }
        if (int(spec.anchor.size()) != n) {
            rep.fail("member " + std::to_string(id) + ": anchor dimension mismatch");
            continue;
        }
        if (spec.local.empty) {
            rep.fail("member " + std::to_string(id) + ": dual polytope is empty");
            continue;
        }
        rep.embedded[size_t(id)] = embed_dual(d.member(id), spec);
    }
    if (!rep.ok) return rep;

    for (int id = 0; id < m; ++id) {
        NormalFan fan = normal_fan(d, id);
        std::vector<Polytope> faces = rep.embedded[size_t(id)].all_faces();
        if (faces.size() != fan.cones.size())
            rep.fail("member " + std::to_string(id) + ": dual has " + std::to_string(faces.size()) +
                     " faces, normal fan has " + std::to_string(fan.cones.size()) + " cones");
        std::set<int> matched;
        for (const auto& face : faces) {
            Cone mapped = map_cone(rep.embedded[size_t(id)].tangent_cone_at(face).dual(), pairing);
            int hit = -1;
            for (const auto& [pid, cone] : fan.cones)
                if (!matched.count(pid) && cone.equals(mapped)) {
                    hit = pid;
                    break;
                }
            if (hit < 0) {
                std::ostringstream os;
                os << "member " << id << ": dual face at " << format_qvec(face.relint_point())
                   << " matches no cone of the normal fan";
                rep.fail(os.str());
                continue;
            }
            matched.insert(hit);
            rep.face_match[size_t(id)].emplace(hit, face);
        }
        for (const auto& [pid, cone] : fan.cones)
            if (!matched.count(pid))
                rep.fail("member " + std::to_string(id) + ": no dual face realizes the cone at member " +
                         std::to_string(pid));
    }
    if (!rep.ok) return rep;

    for (const auto& [q, p] : d.face_pairs) {
        auto it = rep.face_match[size_t(q)].find(p);
        if (it == rep.face_match[size_t(q)].end()) continue;
        if (!it->second.equals(rep.embedded[size_t(p)]))
            rep.fail("members " + std::to_string(q) + " < " + std::to_string(p) +
                     ": matched face of the smaller member's dual differs from the embedded dual");
    }
    return rep;
}

std::vector<int> DualComplex::cells_containing(const QVec& w) const
{
    std::vector<int> out;
    for (size_t i = 0; i < cells.size(); ++i)
        if (cells[i].contains(w)) out.push_back(int(i));
    return out;
}

int DualComplex::carrier(const QVec& w) const
{
    for (size_t i = 0; i < cells.size(); ++i)
        if (cells[i].contains_in_relint(w)) return int(i);
    return -1;
}

QVec DualComplex::project(int p, const QVec& w) const
{
    const Polytope& cell = cells.at(size_t(p));
    QVec a = cell.relint_point();
    QMat dirs = cell.direction_space().basis();
    if (dirs.rows == 0) return a;
    QVec rel(w.size());
    for (size_t i = 0; i < w.size(); ++i) rel[i] = w[i] - a[i];
    QMat gram(dirs.rows, dirs.rows);
    QVec rhs(size_t(dirs.rows));
    for (int i = 0; i < dirs.rows; ++i) {
        rhs[size_t(i)] = dot(dirs.row(i), rel);
        for (int j = 0; j < dirs.rows; ++j) gram(i, j) = dot(dirs.row(i), dirs.row(j));
    }
    auto coeff = solve(gram, rhs);
    if (!coeff) throw std::logic_error("project: singular Gram matrix");
    QVec out = a;
    for (int i = 0; i < dirs.rows; ++i)
        for (size_t j = 0; j < w.size(); ++j) out[j] += (*coeff)[size_t(i)] * dirs(i, int(j));
    return out;
}

DualComplex build_dual_complex(const GluingDatum& g, const Decomposition& d, GluingReport* report)
{
    GluingReport rep = validate_gluing(g, d);
    if (report) *report = rep;
    if (!rep.ok) {
        if (report) return {};
        std::string msg = "gluing datum invalid";
        for (const auto& v : rep.violations) msg += "; " + v;
        throw std::runtime_error(msg);
    }
    DualComplex dc;
    dc.ambient = d.ambient;
    dc.cells = rep.embedded;
    dc.identifications = d.face_pairs;
    return dc;
}

} // namespace tropikit
