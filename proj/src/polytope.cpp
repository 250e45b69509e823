#include "tropikit/polytope.hpp"

#include <algorithm>
#include <set>

namespace tropikit {

namespace {

// Homogenization: P = {x : a.x >= c} becomes {(x,t) : a.x - c t >= 0, t >= 0}.
ZVec homog_row(int ambient, const QVec& normal, const Rational& constant)
{
    QVec row(ambient + 1);
    for (int j = 0; j < ambient; ++j) row[j] = normal[j];
    row[ambient] = -constant;
    return primitive_part(clear_denominators(row)).p;
}

Polytope from_cone(int ambient, const Cone& c)
{
    Polytope p;
    p.ambient = ambient;

    for (const auto& row : c.eqs) {
        ZVec normal(row.begin(), row.begin() + ambient);
        if (is_zero(normal)) {
            if (row[ambient] != 0) { p.empty = true; }
            continue;
        }
        PrimitivePart pp = primitive_part(normal);
        p.equations.push_back({pp.p, Rational(-row[ambient]) / Rational(pp.g)});
    }
    for (const auto& row : c.ineqs) {
        ZVec normal(row.begin(), row.begin() + ambient);
        if (is_zero(normal)) continue; // the t >= 0 row
        PrimitivePart pp = primitive_part(normal);
        p.halfspaces.push_back({pp.p, Rational(-row[ambient]) / Rational(pp.g)});
    }
    for (const auto& r : c.rays) {
        if (r[ambient] > 0) {
            QVec v(ambient);
            for (int j = 0; j < ambient; ++j) v[j] = Rational(r[j]) / Rational(r[ambient]);
            p.vertices.push_back(v);
        } else {
            ZVec dir(r.begin(), r.begin() + ambient);
            p.rec_rays.push_back(primitive_part(dir).p);
        }
    }
    {
        // canonical presentation: reduced-echelon basis of the lineality space
        std::vector<QVec> lin;
        for (const auto& l : c.lineality) {
            ZVec dir(l.begin(), l.begin() + ambient);
            if (!is_zero(dir)) lin.push_back(to_qvec(dir));
        }
        RationalSubspace ls(ambient, lin);
        for (int i = 0; i < ls.dim(); ++i)
            p.rec_lineality.push_back(primitive_part(clear_denominators(ls.basis().row(i))).p);
    }
    if (p.vertices.empty() && !p.empty) {
        // no t > 0 generator means the homogenized cone lies in {t = 0}
        p.empty = true;
        p.halfspaces.clear();
        p.equations.clear();
        p.rec_rays.clear();
        p.rec_lineality.clear();
    }
    std::sort(p.vertices.begin(), p.vertices.end());
    std::sort(p.rec_rays.begin(), p.rec_rays.end());
    std::sort(p.rec_lineality.begin(), p.rec_lineality.end());
    return p;
}

} // namespace

Polytope Polytope::from_h(int ambient, const std::vector<Halfspace>& hs,
                          const std::vector<AffineEquation>& eqs)
{
    std::vector<ZVec> rows, eqrows;
    for (const auto& h : hs) rows.push_back(homog_row(ambient, to_qvec(h.normal), h.constant));
    ZVec tpos(ambient + 1, Int(0));
    tpos[ambient] = 1;
    rows.push_back(tpos);
    for (const auto& e : eqs) eqrows.push_back(homog_row(ambient, to_qvec(e.normal), e.constant));
    Cone c = Cone::from_h(ambient + 1, rows, eqrows);
    return from_cone(ambient, c);
}

Polytope Polytope::from_v(int ambient, const std::vector<QVec>& vertices,
                          const std::vector<ZVec>& rays, const std::vector<ZVec>& lineality)
{
    if (vertices.empty()) {
        Polytope p;
        p.ambient = ambient;
        p.empty = true;
        return p;
    }
    std::vector<ZVec> crays, clin;
    for (const auto& v : vertices) {
        QVec h(v);
        h.push_back(Rational(1));
        crays.push_back(primitive_part(clear_denominators(h)).p);
    }
    for (const auto& r : rays) {
        ZVec h(r);
        h.push_back(Int(0));
        crays.push_back(h);
    }
    for (const auto& l : lineality) {
        ZVec h(l);
        h.push_back(Int(0));
        clin.push_back(h);
    }
    Cone c = Cone::from_v(ambient + 1, crays, clin);
    return from_cone(ambient, c);
}

int Polytope::dim() const
{
    if (empty) return -1;
    return ambient - int(equations.size());
}

bool Polytope::contains(const QVec& x) const
{
    if (empty) return false;
    for (const auto& h : halfspaces)
        if (dot(to_qvec(h.normal), x) < h.constant) return false;
    for (const auto& e : equations)
        if (dot(to_qvec(e.normal), x) != e.constant) return false;
    return true;
}

bool Polytope::contains_in_relint(const QVec& x) const
{
    if (empty) return false;
    for (const auto& h : halfspaces)
        if (dot(to_qvec(h.normal), x) <= h.constant) return false;
    for (const auto& e : equations)
        if (dot(to_qvec(e.normal), x) != e.constant) return false;
    return true;
}

bool Polytope::contains_polytope(const Polytope& q) const
{
    if (q.empty) return true;
    if (empty) return false;
    for (const auto& v : q.vertices)
        if (!contains(v)) return false;
    // recession containment
    for (const auto& h : halfspaces) {
        for (const auto& r : q.rec_rays)
            if (dot(h.normal, r) < 0) return false;
        for (const auto& l : q.rec_lineality)
            if (dot(h.normal, l) != 0) return false;
    }
    for (const auto& e : equations) {
        for (const auto& r : q.rec_rays)
            if (dot(e.normal, r) != 0) return false;
        for (const auto& l : q.rec_lineality)
            if (dot(e.normal, l) != 0) return false;
    }
    return true;
}

bool Polytope::equals(const Polytope& q) const
{
    if (empty || q.empty) return empty == q.empty;
    return contains_polytope(q) && q.contains_polytope(*this);
}

QVec Polytope::relint_point() const
{
    if (empty) throw std::invalid_argument("relint_point: empty polytope");
    QVec p(ambient, Rational(0));
    for (const auto& v : vertices)
        for (int j = 0; j < ambient; ++j) p[j] += v[j];
    Rational inv = Rational(1) / Rational(int(vertices.size()));
    for (int j = 0; j < ambient; ++j) p[j] *= inv;
    for (const auto& r : rec_rays)
        for (int j = 0; j < ambient; ++j) p[j] += Rational(r[j]);
    return p;
}

RationalSubspace Polytope::direction_space() const
{
    if (empty) return RationalSubspace(ambient);
    std::vector<QVec> dirs;
    for (size_t i = 1; i < vertices.size(); ++i) dirs.push_back(vertices[i] - vertices[0]);
    for (const auto& r : rec_rays) dirs.push_back(to_qvec(r));
    for (const auto& l : rec_lineality) dirs.push_back(to_qvec(l));
    return RationalSubspace(ambient, dirs);
}

std::vector<ZVec> Polytope::direction_lattice() const
{
    RationalSubspace s = direction_space();
    if (s.dim() == 0) return {};
    ZMat m(s.dim(), ambient);
    for (int i = 0; i < m.rows; ++i) {
        ZVec r = clear_denominators(s.basis().row(i));
        for (int j = 0; j < ambient; ++j) m(i, j) = r[j];
    }
    ZMat sat = saturate_rowspace(m);
    std::vector<ZVec> out;
    for (int i = 0; i < sat.rows; ++i) out.push_back(sat.row(i));
    return out;
}

std::vector<int> Polytope::tight_at(const QVec& x) const
{
    std::vector<int> tight;
    for (size_t i = 0; i < halfspaces.size(); ++i)
        if (dot(to_qvec(halfspaces[i].normal), x) == halfspaces[i].constant) tight.push_back(int(i));
    return tight;
}

Polytope Polytope::face(const std::vector<int>& tight_halfspaces) const
{
    std::vector<AffineEquation> eqs;
    for (const auto& e : equations) eqs.push_back(e);
    for (int i : tight_halfspaces)
        eqs.push_back({halfspaces[size_t(i)].normal, halfspaces[size_t(i)].constant});
    return from_h(ambient, halfspaces, eqs);
}

std::vector<Polytope> Polytope::all_faces() const
{
    std::vector<Polytope> out;
    if (empty) return out;
    const int m = int(halfspaces.size());
    if (m > 20) throw std::invalid_argument("all_faces: too many halfspaces");
    std::set<std::vector<QVec>> seen;
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        std::vector<int> tight;
        for (int i = 0; i < m; ++i)
            if (mask & (1u << i)) tight.push_back(i);
        Polytope f = face(tight);
        if (f.empty) continue;
        std::vector<QVec> sig = f.vertices;
        for (const auto& r : f.rec_rays) sig.push_back(to_qvec(r));
        for (const auto& l : f.rec_lineality) sig.push_back(to_qvec(l));
        sig.push_back(QVec{Rational(int(f.dim()))});
        if (seen.insert(sig).second) out.push_back(std::move(f));
    }
    return out;
}

bool Polytope::has_face(const Polytope& q) const
{
    if (q.empty || empty) return false;
    if (!contains_polytope(q)) return false;
    QVec x = q.relint_point();
    Polytope f = face(tight_at(x));
    return f.equals(q);
}

Cone Polytope::tangent_cone_at(const Polytope& q) const
{
    if (!has_face(q)) throw std::invalid_argument("tangent_cone_at: not a face");
    QVec x = q.relint_point();
    std::vector<ZVec> rows;
    for (int i : tight_at(x)) rows.push_back(halfspaces[size_t(i)].normal);
    std::vector<ZVec> eqrows;
    for (const auto& e : equations) eqrows.push_back(e.normal);
    return Cone::from_h(ambient, rows, eqrows);
}

DelzantReport is_delzant(const Polytope& p)
{
    DelzantReport rep;
    if (p.empty) {
        rep.reason = "empty polytope";
        return rep;
    }
    if (!p.pointed() || p.vertices.empty()) {
        rep.reason = "no vertex (lineality present)";
        return rep;
    }
    const int d = p.dim();
    for (const auto& v : p.vertices) {
        std::vector<int> tight = p.tight_at(v);
        if (int(tight.size()) != d) {
            rep.failing_vertex = format_qvec(v);
            rep.reason = "vertex not simple";
            return rep;
        }
        ZMat normals(int(tight.size()), p.ambient);
        for (size_t i = 0; i < tight.size(); ++i)
            for (int j = 0; j < p.ambient; ++j) normals(int(i), j) = p.halfspaces[size_t(tight[i])].normal[j];
        SnfResult s = smith_normal_form(normals);
        const int nmin = std::min(s.D.rows, s.D.cols);
        for (int i = 0; i < nmin; ++i) {
            if (s.D(i, i) == 0) {
                rep.failing_vertex = format_qvec(v);
                rep.reason = "facet normals dependent";
                return rep;
            }
            if (s.D(i, i) != 1) {
                rep.failing_vertex = format_qvec(v);
                rep.reason = "vertex determinant " + s.D(i, i).str();
                return rep;
            }
        }
    }
    rep.ok = true;
    return rep;
}

ConeAtFace cone_of_polytope_at_face(const Polytope& p, const Polytope& q)
{
    ConeAtFace out;
    out.cone = p.tangent_cone_at(q);
    out.dual = out.cone.dual();
    return out;
}

Polytope intersect(const Polytope& a, const Polytope& b)
{
    if (a.ambient != b.ambient) throw std::invalid_argument("intersect: ambient mismatch");
    std::vector<Halfspace> hs = a.halfspaces;
    hs.insert(hs.end(), b.halfspaces.begin(), b.halfspaces.end());
    std::vector<AffineEquation> eqs = a.equations;
    eqs.insert(eqs.end(), b.equations.begin(), b.equations.end());
    return Polytope::from_h(a.ambient, hs, eqs);
}

} // namespace tropikit
