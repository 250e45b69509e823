#include "tropikit/tropical.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace tropikit {

namespace {

std::string vid_str(int id) { return "vertex " + std::to_string(id); }
std::string eid_str(int id) { return "edge " + std::to_string(id); }

struct BlockLayout {
    int n = 0;
    std::vector<int> vertex_ids;
    std::map<int, int> index;
};

BlockLayout layout_of(const TropicalGraph& g, int n)
{
    BlockLayout l;
    l.n = n;
    for (const auto& v : g.vertices) {
        l.index[v.id] = int(l.vertex_ids.size());
        l.vertex_ids.push_back(v.id);
    }
    return l;
}

ZVec padded(int total, int offset, const ZVec& v)
{
    ZVec out(size_t(total), Int(0));
    for (size_t j = 0; j < v.size(); ++j) out[size_t(offset) + j] = v[j];
    return out;
}

enum class DiffMode { ray, line, none };

struct EdgeConstraint {
    int v_plus = -1;
    int v_minus = -1;
    ZVec slope;
    DiffMode mode = DiffMode::ray;
};

// Polytope over the concatenated vertex blocks with per-block constraints and
// a lifted length variable for every nonzero-slope difference condition.
Polytope lifted_block_polytope(const BlockLayout& l,
                               const std::vector<std::vector<Halfspace>>& block_hs,
                               const std::vector<std::vector<AffineEquation>>& block_eqs,
                               const std::vector<EdgeConstraint>& cons)
{
    const int nb = int(l.vertex_ids.size());
    int aux = 0;
    for (const auto& c : cons)
        if (c.mode != DiffMode::none && !is_zero(c.slope)) ++aux;
    const int total = l.n * nb + aux;

    std::vector<Halfspace> hs;
    std::vector<AffineEquation> eqs;
    for (int b = 0; b < nb; ++b) {
        for (const auto& h : block_hs[size_t(b)])
            hs.push_back({padded(total, b * l.n, h.normal), h.constant});
        for (const auto& e : block_eqs[size_t(b)])
            eqs.push_back({padded(total, b * l.n, e.normal), e.constant});
    }
    int next = l.n * nb;
    for (const auto& c : cons) {
        if (c.mode == DiffMode::none) continue;
        const int bp = l.index.at(c.v_plus) * l.n;
        const int bm = l.index.at(c.v_minus) * l.n;
        const bool lifted = !is_zero(c.slope);
        const int col = lifted ? next++ : -1;
        for (int j = 0; j < l.n; ++j) {
            ZVec row(size_t(total), Int(0));
            row[size_t(bp + j)] += 1;
            row[size_t(bm + j)] -= 1;
            if (lifted) row[size_t(col)] -= c.slope[size_t(j)];
            eqs.push_back({std::move(row), Rational(0)});
        }
        if (lifted && c.mode == DiffMode::ray) {
            ZVec row(size_t(total), Int(0));
            row[size_t(col)] = 1;
            hs.push_back({std::move(row), Rational(0)});
        }
    }
    return Polytope::from_h(total, hs, eqs);
}

QVec cut_q(const QVec& v, int k)
{
    return QVec(v.begin(), v.begin() + k);
}

ZVec cut_z(const ZVec& v, int k)
{
    return ZVec(v.begin(), v.begin() + k);
}

// Forgetting the lifted length variables; on these systems the lengths are
// affine functions of the blocks, so dimensions and relative interiors agree.
WeightCone project_to_blocks(const BlockLayout& l, const Polytope& lifted)
{
    WeightCone w;
    w.ambient = l.n;
    w.vertex_ids = l.vertex_ids;
    const int keep = l.n * int(l.vertex_ids.size());
    if (lifted.empty) {
        w.set.ambient = keep;
        w.set.empty = true;
        w.empty = true;
        w.dim = -1;
        return w;
    }
    std::vector<QVec> verts;
    for (const auto& v : lifted.vertices) verts.push_back(cut_q(v, keep));
    std::vector<ZVec> rays, lin;
    for (const auto& rr : lifted.rec_rays) {
        ZVec c = cut_z(rr, keep);
        if (!is_zero(c)) rays.push_back(std::move(c));
    }
    for (const auto& ll : lifted.rec_lineality) {
        ZVec c = cut_z(ll, keep);
        if (!is_zero(c)) lin.push_back(std::move(c));
    }
    w.set = Polytope::from_v(keep, verts, rays, lin);
    w.empty = false;
    w.dim = w.set.dim();
    w.anchor = cut_q(lifted.relint_point(), keep);
    return w;
}

const Polytope& cell_of(const DualComplex& dc, int member_id)
{
    return dc.cells.at(size_t(member_id));
}

struct WeightSystem {
    BlockLayout layout;
    Polytope lifted;
};

WeightSystem weight_system(const TropicalGraph& g, const Decomposition& d,
                           const DualComplex& dc)
{
    WeightSystem s;
    s.layout = layout_of(g, d.ambient);
    const size_t nb = s.layout.vertex_ids.size();
    std::vector<std::vector<Halfspace>> hs(nb);
    std::vector<std::vector<AffineEquation>> eqs(nb);
    for (size_t b = 0; b < nb; ++b) {
        const TropVertex* v = g.vertex(s.layout.vertex_ids[b]);
        const Polytope& cell = cell_of(dc, v->polytope);
        hs[b] = cell.halfspaces;
        eqs[b] = cell.equations;
    }
    std::vector<EdgeConstraint> cons;
    for (const auto& e : g.edges)
        if (e.is_node()) cons.push_back({e.v_plus, e.v_minus, e.slope, DiffMode::ray});
    s.lifted = lifted_block_polytope(s.layout, hs, eqs, cons);
    return s;
}

void unite(std::map<int, int>& parent, int a, int b)
{
    while (parent[a] != a) a = parent[a];
    while (parent[b] != b) b = parent[b];
    if (a != b) parent[a] = b;
}

int find_root(const std::map<int, int>& parent, int a)
{
    while (parent.at(a) != a) a = parent.at(a);
    return a;
}

} // namespace

const TropVertex* TropicalGraph::vertex(int id) const
{
    for (const auto& v : vertices)
        if (v.id == id) return &v;
    return nullptr;
}

const TropEdge* TropicalGraph::edge(int id) const
{
    for (const auto& e : edges)
        if (e.id == id) return &e;
    return nullptr;
}

std::vector<int> TropicalGraph::edges_at(int vertex_id) const
{
    std::vector<int> out;
    for (const auto& e : edges)
        if (e.v_plus == vertex_id || e.v_minus == vertex_id) out.push_back(e.id);
    return out;
}

int WeightCone::block_of(int vertex_id) const
{
    for (size_t i = 0; i < vertex_ids.size(); ++i)
        if (vertex_ids[i] == vertex_id) return int(i);
    throw std::invalid_argument("weight cone has no block for vertex " + std::to_string(vertex_id));
}

QVec WeightCone::vertex_part(const QVec& point, int vertex_id) const
{
    const int b = block_of(vertex_id);
    return QVec(point.begin() + size_t(b) * size_t(ambient),
                point.begin() + size_t(b + 1) * size_t(ambient));
}

GraphReport validate_tropical(const TropicalGraph& g, const Decomposition& d,
                              const DualComplex& dc)
{
    GraphReport r;
    const int n = d.ambient;
    if (g.vertices.empty()) {
        r.fail("graph has no vertices");
        return r;
    }

    std::set<int> vids;
    for (const auto& v : g.vertices) {
        if (!vids.insert(v.id).second) r.fail("duplicate " + vid_str(v.id));
        if (v.polytope < 0 || v.polytope >= int(d.members.size()))
            r.fail(vid_str(v.id) + " references no member of the decomposition");
        if (v.chern && int(v.chern->size()) != n)
            r.fail(vid_str(v.id) + " has a chern vector of wrong dimension");
    }
    std::set<int> eids;
    for (const auto& e : g.edges) {
        if (!eids.insert(e.id).second) r.fail("duplicate " + eid_str(e.id));
        if (int(e.slope.size()) != n) r.fail(eid_str(e.id) + " has a slope of wrong dimension");
        if (e.is_node()) {
            if (!g.vertex(e.v_plus) || !g.vertex(e.v_minus))
                r.fail(eid_str(e.id) + " has an unresolved endpoint");
            else if (e.v_plus == e.v_minus)
                r.fail(eid_str(e.id) + " is a loop");
            if (e.cls == EdgeClass::boundary_node && !e.length)
                r.fail(eid_str(e.id) + " is a boundary node without a length class");
        } else {
            if (e.v_plus != -1) r.fail(eid_str(e.id) + " is a leaf but carries two endpoints");
            if (!g.vertex(e.v_minus)) r.fail(eid_str(e.id) + " dangles at an unknown vertex");
        }
    }
    for (const auto& m : g.markings) {
        const TropEdge* e = g.edge(m.edge);
        if (!e || e->cls != EdgeClass::interior_leaf)
            r.fail("marking does not reference an interior leaf");
        if (m.tangency < 1) r.fail("marking on " + eid_str(m.edge) + " has nonpositive tangency");
    }
    if (!r.ok) return r;

    std::map<int, int> parent;
    for (const auto& v : g.vertices) parent[v.id] = v.id;
    bool cycle = false;
    for (const auto& e : g.edges) {
        if (!e.is_node()) continue;
        if (find_root(parent, e.v_plus) == find_root(parent, e.v_minus)) cycle = true;
        else unite(parent, e.v_plus, e.v_minus);
    }
    if (cycle) r.fail("graph contains a cycle");
    std::set<int> comps;
    for (const auto& v : g.vertices) comps.insert(find_root(parent, v.id));
    if (comps.size() > 1) r.fail("graph is not connected");

    bool any_disk = false;
    for (const auto& v : g.vertices) any_disk |= v.sort == VertexSort::disk;
    int root_vertex = -1;
    if (g.root_leaf != -1) {
        const TropEdge* rl = g.edge(g.root_leaf);
        if (!rl || rl->cls != EdgeClass::boundary_leaf)
            r.fail("root is not a boundary leaf");
        else if (g.vertex(rl->v_minus)->sort != VertexSort::disk)
            r.fail("root leaf is attached to a sphere vertex");
        else
            root_vertex = rl->v_minus;
    } else if (any_disk) {
        r.fail("graph with disk vertices carries no root leaf");
    }
    for (const auto& e : g.edges) {
        if (!e.is_boundary()) continue;
        if (!is_zero(e.slope)) r.fail("boundary " + eid_str(e.id) + " has nonzero slope");
        const bool plus_disk = e.is_leaf() || g.vertex(e.v_plus)->sort == VertexSort::disk;
        const bool minus_disk = g.vertex(e.v_minus)->sort == VertexSort::disk;
        if (!plus_disk || !minus_disk)
            r.fail("boundary " + eid_str(e.id) + " touches a sphere vertex");
    }
    if (any_disk && root_vertex != -1) {
        std::map<int, int> dparent;
        for (const auto& v : g.vertices) dparent[v.id] = v.id;
        for (const auto& e : g.edges) {
            if (!e.is_node()) continue;
            if (g.vertex(e.v_plus)->sort == VertexSort::disk &&
                g.vertex(e.v_minus)->sort == VertexSort::disk)
                unite(dparent, e.v_plus, e.v_minus);
        }
        const int rc = find_root(dparent, root_vertex);
        for (const auto& v : g.vertices)
            if (v.sort == VertexSort::disk && find_root(dparent, v.id) != rc)
                r.fail("disk vertices do not form a connected subtree with the root");
    }

    for (const auto& e : g.edges) {
        if (e.is_node()) {
            const TropVertex* vp = g.vertex(e.v_plus);
            const TropVertex* vm = g.vertex(e.v_minus);
            if (is_zero(e.slope)) {
                if (vp->polytope != vm->polytope)
                    r.fail("zero-slope " + eid_str(e.id) + " joins different pieces");
                continue;
            }
            Polytope shared = intersect(d.member(vp->polytope), d.member(vm->polytope));
            if (shared.empty) {
                r.fail("pieces of " + eid_str(e.id) + " do not meet");
                continue;
            }
            const int sid = d.find_member(shared);
            if (sid < 0) {
                r.fail("shared face of " + eid_str(e.id) + " is not a member");
                continue;
            }
            for (const auto& dir : d.member(sid).direction_lattice())
                if (dot(e.slope, dir) != 0) {
                    r.fail("slope of " + eid_str(e.id) +
                           " is not in the lattice of the shared face");
                    break;
                }
        } else if (!is_zero(e.slope)) {
            const TropVertex* vm = g.vertex(e.v_minus);
            for (const auto& dir : d.member(vm->polytope).direction_lattice())
                if (dot(e.slope, dir) != 0) {
                    r.fail("slope of leaf " + eid_str(e.id) +
                           " is not in the lattice of its piece");
                    break;
                }
        }
    }
    if (!r.ok) return r;

    if (weight_system(g, d, dc).lifted.empty)
        r.fail("no weight satisfies the slope conditions");
    return r;
}

WeightCone weight_cone(const TropicalGraph& g, const Decomposition& d,
                       const DualComplex& dc)
{
    WeightSystem s = weight_system(g, d, dc);
    return project_to_blocks(s.layout, s.lifted);
}

std::string SymmetryInfo::order_str() const
{
    return dim > 0 ? "infinite" : component_count.str();
}

std::string SymmetryInfo::framed_order_str() const
{
    return framed_dim > 0 ? "infinite" : framed_component_count.str();
}

SymmetryInfo symmetry_group(const TropicalGraph& g, const Decomposition& d)
{
    const int n = d.ambient;
    SymmetryInfo info;

    std::vector<ZMat> basis;
    std::vector<int> offset;
    std::map<int, int> vindex;
    int cols = 0;
    for (const auto& v : g.vertices) {
        vindex[v.id] = int(basis.size());
        basis.push_back(annihilator_basis(d.member(v.polytope)));
        offset.push_back(cols);
        cols += basis.back().rows;
    }
    std::map<int, int> ecol;
    int rows = 0;
    for (const auto& e : g.edges) {
        if (!e.is_node()) continue;
        rows += n;
        if (!is_zero(e.slope)) {
            ecol[e.id] = cols++;
            info.framing_orders[e.id] = primitive_part(e.slope).g;
        }
    }

    ZMat A(rows, cols), F(rows, cols);
    int row = 0;
    for (const auto& e : g.edges) {
        if (!e.is_node()) continue;
        const int ip = vindex.at(e.v_plus);
        const int im = vindex.at(e.v_minus);
        for (int j = 0; j < n; ++j, ++row) {
            for (int i = 0; i < basis[size_t(ip)].rows; ++i) {
                A(row, offset[size_t(ip)] + i) += basis[size_t(ip)](i, j);
                F(row, offset[size_t(ip)] + i) += basis[size_t(ip)](i, j);
            }
            for (int i = 0; i < basis[size_t(im)].rows; ++i) {
                A(row, offset[size_t(im)] + i) -= basis[size_t(im)](i, j);
                F(row, offset[size_t(im)] + i) -= basis[size_t(im)](i, j);
            }
            if (!is_zero(e.slope)) {
                const int c = ecol.at(e.id);
                A(row, c) -= e.slope[size_t(j)];
                F(row, c) -= info.framing_orders.at(e.id) * e.slope[size_t(j)];
            }
        }
    }

    LatticeQuotientGroup unframed = solve_torus_congruence(A, cols);
    LatticeQuotientGroup framed = solve_torus_congruence(F, cols);
    info.dim = unframed.dim;
    info.component_count = unframed.torsion_order;
    info.framed_dim = framed.dim;
    info.framed_component_count = framed.torsion_order;
    return info;
}

bool is_rigid(const TropicalGraph& g, const Decomposition& d)
{
    return symmetry_group(g, d).dim == 0;
}

BalanceReport check_balancing(const TropicalGraph& g, const Decomposition& d,
                              int vertex_id)
{
    const TropVertex* v = g.vertex(vertex_id);
    if (!v) return {false, false, "unknown " + vid_str(vertex_id)};
    const int n = d.ambient;
    ZVec chern(size_t(n), Int(0));
    if (v->chern) chern = *v->chern;
    else if (!v->horizontally_constant)
        return {false, false,
                vid_str(vertex_id) + " carries no chern vector and is not horizontally constant"};

    ZVec sum(size_t(n), Int(0));
    for (const auto& e : g.edges) {
        if (e.is_node() && e.v_plus == vertex_id)
            for (int j = 0; j < n; ++j) sum[size_t(j)] -= e.slope[size_t(j)];
        if (e.v_minus == vertex_id)
            for (int j = 0; j < n; ++j) sum[size_t(j)] += e.slope[size_t(j)];
    }
    const ZVec diff = sum - chern;
    const ZMat ann = annihilator_basis(d.member(v->polytope));
    for (int i = 0; i < ann.rows; ++i)
        if (dot(ann.row(i), diff) != 0) return {true, false, ""};
    return {true, true, ""};
}

CollapseMap identity_collapse(const TropicalGraph& g)
{
    CollapseMap m;
    for (const auto& v : g.vertices) m.vertex_map[v.id] = v.id;
    m.trivial = true;
    return m;
}

CollapseResult collapse_edges(const TropicalGraph& g, const std::vector<int>& edge_ids,
                              const Decomposition& d)
{
    CollapseResult out;
    GraphReport& r = out.report;

    std::set<int> cset;
    for (int id : edge_ids) {
        const TropEdge* e = g.edge(id);
        if (!e) {
            r.fail("unknown " + eid_str(id));
            continue;
        }
        if (!e->is_node()) r.fail("leaf " + eid_str(id) + " cannot be collapsed");
        if (!cset.insert(id).second) r.fail(eid_str(id) + " listed twice");
    }
    if (!r.ok) return out;

    std::map<int, int> parent;
    for (const auto& v : g.vertices) parent[v.id] = v.id;
    bool trivial = true;
    for (int id : cset) {
        const TropEdge* e = g.edge(id);
        unite(parent, e->v_plus, e->v_minus);
        trivial &= is_zero(e->slope);
    }

    std::map<int, int> rep;
    for (const auto& v : g.vertices) {
        const int root = find_root(parent, v.id);
        auto it = rep.find(root);
        if (it == rep.end() || v.id < it->second) rep[root] = v.id;
    }
    for (const auto& v : g.vertices)
        out.map.vertex_map[v.id] = rep.at(find_root(parent, v.id));
    out.map.collapsed.assign(cset.begin(), cset.end());
    out.map.trivial = trivial;

    for (const auto& v : g.vertices) {
        if (out.map.vertex_map.at(v.id) != v.id) continue;
        std::vector<const TropVertex*> cls;
        for (const auto& u : g.vertices)
            if (out.map.vertex_map.at(u.id) == v.id) cls.push_back(&u);
        TropVertex merged = v;
        if (cls.size() > 1) {
            std::vector<int> cand;
            for (int m = 0; m < int(d.members.size()); ++m) {
                bool all = true;
                for (const TropVertex* u : cls)
                    if (!d.member(m).contains_polytope(d.member(u->polytope))) {
                        all = false;
                        break;
                    }
                if (all) cand.push_back(m);
            }
            int best = -1;
            for (int c : cand) {
                bool minimal = true;
                for (int o : cand)
                    if (!d.member(o).contains_polytope(d.member(c))) {
                        minimal = false;
                        break;
                    }
                if (minimal) {
                    best = c;
                    break;
                }
            }
            if (best < 0) {
                r.fail("no member contains all pieces merged into " + vid_str(v.id));
                continue;
            }
            merged.polytope = best;
            merged.sort = VertexSort::sphere;
            bool all_chern = true, all_const = true;
            ZVec csum(size_t(d.ambient), Int(0));
            for (const TropVertex* u : cls) {
                if (u->sort == VertexSort::disk) merged.sort = VertexSort::disk;
                if (u->chern)
                    for (int j = 0; j < d.ambient; ++j) csum[size_t(j)] += (*u->chern)[size_t(j)];
                else
                    all_chern = false;
                all_const &= u->horizontally_constant;
            }
            merged.chern.reset();
            merged.horizontally_constant = false;
            if (all_chern) merged.chern = csum;
            else if (all_const) merged.horizontally_constant = true;
        }
        out.graph.vertices.push_back(std::move(merged));
    }

    for (const auto& e : g.edges) {
        if (cset.count(e.id)) continue;
        TropEdge ne = e;
        if (ne.v_plus != -1) ne.v_plus = out.map.vertex_map.at(ne.v_plus);
        ne.v_minus = out.map.vertex_map.at(ne.v_minus);
        if (ne.is_node() && ne.v_plus == ne.v_minus)
            r.fail("collapse creates a loop at " + eid_str(e.id));
        out.graph.edges.push_back(std::move(ne));
    }
    out.graph.markings = g.markings;
    out.graph.root_leaf = g.root_leaf;
    return out;
}

WeightCone relative_weight_cone(const TropicalGraph& gprime, const TropicalGraph& g,
                                const CollapseMap& kappa, const Decomposition& d,
                                const DualComplex& dc,
                                const std::vector<int>& split_edges)
{
    std::set<int> collapsed(kappa.collapsed.begin(), kappa.collapsed.end());
    std::set<int> split(split_edges.begin(), split_edges.end());

    for (const auto& v : gprime.vertices) {
        auto it = kappa.vertex_map.find(v.id);
        if (it == kappa.vertex_map.end())
            throw std::invalid_argument("collapse map misses " + vid_str(v.id));
        const TropVertex* tv = g.vertex(it->second);
        if (!tv) throw std::invalid_argument("collapse map targets unknown " + vid_str(it->second));
        if (!d.member(tv->polytope).contains_polytope(d.member(v.polytope)))
            throw std::invalid_argument("piece of " + vid_str(v.id) +
                                        " is not contained in its target piece");
    }
    for (int id : collapsed) {
        const TropEdge* e = gprime.edge(id);
        if (!e || !e->is_node())
            throw std::invalid_argument("collapsed " + eid_str(id) + " is not a node edge");
        if (kappa.vertex_map.at(e->v_plus) != kappa.vertex_map.at(e->v_minus))
            throw std::invalid_argument("collapsed " + eid_str(id) +
                                        " joins vertices with distinct targets");
    }
    for (const auto& e : gprime.edges) {
        if (!e.is_node() || collapsed.count(e.id)) continue;
        const TropEdge* te = g.edge(e.id);
        if (!te || te->slope != e.slope ||
            te->v_plus != kappa.vertex_map.at(e.v_plus) ||
            te->v_minus != kappa.vertex_map.at(e.v_minus))
            throw std::invalid_argument("surviving " + eid_str(e.id) +
                                        " does not match the target graph");
    }
    for (int id : split)
        if (!g.edge(id) || collapsed.count(id))
            throw std::invalid_argument("split " + eid_str(id) + " is not a surviving target edge");

    BlockLayout l = layout_of(gprime, d.ambient);
    const size_t nb = l.vertex_ids.size();
    std::vector<std::vector<Halfspace>> hs(nb);
    std::vector<std::vector<AffineEquation>> eqs(nb);
    for (size_t b = 0; b < nb; ++b) {
        const TropVertex* v = gprime.vertex(l.vertex_ids[b]);
        const TropVertex* tv = g.vertex(kappa.vertex_map.at(v->id));
        const Cone cone = cell_of(dc, v->polytope).tangent_cone_at(cell_of(dc, tv->polytope));
        for (const auto& a : cone.ineqs) hs[b].push_back({a, Rational(0)});
        for (const auto& a : cone.eqs) eqs[b].push_back({a, Rational(0)});
    }
    std::vector<EdgeConstraint> cons;
    for (const auto& e : gprime.edges) {
        if (!e.is_node()) continue;
        DiffMode mode = DiffMode::line;
        if (collapsed.count(e.id)) mode = DiffMode::ray;
        else if (split.count(e.id)) mode = DiffMode::none;
        cons.push_back({e.v_plus, e.v_minus, e.slope, mode});
    }
    return project_to_blocks(l, lifted_block_polytope(l, hs, eqs, cons));
}

} // namespace tropikit
