#include "tropikit/split.hpp"

#include "tropikit/snf.hpp"
#include "tropikit/subspace.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

namespace tropikit {

namespace {

std::string eid(int id)
{
    return "edge " + std::to_string(id);
}

// Orthogonal projection off the line spanned by the slope.
QMat pi_perp(const ZVec& slope)
{
    const int n = int(slope.size());
    Int nn = 0;
    for (const Int& x : slope) nn += x * x;
    if (nn == 0) throw std::invalid_argument("projection off a zero slope");
    QMat p = QMat::identity(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            p(i, j) -= Rational(slope[size_t(i)] * slope[size_t(j)], nn);
    return p;
}

QVec mat_apply(const QMat& m, const QVec& x)
{
    QVec y(size_t(m.rows), Rational(0));
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) y[size_t(i)] += m(i, j) * x[size_t(j)];
    return y;
}

// Unknowns of the unsigned weight system: vertex coordinates in the
// direction basis of each vertex's piece, plus one length per non-split node
// edge with nonzero slope.  Rows force the difference across each non-split
// node edge onto the line of its slope.
struct UnsignedSystem {
    int n = 0;
    std::vector<int> vertex_ids;
    std::map<int, int> vindex;
    std::vector<ZMat> bases;
    std::vector<int> offset;
    int cols = 0;
    std::vector<const TropEdge*> conditions;
};

UnsignedSystem build_unsigned_system(const TropicalGraph& g, const std::vector<int>& split,
                                     const Decomposition& d)
{
    UnsignedSystem s;
    s.n = d.ambient;
    const std::set<int> split_set(split.begin(), split.end());
    for (const TropVertex& v : g.vertices) {
        s.vindex[v.id] = int(s.vertex_ids.size());
        s.vertex_ids.push_back(v.id);
        s.bases.push_back(annihilator_basis(d.member(v.polytope)));
        s.offset.push_back(s.cols);
        s.cols += s.bases.back().rows;
    }
    for (const TropEdge& e : g.edges) {
        if (!e.is_node() || split_set.count(e.id)) continue;
        s.conditions.push_back(&e);
        if (!is_zero(e.slope)) ++s.cols; // length column, appended per edge below
    }
    return s;
}

// Rows of the homogeneous system; length columns come after all vertex
// coordinates, in condition order.
QMat unsigned_matrix(const UnsignedSystem& s)
{
    int vcols = 0;
    for (const ZMat& b : s.bases) vcols += b.rows;
    std::vector<std::vector<Rational>> rows;
    int ell = vcols;
    for (const TropEdge* e : s.conditions) {
        const int ip = s.vindex.at(e->v_plus);
        const int im = s.vindex.at(e->v_minus);
        const bool slack = !is_zero(e->slope);
        for (int j = 0; j < s.n; ++j) {
            std::vector<Rational> row(size_t(s.cols), Rational(0));
            for (int r = 0; r < s.bases[size_t(ip)].rows; ++r)
                row[size_t(s.offset[size_t(ip)] + r)] += s.bases[size_t(ip)](r, j);
            for (int r = 0; r < s.bases[size_t(im)].rows; ++r)
                row[size_t(s.offset[size_t(im)] + r)] -= s.bases[size_t(im)](r, j);
            if (slack) row[size_t(ell)] -= e->slope[size_t(j)];
            rows.push_back(std::move(row));
        }
        if (slack) ++ell;
    }
    if (rows.empty()) return QMat(0, s.cols);
    return QMat::from_rows(rows);
}

QVec blocks_from_unknowns(const UnsignedSystem& s, const QVec& u)
{
    QVec x(size_t(s.n) * s.vertex_ids.size(), Rational(0));
    for (size_t vi = 0; vi < s.vertex_ids.size(); ++vi) {
        const ZMat& b = s.bases[vi];
        for (int r = 0; r < b.rows; ++r)
            for (int j = 0; j < s.n; ++j)
                x[vi * size_t(s.n) + size_t(j)] += u[size_t(s.offset[vi] + r)] * b(r, j);
    }
    return x;
}

QVec edge_difference(const UnsignedSystem& s, const QVec& blocks, const TropEdge& e)
{
    const size_t ip = size_t(s.vindex.at(e.v_plus));
    const size_t im = size_t(s.vindex.at(e.v_minus));
    QVec diff(size_t(s.n), Rational(0));
    for (int j = 0; j < s.n; ++j)
        diff[size_t(j)] = blocks[ip * size_t(s.n) + size_t(j)] - blocks[im * size_t(s.n) + size_t(j)];
    return diff;
}

std::vector<int> sorted_ids(const std::vector<int>& ids)
{
    std::vector<int> out = ids;
    std::sort(out.begin(), out.end());
    return out;
}

const TropEdge& split_edge(const TropicalGraph& g, int id)
{
    const TropEdge* e = g.edge(id);
    if (!e || !e->is_node()) throw std::invalid_argument(eid(id) + " is not a node edge");
    if (is_zero(e->slope)) throw std::invalid_argument(eid(id) + " has zero slope");
    return *e;
}

// Subspaces of each split edge's transverse hyperplane swept out by weight
// families that move that edge alone.
std::vector<RationalSubspace> instance_subspaces(const TropicalGraph& g,
                                                 const std::vector<int>& split,
                                                 const Decomposition& d)
{
    const UnsignedSystem sys = build_unsigned_system(g, split, d);
    const QMat base_rows = unsigned_matrix(sys);
    std::vector<RationalSubspace> out;
    for (int e_id : split) {
        std::vector<std::vector<Rational>> rows;
        for (int i = 0; i < base_rows.rows; ++i) rows.push_back(base_rows.row(i));
        for (int other : split) {
            if (other == e_id) continue;
            const TropEdge& o = split_edge(g, other);
            const QMat p = pi_perp(o.slope);
            const int ip = sys.vindex.at(o.v_plus);
            const int im = sys.vindex.at(o.v_minus);
            // rows of p * (B_+^T a_+ - B_-^T a_-)
            for (int j = 0; j < sys.n; ++j) {
                std::vector<Rational> row(size_t(sys.cols), Rational(0));
                for (int c = 0; c < sys.n; ++c) {
                    for (int r = 0; r < sys.bases[size_t(ip)].rows; ++r)
                        row[size_t(sys.offset[size_t(ip)] + r)] += p(j, c) * sys.bases[size_t(ip)](r, c);
                    for (int r = 0; r < sys.bases[size_t(im)].rows; ++r)
                        row[size_t(sys.offset[size_t(im)] + r)] -= p(j, c) * sys.bases[size_t(im)](r, c);
                }
                rows.push_back(std::move(row));
            }
        }
        QMat m = rows.empty() ? QMat(0, sys.cols) : QMat::from_rows(rows);
        const QMat kernel = kernel_basis(m);
        const TropEdge& e = split_edge(g, e_id);
        const QMat p = pi_perp(e.slope);
        std::vector<QVec> image;
        for (int i = 0; i < kernel.rows; ++i) {
            const QVec blocks = blocks_from_unknowns(sys, kernel.row(i));
            image.push_back(mat_apply(p, edge_difference(sys, blocks, e)));
        }
        out.emplace_back(sys.n, image);
    }
    return out;
}

TropicalGraph without_split_edges(const TropicalGraph& g, const std::vector<int>& split)
{
    const std::set<int> split_set(split.begin(), split.end());
    TropicalGraph out;
    out.vertices = g.vertices;
    for (const TropEdge& e : g.edges)
        if (!split_set.count(e.id)) out.edges.push_back(e);
    for (const TropMarking& m : g.markings)
        if (!split_set.count(m.edge)) out.markings.push_back(m);
    out.root_leaf = g.root_leaf;
    return out;
}

} // namespace

QVec RelativeWeightSpace::vertex_part(const QVec& x, int vertex_id) const
{
    const auto it = std::find(vertex_ids.begin(), vertex_ids.end(), vertex_id);
    if (it == vertex_ids.end()) throw std::invalid_argument("unknown vertex in weight space");
    const int n = ambient / int(vertex_ids.size());
    const size_t at = size_t(it - vertex_ids.begin()) * size_t(n);
    return QVec(x.begin() + long(at), x.begin() + long(at) + n);
}

GraphReport validate_split(const SplitType& s, const Decomposition& d, const DualComplex& dc)
{
    GraphReport report;
    GraphReport base = validate_tropical(s.base, d, dc);
    for (const std::string& v : base.violations) report.fail("base: " + v);

    for (const TropEdge& e : s.base.edges)
        if (e.is_node() && is_zero(e.slope))
            report.fail("base: " + eid(e.id) + " has zero slope");

    std::set<int> seen;
    for (int id : s.split_edges) {
        if (!seen.insert(id).second) report.fail(eid(id) + " listed twice as a split edge");
        const TropEdge* be = s.base.edge(id);
        if (!be || !be->is_node()) report.fail(eid(id) + " is not a node edge of the base");
    }

    if (int(s.cone_direction.size()) != d.ambient)
        report.fail("cone direction has wrong dimension");
    else if (is_zero(s.cone_direction))
        report.fail("cone direction is zero");

    // tree shape of the refined graph
    std::set<int> vids;
    for (const TropVertex& v : s.refined.vertices)
        if (!vids.insert(v.id).second) report.fail("refined: duplicate vertex id");
    std::map<int, int> parent;
    for (int v : vids) parent[v] = v;
    int node_edges = 0;
    for (const TropEdge& e : s.refined.edges) {
        if (!e.is_node()) continue;
        ++node_edges;
        if (!vids.count(e.v_plus) || !vids.count(e.v_minus)) {
            report.fail("refined: " + eid(e.id) + " has an unresolved endpoint");
            continue;
        }
        int a = e.v_plus, b = e.v_minus;
        while (parent[a] != a) a = parent[a];
        while (parent[b] != b) b = parent[b];
        if (a == b) report.fail("refined: " + eid(e.id) + " closes a cycle");
        else parent[a] = b;
    }
    if (report.ok && node_edges != int(vids.size()) - 1)
        report.fail("refined: graph is not a tree");

    if (!report.ok) return report;

    try {
        relative_weight_cone(s.refined, s.base, s.kappa, d, dc, s.split_edges);
    } catch (const std::invalid_argument& err) {
        report.fail(err.what());
    }
    return report;
}

bool split_eligible(int member_id, const Decomposition& d)
{
    const Polytope& p = d.member(member_id);
    const int fdim = p.dim() - 1;
    if (fdim < 0) return true;
    for (const Polytope& f : p.all_faces()) {
        if (f.dim() != fdim) continue;
        if (d.find_member(f) < 0) return false;
    }
    return true;
}

SplitOrder order_split_edges(const TropicalGraph& refined, const std::vector<int>& split_edges)
{
    SplitOrder out;
    if (split_edges.empty()) return out;
    for (int id : split_edges) split_edge(refined, id);

    // adjacency over node edges
    std::map<int, std::vector<const TropEdge*>> adj;
    for (const TropEdge& e : refined.edges) {
        if (!e.is_node()) continue;
        adj[e.v_plus].push_back(&e);
        adj[e.v_minus].push_back(&e);
    }
    int root = -1;
    if (refined.root_leaf >= 0) {
        const TropEdge* r = refined.edge(refined.root_leaf);
        if (!r) throw std::invalid_argument("root leaf does not resolve");
        root = r->v_minus;
    } else {
        for (const TropVertex& v : refined.vertices) root = root < 0 ? v.id : std::min(root, v.id);
    }

    std::map<int, int> parent_edge, depth;
    std::deque<int> queue{root};
    parent_edge[root] = -1;
    depth[root] = 0;
    while (!queue.empty()) {
        const int v = queue.front();
        queue.pop_front();
        for (const TropEdge* e : adj[v]) {
            const int w = e->v_plus == v ? e->v_minus : e->v_plus;
            if (parent_edge.count(w)) continue;
            parent_edge[w] = e->id;
            depth[w] = depth[v] + 1;
            queue.push_back(w);
        }
    }

    // marking numbers attach at the vertex of the marked leaf
    std::map<int, std::vector<int>> marks_at; // vertex -> marking numbers
    std::map<int, int> mark_vertex;           // number -> vertex
    for (size_t i = 0; i < refined.markings.size(); ++i) {
        const TropEdge* le = refined.edge(refined.markings[i].edge);
        if (!le) throw std::invalid_argument("marking on an unknown edge");
        marks_at[le->v_minus].push_back(int(i) + 1);
        mark_vertex[int(i) + 1] = le->v_minus;
    }

    auto subtree_of = [&](int far) {
        std::set<int> seen{far};
        std::deque<int> q{far};
        while (!q.empty()) {
            const int v = q.front();
            q.pop_front();
            for (const TropEdge* e : adj[v]) {
                const int w = e->v_plus == v ? e->v_minus : e->v_plus;
                if (parent_edge.count(w) && parent_edge[w] == e->id && !seen.count(w)) {
                    seen.insert(w);
                    q.push_back(w);
                }
            }
        }
        return seen;
    };
    auto distance = [&](int a, int b) {
        std::map<int, int> dist{{a, 0}};
        std::deque<int> q{a};
        while (!q.empty()) {
            const int v = q.front();
            q.pop_front();
            if (v == b) return dist[v];
            for (const TropEdge* e : adj[v]) {
                const int w = e->v_plus == v ? e->v_minus : e->v_plus;
                if (!dist.count(w)) {
                    dist[w] = dist[v] + 1;
                    q.push_back(w);
                }
            }
        }
        return std::numeric_limits<int>::max();
    };

    struct Key {
        int least;
        int dist;
        int id;
    };
    std::vector<Key> keys;
    for (int id : split_edges) {
        const TropEdge& e = *refined.edge(id);
        const int far = (parent_edge.count(e.v_plus) && parent_edge[e.v_plus] == id) ? e.v_plus
                                                                                     : e.v_minus;
        int least = std::numeric_limits<int>::max();
        for (int v : subtree_of(far))
            for (int m : marks_at.count(v) ? marks_at[v] : std::vector<int>{})
                least = std::min(least, m);
        const int dist = least == std::numeric_limits<int>::max()
                             ? 0
                             : distance(mark_vertex[least], far);
        keys.push_back({least, dist, id});
    }
    std::sort(keys.begin(), keys.end(), [](const Key& a, const Key& b) {
        return std::tie(a.least, a.dist, a.id) < std::tie(b.least, b.dist, b.id);
    });
    for (size_t i = 0; i + 1 < keys.size(); ++i) {
        if (keys[i].least == keys[i + 1].least && keys[i].dist == keys[i + 1].dist) {
            out.tie_broken_by_id = true;
            out.note = "edges " + std::to_string(keys[i].id) + " and " +
                       std::to_string(keys[i + 1].id) +
                       " are not separated by markings; ordered by id";
        }
    }
    for (const Key& k : keys) out.edges.push_back(k.id);
    return out;
}

RelativeWeightSpace unsigned_relative_weights(const SplitType& s, const Decomposition& d,
                                              const DualComplex& dc)
{
    (void)dc;
    const UnsignedSystem sys = build_unsigned_system(s.refined, s.split_edges, d);
    const QMat kernel = kernel_basis(unsigned_matrix(sys));
    RelativeWeightSpace out;
    out.ambient = sys.n * int(sys.vertex_ids.size());
    out.vertex_ids = sys.vertex_ids;
    for (int i = 0; i < kernel.rows; ++i)
        out.basis.push_back(blocks_from_unknowns(sys, kernel.row(i)));
    out.rational = true;
    return out;
}

DiscrepancyCone discrepancy_cone(const SplitType& s, const Decomposition& d,
                                 const DualComplex& dc)
{
    DiscrepancyCone out;
    out.edges = sorted_ids(s.split_edges);
    const int n = d.ambient;
    const int k = int(out.edges.size());
    out.ambient = n * k;
    if (k == 0) {
        out.cone.ambient = 0;
        return out;
    }

    const WeightCone w = relative_weight_cone(s.refined, s.base, s.kappa, d, dc, s.split_edges);
    std::map<int, int> vindex;
    for (size_t i = 0; i < w.vertex_ids.size(); ++i) vindex[w.vertex_ids[i]] = int(i);

    const int total = w.ambient * int(w.vertex_ids.size());
    QMat diff(out.ambient, total);
    for (int b = 0; b < k; ++b) {
        const TropEdge& e = split_edge(s.refined, out.edges[size_t(b)]);
        const QMat p = pi_perp(e.slope);
        const int ip = vindex.at(e.v_plus) * n;
        const int im = vindex.at(e.v_minus) * n;
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) {
                diff(b * n + r, ip + c) += p(r, c);
                diff(b * n + r, im + c) -= p(r, c);
            }
    }

    const Cone moves = Cone::from_v(total, w.set.rec_rays, w.set.rec_lineality);
    out.cone = map_cone(moves, diff);
    return out;
}

ConeDecision cone_condition(const SplitType& s, const Decomposition& d, const DualComplex& dc)
{
    ConeDecision out;
    const int n = d.ambient;
    const int k = int(s.split_edges.size());
    if (int(s.cone_direction.size()) != n)
        throw std::invalid_argument("cone direction has wrong dimension");
    if (k == 0) {
        out.generic = true;
        out.satisfied = true;
        return out;
    }

    std::map<int, QVec> projected; // edge id -> projection of the direction
    for (int id : s.split_edges) {
        const TropEdge& e = split_edge(s.refined, id);
        projected[id] = mat_apply(pi_perp(e.slope), s.cone_direction);
        if (is_zero(projected[id])) {
            out.violated_subspace = "slope line of " + eid(id);
            return out;
        }
    }
    const std::vector<RationalSubspace> single = instance_subspaces(s.refined, s.split_edges, d);
    for (size_t i = 0; i < s.split_edges.size(); ++i) {
        if (single[i].dim() < n - 1 && single[i].contains(projected[s.split_edges[i]])) {
            out.violated_subspace =
                "single-edge weight subspace of " + eid(s.split_edges[i]);
            return out;
        }
    }
    out.generic = true;

    const DiscrepancyCone dis = discrepancy_cone(s, d, dc);
    std::map<int, int> block;
    for (size_t i = 0; i < dis.edges.size(); ++i) block[dis.edges[i]] = int(i);
    const SplitOrder order = order_split_edges(s.refined, s.split_edges);

    // coefficient of c_e in <row, point(c)>, scanned along the order
    auto coefficients = [&](const ZVec& row) {
        std::vector<Rational> beta;
        for (int id : order.edges) {
            Rational b = 0;
            const int off = block.at(id) * n;
            for (int j = 0; j < n; ++j) b += Rational(row[size_t(off + j)]) * projected[id][size_t(j)];
            beta.push_back(b);
        }
        return beta;
    };
    auto describe = [&](const ZVec& row) {
        std::ostringstream os;
        os << "(";
        for (size_t j = 0; j < row.size(); ++j) os << (j ? "," : "") << row[j];
        os << ")";
        return os.str();
    };

    for (const ZVec& row : dis.cone.eqs) {
        for (const Rational& b : coefficients(row))
            if (b != 0) {
                out.obstruction = "equality " + describe(row) + " is not preserved";
                return out;
            }
    }
    for (const ZVec& row : dis.cone.ineqs) {
        const std::vector<Rational> beta = coefficients(row);
        Rational lead = 0;
        for (const Rational& b : beta)
            if (b != 0) {
                lead = b;
                break;
            }
        if (lead <= 0) {
            out.obstruction = "inequality " + describe(row) +
                              (lead == 0 ? " holds only on the boundary" : " fails for large ratios");
            return out;
        }
    }

    // explicit increasing tuple: powers of a common base, doubled until every
    // facet functional is strictly positive
    Rational base = 2;
    for (int rounds = 0; rounds < 512; ++rounds) {
        std::map<int, Rational> c;
        Rational power = 1;
        for (auto it = order.edges.rbegin(); it != order.edges.rend(); ++it) {
            power *= base;
            c[*it] = power;
        }
        QVec point(size_t(dis.ambient), Rational(0));
        for (int id : order.edges) {
            const int off = block.at(id) * n;
            for (int j = 0; j < n; ++j) point[size_t(off + j)] += c[id] * projected[id][size_t(j)];
        }
        bool strict = true;
        for (const ZVec& row : dis.cone.ineqs) {
            Rational v = 0;
            for (size_t j = 0; j < row.size(); ++j) v += Rational(row[j]) * point[j];
            if (v <= 0) {
                strict = false;
                break;
            }
        }
        if (strict && dis.cone.contains(point)) {
            out.satisfied = true;
            for (int id : order.edges) out.witness.emplace_back(id, c[id]);
            return out;
        }
        base *= 2;
    }
    out.obstruction = "no strictly interior tuple found";
    return out;
}

bool split_rigid(const SplitType& s, const Decomposition& d, const DualComplex& dc)
{
    if (!is_rigid(s.base, d)) return false;
    for (const TropEdge& e : s.refined.edges) {
        if (!e.is_node()) continue;
        if (e.cls == EdgeClass::boundary_node) {
            if (!e.length || *e.length != LengthClass::finite) return false;
        } else if (is_zero(e.slope)) {
            return false;
        }
    }
    for (const TropMarking& m : s.refined.markings)
        if (m.tangency != 1) return false;
    const WeightCone w = relative_weight_cone(s.refined, s.base, s.kappa, d, dc, s.split_edges);
    return w.dim == int(s.split_edges.size()) * (d.ambient - 1);
}

Int framed_multiplicity(const SplitType& s, const Decomposition& d)
{
    const SymmetryInfo si = symmetry_group(s.refined, d);
    if (si.framed_dim > 0)
        throw std::invalid_argument("framed symmetry group is infinite; multiplicity undefined");
    return si.framed_component_count;
}

std::vector<SymmetryInfo> symmetry_splitting(const SplitType& s, const Decomposition& d)
{
    const std::set<int> split_set(s.split_edges.begin(), s.split_edges.end());
    std::map<int, int> parent;
    for (const TropVertex& v : s.refined.vertices) parent[v.id] = v.id;
    std::function<int(int)> find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    for (const TropEdge& e : s.refined.edges)
        if (e.is_node() && !split_set.count(e.id)) parent[find(e.v_plus)] = find(e.v_minus);

    std::map<int, std::set<int>> comps; // least vertex per root chosen below
    for (const TropVertex& v : s.refined.vertices) comps[find(v.id)].insert(v.id);

    std::vector<std::pair<int, std::set<int>>> ordered;
    for (auto& [root, members] : comps) ordered.emplace_back(*members.begin(), members);
    std::sort(ordered.begin(), ordered.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    std::vector<SymmetryInfo> out;
    for (const auto& [least, members] : ordered) {
        TropicalGraph sub;
        for (const TropVertex& v : s.refined.vertices)
            if (members.count(v.id)) sub.vertices.push_back(v);
        std::set<int> kept;
        for (const TropEdge& e : s.refined.edges) {
            if (split_set.count(e.id)) continue;
            if (e.is_node() && members.count(e.v_plus) && members.count(e.v_minus)) {
                sub.edges.push_back(e);
                kept.insert(e.id);
            } else if (e.is_leaf() && members.count(e.v_minus)) {
                sub.edges.push_back(e);
                kept.insert(e.id);
            }
        }
        for (const TropMarking& m : s.refined.markings)
            if (kept.count(m.edge)) sub.markings.push_back(m);
        if (s.refined.root_leaf >= 0 && kept.count(s.refined.root_leaf))
            sub.root_leaf = s.refined.root_leaf;
        out.push_back(symmetry_group(sub, d));
    }
    return out;
}

ExactSequenceReport exact_sequence_check(const SplitType& s, const Decomposition& d,
                                         const DualComplex& dc)
{
    ExactSequenceReport out;
    const int n = d.ambient;
    const std::vector<int> split = sorted_ids(s.split_edges);
    const int k = int(split.size());
    out.expected_dim = k * (n - 1);

    for (int id : split) out.z_order *= primitive_part(split_edge(s.refined, id).slope).g;

    ZMat sub(n * k, k);
    for (int i = 0; i < k; ++i) {
        const TropEdge& e = split_edge(s.refined, split[size_t(i)]);
        for (int j = 0; j < n; ++j) sub(i * n + j, i) = -e.slope[size_t(j)];
    }
    const LatticeQuotientGroup zq = solve_torus_congruence(sub, k);
    out.z_torsion = zq.torsion_order;
    if (zq.dim != 0) out.violations.push_back("split-edge subsystem is not finite");
    if (out.z_torsion != out.z_order)
        out.violations.push_back("central factor order disagrees between gcds and torsion");

    const SymmetryInfo full = symmetry_group(s.refined, d);
    out.framed_order = full.framed_dim == 0 ? full.framed_component_count : 0;

    const TropicalGraph relaxed = without_split_edges(s.refined, split);
    out.unframed_dim = symmetry_group(relaxed, d).dim;

    if (split_rigid(s, d, dc)) {
        if (full.framed_dim != 0)
            out.violations.push_back("framed group of a rigid type is infinite");
        else if (out.z_order != 0 && out.framed_order % out.z_order != 0)
            out.violations.push_back("framed order is not divisible by the central order");
        if (out.unframed_dim != out.expected_dim)
            out.violations.push_back("relaxed symmetry dimension misses the expected value");
    }
    out.ok = out.violations.empty();
    return out;
}

} // namespace tropikit
