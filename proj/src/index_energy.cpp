#include "tropikit/index_energy.hpp"

#include <algorithm>
#include <stdexcept>

namespace tropikit {

int expected_dimension(const IndexInput& inp)
{
    const TropicalGraph& g = inp.graph;

    int d_white = 0;
    for (const TropEdge& e : g.edges)
        if (e.cls == EdgeClass::boundary_leaf && e.id != g.root_leaf) ++d_white;
    if (int(inp.morse.size()) != d_white + 1)
        throw std::invalid_argument("expected one output index and one per input leaf");

    Int total = inp.morse[0];
    for (size_t i = 1; i < inp.morse.size(); ++i) total -= inp.morse[i];
    total += d_white - 2;

    for (const TropVertex& v : g.vertices) {
        const auto it = inp.maslov.find(v.id);
        if (it == inp.maslov.end())
            throw std::invalid_argument("missing Maslov index for vertex " +
                                        std::to_string(v.id));
        if (v.sort == VertexSort::sphere && it->second % 2 != 0)
            throw std::invalid_argument("sphere vertex " + std::to_string(v.id) +
                                        " has odd Maslov index");
        total += it->second;
    }

    for (const TropEdge& e : g.edges) {
        if (e.cls == EdgeClass::interior_node) {
            if (is_zero(e.slope)) {
                total -= 2;
            } else {
                const auto it = inp.node_multiplicities.find(e.id);
                if (it != inp.node_multiplicities.end())
                    for (const Int& m : it->second) total -= 4 * m;
            }
        } else if (e.cls == EdgeClass::boundary_node) {
            if (!e.length)
                throw std::invalid_argument("boundary node " + std::to_string(e.id) +
                                            " has no length class");
            if (*e.length != LengthClass::finite) total -= 1;
        }
    }

    for (const TropMarking& m : g.markings) total -= 2 * (m.tangency - 1);
    return total.convert_to<int>();
}

SplitIndex split_index(const SplitType& s, const IndexInput& data, int dim)
{
    IndexInput refined = data;
    refined.graph = s.refined;
    SplitIndex out;
    out.quotiented = expected_dimension(refined);
    out.total = out.quotiented + 2 * int(s.split_edges.size()) * (dim - 1);
    return out;
}

Int maslov_toric(const std::vector<Int>& multiplicities)
{
    Int sum = 0;
    for (const Int& m : multiplicities) sum += m;
    return 2 * sum;
}

Int node_multiplicity(const ZVec& slope, const ZVec& facet_normal)
{
    Int g = 0;
    for (const Int& x : facet_normal) g = gcd(g, abs(x));
    if (g != 1) throw std::invalid_argument("facet normal must be primitive");
    const Int pairing = dot(slope, facet_normal);
    if (pairing <= 0)
        throw std::invalid_argument("nonpositive pairing: edge oriented away from the facet");
    return pairing;
}

Int chern_glue(const Int& c_plus, const Int& c_minus,
               const std::vector<Int>& multiplicities)
{
    Int out = c_plus + c_minus;
    for (const Int& m : multiplicities) out -= 2 * m;
    return out;
}

AreaBreakdown fiber_area(const EnergyInput& inp, std::optional<Rational> hofer_c)
{
    AreaBreakdown out;
    out.horizontal = inp.horizontal;
    if (inp.dual_constants.empty())
        throw std::invalid_argument("no facet levels for the fiber polytope");
    Rational max_c = inp.dual_constants[0];
    for (const Rational& c : inp.dual_constants) {
        if (c <= 0) throw std::invalid_argument("facet level must be positive");
        max_c = std::max(max_c, c);
    }
    out.hofer_constant = hofer_c.value_or(max_c);

    Int slope_total = 0;
    for (const auto& row : inp.nodal_multiplicities) {
        if (row.size() != inp.dual_constants.size())
            throw std::invalid_argument("multiplicity row does not match the facet count");
        for (size_t j = 0; j < row.size(); ++j) {
            if (row[j] < 0) throw std::invalid_argument("negative intersection multiplicity");
            out.two_pi_units += inp.dual_constants[j] * Rational(row[j]);
            slope_total += row[j];
        }
    }
    out.hofer_bound = out.horizontal + out.hofer_constant * Rational(slope_total);
    return out;
}

Int divisor_count(const Int& degree_k, const Rational& area)
{
    if (degree_k <= 0) throw std::invalid_argument("divisor degree must be positive");
    const Rational product = Rational(degree_k) * area;
    if (rat_den(product) != 1)
        throw std::invalid_argument("degree times area is not an integer");
    if (product < 0) throw std::invalid_argument("negative intersection count");
    return rat_num(product);
}

} // namespace tropikit
