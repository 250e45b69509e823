#include "tropikit/ainfty.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace tropikit {

namespace {

int norm_deg(const AInftyData& a, const std::string& name)
{
    const auto it = a.degree.find(name);
    if (it == a.degree.end())
        throw std::invalid_argument("unknown generator: " + name);
    return ((it->second % a.g) + a.g) % a.g;
}

int parity(const AInftyData& a, const std::string& name)
{
    return norm_deg(a, name) % 2;
}

void require_grading(const AInftyData& a)
{
    if (a.g <= 0 || a.g % 2 != 0)
        throw std::invalid_argument("grading modulus must be positive and even");
    for (const std::string& name : a.generators)
        if (!a.degree.count(name))
            throw std::invalid_argument("generator without degree: " + name);
}

void accumulate(Combination& out, const std::string& name, const NovikovElement& add)
{
    const auto it = out.find(name);
    if (it == out.end()) {
        if (!add.is_zero()) out.emplace(name, add);
        return;
    }
    it->second = it->second + add;
    if (it->second.is_zero()) out.erase(it);
}

Combination table_apply(
    const std::map<int, std::map<std::vector<std::string>, Combination>>& maps,
    int d, const std::vector<Combination>& args, const Rational& cutoff)
{
    Combination out;
    const auto table_it = maps.find(d);
    if (table_it == maps.end()) return out;
    const auto& table = table_it->second;

    const size_t slots = size_t(d);
    std::vector<std::string> tuple(slots);
    std::function<void(size_t, const NovikovElement&)> rec =
        [&](size_t i, const NovikovElement& w) {
            if (w.is_zero()) return;
            if (i == args.size()) {
                const auto hit = table.find(tuple);
                if (hit == table.end()) return;
                for (const auto& [name, value] : hit->second)
                    accumulate(out, name, w * value);
                return;
            }
            for (const auto& [name, coeff] : args[i]) {
                tuple[i] = name;
                rec(i + 1, w * coeff);
            }
        };
    rec(0, NovikovElement::one(cutoff));
    return out;
}

std::vector<Combination> basis_slice(const AInftyData& a,
                                     const std::vector<std::string>& tuple,
                                     size_t from, size_t to)
{
    std::vector<Combination> out;
    for (size_t i = from; i < to; ++i) out.push_back(basis(a, tuple[i]));
    return out;
}

// Odometer over all generator tuples of the given length.
bool next_tuple(const std::vector<std::string>& gens, std::vector<size_t>& idx)
{
    for (size_t i = idx.size(); i-- > 0;) {
        if (++idx[i] < gens.size()) return true;
        idx[i] = 0;
    }
    return false;
}

std::vector<std::string> tuple_names(const std::vector<std::string>& gens,
                                     const std::vector<size_t>& idx)
{
    std::vector<std::string> out;
    for (size_t i : idx) out.push_back(gens[i]);
    return out;
}

bool tuple_contains(const std::vector<std::string>& tuple, const std::string& name)
{
    return std::find(tuple.begin(), tuple.end(), name) != tuple.end();
}

void check_homogeneity(const AInftyData& a, int shift_base,
                       const std::map<int, std::map<std::vector<std::string>, Combination>>& maps,
                       const AInftyData& out_side, std::vector<RelationIssue>& failures)
{
    for (const auto& [d, table] : maps) {
        for (const auto& [tuple, out] : table) {
            if (int(tuple.size()) != d) {
                failures.push_back({d, tuple, "tuple length does not match the arity"});
                continue;
            }
            int want = shift_base - d;
            for (const std::string& name : tuple) want += norm_deg(a, name);
            want = ((want % a.g) + a.g) % a.g;
            for (const auto& [name, value] : out)
                if (!value.is_zero() && norm_deg(out_side, name) != want)
                    failures.push_back({d, tuple,
                                        "output " + name + " breaks degree homogeneity"});
        }
    }
}

} // namespace

Combination basis(const AInftyData& a, const std::string& name)
{
    if (!a.degree.count(name)) throw std::invalid_argument("unknown generator: " + name);
    Combination out;
    out[name] = NovikovElement::one(a.cutoff);
    return out;
}

bool combination_is_zero(const Combination& c)
{
    for (const auto& [name, value] : c)
        if (!value.is_zero()) return false;
    return true;
}

Combination combination_add(const Combination& x, const Combination& y)
{
    Combination out = x;
    for (const auto& [name, value] : y) accumulate(out, name, value);
    return out;
}

Combination combination_scale(const QComplex& c, const Combination& x)
{
    Combination out;
    for (const auto& [name, value] : x) {
        NovikovElement s = scale(c, value);
        if (!s.is_zero()) out.emplace(name, std::move(s));
    }
    return out;
}

std::string combination_str(const Combination& c)
{
    if (combination_is_zero(c)) return "0";
    std::string s;
    for (const auto& [name, value] : c) {
        if (value.is_zero()) continue;
        if (!s.empty()) s += " + ";
        s += "(" + value.str() + ") " + name;
    }
    return s;
}

Combination m_apply(const AInftyData& a, int d, const std::vector<Combination>& args)
{
    if (!a.declared(d))
        throw std::invalid_argument("arity " + std::to_string(d) + " not declared");
    if (int(args.size()) != d)
        throw std::invalid_argument("argument count does not match the arity");
    return table_apply(a.maps, d, args, a.cutoff);
}

AlgebraReport check_associativity(const AInftyData& a, int up_to_d)
{
    require_grading(a);
    AlgebraReport rep;
    check_homogeneity(a, 2, a.maps, a, rep.failures);

    for (int d = 0; d <= up_to_d; ++d) {
        bool have = true;
        std::set<int> need;
        for (int k = 0; k <= d; ++k) {
            need.insert(k);
            need.insert(d - k + 1);
        }
        for (int k : need)
            if (!a.declared(k)) {
                rep.missing.push_back("m_" + std::to_string(k) + " needed at d=" +
                                      std::to_string(d));
                have = false;
            }
        if (!have || a.generators.empty()) continue;

        std::vector<size_t> idx(size_t(d), 0);
        do {
            const std::vector<std::string> tuple = tuple_names(a.generators, idx);
            Combination residual;
            for (int j = 0; j <= d; ++j) {
                for (int k = 0; j + k <= d; ++k) {
                    const Combination inner =
                        m_apply(a, k, basis_slice(a, tuple, size_t(j), size_t(j + k)));
                    if (combination_is_zero(inner)) continue;
                    std::vector<Combination> outer =
                        basis_slice(a, tuple, 0, size_t(j));
                    outer.push_back(inner);
                    for (size_t i = size_t(j + k); i < tuple.size(); ++i)
                        outer.push_back(basis(a, tuple[i]));
                    int sign = j;
                    for (int i = 0; i < j; ++i) sign += parity(a, tuple[size_t(i)]);
                    const Combination term = m_apply(a, d - k + 1, outer);
                    residual = combination_add(
                        residual, sign % 2 ? combination_scale(QComplex(-1), term) : term);
                }
            }
            if (!combination_is_zero(residual))
                rep.failures.push_back({d, tuple, combination_str(residual)});
        } while (next_tuple(a.generators, idx));
    }

    rep.ok = rep.missing.empty() && rep.failures.empty();
    return rep;
}

AlgebraReport check_strict_unit(const AInftyData& a, const std::string& e)
{
    require_grading(a);
    if (!a.degree.count(e)) throw std::invalid_argument("unknown generator: " + e);
    AlgebraReport rep;

    if (!a.declared(2)) {
        rep.missing.push_back("m_2");
    } else {
        for (const std::string& x : a.generators) {
            const Combination want = basis(a, x);
            const Combination left = m_apply(a, 2, {basis(a, e), basis(a, x)});
            if (!combination_is_zero(
                    combination_add(left, combination_scale(QComplex(-1), want))))
                rep.failures.push_back({2, {e, x}, "left insertion is not the identity"});
            Combination right = m_apply(a, 2, {basis(a, x), basis(a, e)});
            if (parity(a, x)) right = combination_scale(QComplex(-1), right);
            if (!combination_is_zero(
                    combination_add(right, combination_scale(QComplex(-1), want))))
                rep.failures.push_back({2, {x, e}, "right insertion is not the identity"});
        }
    }

    for (const auto& [d, table] : a.maps) {
        if (d == 2) continue;
        for (const auto& [tuple, out] : table)
            if (tuple_contains(tuple, e) && !combination_is_zero(out))
                rep.failures.push_back({d, tuple, "nonzero value on a unit insertion"});
    }

    rep.ok = rep.missing.empty() && rep.failures.empty();
    return rep;
}

LeadingUnitReport check_homotopy_unit_leading(const AInftyData& a)
{
    require_grading(a);
    LeadingUnitReport rep;
    if (a.unit.empty() || a.weighted.empty() || a.maximum.empty()) {
        rep.detail = "unit, weighted, and maximum generators must be designated";
        return rep;
    }
    if (!a.declared(1)) {
        rep.detail = "m_1 not declared";
        return rep;
    }
    const Combination c = m_apply(a, 1, {basis(a, a.weighted)});
    rep.ok = true;
    for (const std::string& name : a.generators) {
        QComplex zero_order;
        const auto it = c.find(name);
        if (it != c.end()) zero_order = it->second.coefficient_at(0);
        QComplex want;
        if (name == a.unit) want = QComplex(1);
        if (name == a.maximum) want = QComplex(-1);
        if (!(zero_order == want)) {
            rep.ok = false;
            rep.detail = "zero-order coefficient of " + name + " is " +
                         format_qcomplex(zero_order) + ", expected " +
                         format_qcomplex(want);
            return rep;
        }
    }
    const Combination exact = combination_add(
        basis(a, a.unit), combination_scale(QComplex(-1), basis(a, a.maximum)));
    rep.exact = combination_is_zero(
        combination_add(c, combination_scale(QComplex(-1), exact)));
    return rep;
}

MCResult mc_residual(const AInftyData& a, const Combination& b)
{
    require_grading(a);
    if (a.unit.empty()) throw std::invalid_argument("no unit designated");
    if (a.d_max < 0) throw std::invalid_argument("no arities declared");

    std::optional<Rational> least;
    for (const auto& [name, coeff] : b) {
        if (coeff.is_zero()) continue;
        if (parity(a, name) == 0)
            throw std::invalid_argument("even-degree entry in the candidate: " + name);
        const Rational v = *coeff.valuation();
        if (v <= 0)
            throw std::invalid_argument("candidate entry " + name +
                                        " lacks positive valuation");
        if (!least || v < *least) least = v;
    }

    int top = 0;
    if (least) {
        const Rational ratio = a.cutoff / *least;
        const Int d_stop = (rat_num(ratio) + rat_den(ratio) - 1) / rat_den(ratio);
        top = d_stop.convert_to<int>() - 1;
        if (a.d_max < top)
            throw std::invalid_argument("declared arities cannot exhaust the sum "
                                        "below the cutoff");
    }

    Combination sum;
    for (int d = 0; d <= top; ++d) {
        const std::vector<Combination> args(size_t(d), b);
        sum = combination_add(sum, m_apply(a, d, args));
    }

    MCResult out;
    out.potential = NovikovElement::zero(a.cutoff);
    const auto it = sum.find(a.unit);
    if (it != sum.end()) {
        out.potential = it->second;
        sum.erase(it);
    }
    out.residual = sum;
    out.solved = combination_is_zero(out.residual);
    return out;
}

AInftyData truncated(const AInftyData& a, const Rational& cutoff)
{
    AInftyData out = a;
    out.cutoff = cutoff;
    for (auto& [d, table] : out.maps)
        for (auto& [tuple, value] : table) {
            Combination cut;
            for (const auto& [name, series] : value) {
                NovikovElement t = series.truncated(cutoff);
                if (!t.is_zero()) cut.emplace(name, std::move(t));
            }
            value = std::move(cut);
        }
    return out;
}

namespace {

void compositions_rec(int left, std::vector<int>& parts,
                      const std::function<void(const std::vector<int>&)>& emit)
{
    if (left == 0) {
        emit(parts);
        return;
    }
    for (int first = 1; first <= left; ++first) {
        parts.push_back(first);
        compositions_rec(left - first, parts, emit);
        parts.pop_back();
    }
}

} // namespace

MorphismReport check_morphism(const MorphismData& f, int up_to_d)
{
    require_grading(f.source);
    require_grading(f.target);
    if (f.source.g != f.target.g)
        throw std::invalid_argument("grading moduli differ");
    if (f.source.cutoff != f.target.cutoff)
        throw std::invalid_argument("cutoffs differ");

    MorphismReport rep;
    check_homogeneity(f.source, 1, f.components, f.target, rep.failures);

    const auto F_apply = [&](int d, const std::vector<Combination>& args) {
        return table_apply(f.components, d, args, f.target.cutoff);
    };

    for (int d = 0; d <= up_to_d; ++d) {
        bool have = true;
        const auto need = [&](bool present, const std::string& what) {
            if (present) return;
            rep.missing.push_back(what + " needed at d=" + std::to_string(d));
            have = false;
        };
        for (int k = 1; k <= d + 1; ++k)
            need(f.declared(k), "F^" + std::to_string(k));
        for (int k = 0; k <= d; ++k)
            need(f.source.declared(k), "source m_" + std::to_string(k));
        for (int k = d == 0 ? 0 : 1; k <= d; ++k)
            need(f.target.declared(k), "target m_" + std::to_string(k));
        if (!have || f.source.generators.empty()) continue;

        std::vector<size_t> idx(size_t(d), 0);
        do {
            const std::vector<std::string> tuple = tuple_names(f.source.generators, idx);
            Combination lhs;
            for (int i = 0; i <= d; ++i) {
                for (int j = 0; i + j <= d; ++j) {
                    const Combination inner = m_apply(
                        f.source, j, basis_slice(f.source, tuple, size_t(i), size_t(i + j)));
                    if (combination_is_zero(inner)) continue;
                    std::vector<Combination> outer =
                        basis_slice(f.source, tuple, 0, size_t(i));
                    outer.push_back(inner);
                    for (size_t l = size_t(i + j); l < tuple.size(); ++l)
                        outer.push_back(basis(f.source, tuple[l]));
                    int sign = i;
                    for (int l = 0; l < i; ++l) sign += parity(f.source, tuple[size_t(l)]);
                    const Combination term = F_apply(d - j + 1, outer);
                    lhs = combination_add(
                        lhs, sign % 2 ? combination_scale(QComplex(-1), term) : term);
                }
            }

            Combination rhs;
            std::vector<int> parts;
            compositions_rec(d, parts, [&](const std::vector<int>& comp) {
                std::vector<Combination> blocks;
                size_t at = 0;
                for (int len : comp) {
                    blocks.push_back(F_apply(
                        len, basis_slice(f.source, tuple, at, at + size_t(len))));
                    at += size_t(len);
                }
                rhs = combination_add(rhs,
                                      m_apply(f.target, int(comp.size()), blocks));
            });

            const Combination residual =
                combination_add(lhs, combination_scale(QComplex(-1), rhs));
            if (!combination_is_zero(residual))
                rep.failures.push_back({d, tuple, combination_str(residual)});
        } while (next_tuple(f.source.generators, idx));
    }

    if (!f.source.unit.empty() && !f.target.unit.empty()) {
        rep.unital_checked = true;
        if (!f.declared(1)) {
            rep.unit_failures.push_back({1, {f.source.unit}, "F^1 not declared"});
        } else {
            const Combination image = F_apply(1, {basis(f.source, f.source.unit)});
            const Combination want = basis(f.target, f.target.unit);
            if (!combination_is_zero(
                    combination_add(image, combination_scale(QComplex(-1), want))))
                rep.unit_failures.push_back(
                    {1, {f.source.unit}, "unit does not map to the unit"});
        }
        for (const auto& [d, table] : f.components) {
            if (d < 2) continue;
            for (const auto& [tuple, out] : table)
                if (tuple_contains(tuple, f.source.unit) && !combination_is_zero(out))
                    rep.unit_failures.push_back(
                        {d, tuple, "nonzero value on a unit insertion"});
        }
        rep.unital = rep.unit_failures.empty();
    }

    rep.ok = rep.missing.empty() && rep.failures.empty();
    return rep;
}

NovikovElement split_assembly(const std::vector<SplitContribution>& types,
                              const Rational& cutoff)
{
    NovikovElement out = NovikovElement::zero(cutoff);
    for (const SplitContribution& t : types) {
        if (t.sign != 1 && t.sign != -1)
            throw std::invalid_argument("orientation sign must be +1 or -1");
        if (t.d_black < 0)
            throw std::invalid_argument("negative interior marking count");
        Int fact = 1;
        for (int i = 2; i <= t.d_black; ++i) fact *= i;
        NovikovElement prod = NovikovElement::one(cutoff);
        for (const NovikovElement& factor : t.factors) prod = prod * factor;
        const QComplex c(Rational(t.sign) * Rational(t.mult) / Rational(fact));
        out = out + scale(c, prod);
    }
    return out;
}

} // namespace tropikit
