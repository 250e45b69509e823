#include "tropikit/novikov.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace tropikit {

namespace {

void require_same_cutoff(const NovikovElement& a, const NovikovElement& b)
{
    if (a.cutoff != b.cutoff)
        throw std::invalid_argument("cutoff mismatch: " + format_rational(a.cutoff) +
                                    " vs " + format_rational(b.cutoff));
}

NovikovElement normalized(std::map<Rational, QComplex> acc, const Rational& cutoff)
{
    NovikovElement out;
    out.cutoff = cutoff;
    for (auto& [e, c] : acc)
        if (!c.is_zero() && e < cutoff) out.terms.push_back({e, c});
    return out;
}

} // namespace

std::string format_qcomplex(const QComplex& c)
{
    if (c.im == 0) return format_rational(c.re);
    std::string s = "(" + format_rational(c.re);
    s += c.im > 0 ? "+" : "-";
    const Rational a = c.im > 0 ? c.im : Rational(-c.im);
    if (a != 1) s += format_rational(a);
    return s + "i)";
}

NovikovElement NovikovElement::zero(const Rational& cutoff)
{
    NovikovElement out;
    out.cutoff = cutoff;
    return out;
}

NovikovElement NovikovElement::one(const Rational& cutoff)
{
    return term(QComplex(1), 0, cutoff);
}

NovikovElement NovikovElement::term(const QComplex& c, const Rational& exponent,
                                    const Rational& cutoff)
{
    NovikovElement out;
    out.cutoff = cutoff;
    if (!c.is_zero() && exponent < cutoff) out.terms.push_back({exponent, c});
    return out;
}

std::optional<Rational> NovikovElement::valuation() const
{
    if (terms.empty()) return std::nullopt;
    return terms.front().exponent;
}

QComplex NovikovElement::coefficient_at(const Rational& exponent) const
{
    for (const Term& t : terms)
        if (t.exponent == exponent) return t.coefficient;
    return QComplex();
}

NovikovElement NovikovElement::truncated(const Rational& new_cutoff) const
{
    NovikovElement out;
    out.cutoff = new_cutoff;
    for (const Term& t : terms)
        if (t.exponent < new_cutoff) out.terms.push_back(t);
    return out;
}

std::string NovikovElement::str() const
{
    if (terms.empty()) return "0";
    std::string s;
    for (size_t i = 0; i < terms.size(); ++i) {
        if (i) s += " + ";
        s += format_qcomplex(terms[i].coefficient);
        if (terms[i].exponent != 0) s += " q^" + format_rational(terms[i].exponent);
    }
    return s;
}

NovikovElement operator+(const NovikovElement& a, const NovikovElement& b)
{
    require_same_cutoff(a, b);
    std::map<Rational, QComplex> acc;
    for (const auto& t : a.terms) acc[t.exponent] = acc[t.exponent] + t.coefficient;
    for (const auto& t : b.terms) acc[t.exponent] = acc[t.exponent] + t.coefficient;
    return normalized(std::move(acc), a.cutoff);
}

NovikovElement operator-(const NovikovElement& a)
{
    NovikovElement out = a;
    for (auto& t : out.terms) t.coefficient = -t.coefficient;
    return out;
}

NovikovElement operator-(const NovikovElement& a, const NovikovElement& b)
{
    return a + (-b);
}

NovikovElement operator*(const NovikovElement& a, const NovikovElement& b)
{
    require_same_cutoff(a, b);
    std::map<Rational, QComplex> acc;
    for (const auto& s : a.terms)
        for (const auto& t : b.terms) {
            const Rational e = s.exponent + t.exponent;
            if (e < a.cutoff) acc[e] = acc[e] + s.coefficient * t.coefficient;
        }
    return normalized(std::move(acc), a.cutoff);
}

NovikovElement scale(const QComplex& c, const NovikovElement& a)
{
    if (c.is_zero()) return NovikovElement::zero(a.cutoff);
    NovikovElement out;
    out.cutoff = a.cutoff;
    for (const auto& t : a.terms) {
        const QComplex p = c * t.coefficient;
        if (!p.is_zero()) out.terms.push_back({t.exponent, p});
    }
    return out;
}

bool operator==(const NovikovElement& a, const NovikovElement& b)
{
    return a.cutoff == b.cutoff && a.terms == b.terms;
}

} // namespace tropikit
