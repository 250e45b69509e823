#pragma once

#include "tropikit/rational.hpp"

#include <optional>

namespace tropikit {

// Complex numbers with rational parts; enough to evaluate local systems.
struct QComplex {
    Rational re = 0;
    Rational im = 0;

    QComplex() = default;
    QComplex(Rational r) : re(std::move(r)) {}
    QComplex(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool operator==(const QComplex&) const = default;
};

inline QComplex operator+(const QComplex& a, const QComplex& b)
{
    return {a.re + b.re, a.im + b.im};
}
inline QComplex operator-(const QComplex& a) { return {-a.re, -a.im}; }
inline QComplex operator-(const QComplex& a, const QComplex& b)
{
    return {a.re - b.re, a.im - b.im};
}
inline QComplex operator*(const QComplex& a, const QComplex& b)
{
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

std::string format_qcomplex(const QComplex& c);

// Finite q-series truncated below a valuation cutoff: exponents strictly
// increase, stay below the cutoff, and carry nonzero coefficients.
struct NovikovElement {
    struct Term {
        Rational exponent;
        QComplex coefficient;
        bool operator==(const Term&) const = default;
    };
    std::vector<Term> terms;
    Rational cutoff = 0;

    static NovikovElement zero(const Rational& cutoff);
    static NovikovElement one(const Rational& cutoff);
    static NovikovElement term(const QComplex& c, const Rational& exponent,
                               const Rational& cutoff);

    bool is_zero() const { return terms.empty(); }
    // Least exponent; empty means +infinity.
    std::optional<Rational> valuation() const;
    QComplex coefficient_at(const Rational& exponent) const;
    NovikovElement truncated(const Rational& new_cutoff) const;
    std::string str() const;
};

// Arithmetic requires matching cutoffs and renormalizes the result.
NovikovElement operator+(const NovikovElement& a, const NovikovElement& b);
NovikovElement operator-(const NovikovElement& a);
NovikovElement operator-(const NovikovElement& a, const NovikovElement& b);
NovikovElement operator*(const NovikovElement& a, const NovikovElement& b);
NovikovElement scale(const QComplex& c, const NovikovElement& a);
bool operator==(const NovikovElement& a, const NovikovElement& b);

} // namespace tropikit
