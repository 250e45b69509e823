#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <stdexcept>
#include <string>
#include <vector>

namespace tropikit {

using Int = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

using ZVec = std::vector<Int>;
using QVec = std::vector<Rational>;

inline Rational to_rational(const Int& z) { return Rational(z); }

inline Int rat_num(const Rational& q) { return Int(numerator(q)); }
inline Int rat_den(const Rational& q) { return Int(denominator(q)); }

// Parses "p/q", "p", or "-p/q".  Used for all rational-valued JSON fields.
inline Rational parse_rational(const std::string& s)
{
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(s));
        Int p(s.substr(0, slash));
        Int q(s.substr(slash + 1));
        if (q == 0) throw std::invalid_argument("zero denominator");
        return Rational(p) / Rational(q);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("bad rational literal: " + s);
    }
}

inline std::string format_rational(const Rational& q)
{
    if (rat_den(q) == 1) return rat_num(q).str();
    return rat_num(q).str() + "/" + rat_den(q).str();
}

inline QVec to_qvec(const ZVec& v)
{
    QVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = Rational(v[i]);
    return out;
}

inline Rational dot(const QVec& a, const QVec& b)
{
    if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
    Rational s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Int dot(const ZVec& a, const ZVec& b)
{
    if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline bool is_zero(const QVec& v)
{
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

inline bool is_zero(const ZVec& v)
{
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

inline QVec operator+(const QVec& a, const QVec& b)
{
    if (a.size() != b.size()) throw std::invalid_argument("vec add: size mismatch");
    QVec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

inline QVec operator-(const QVec& a, const QVec& b)
{
    if (a.size() != b.size()) throw std::invalid_argument("vec sub: size mismatch");
    QVec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

inline QVec operator*(const Rational& c, const QVec& v)
{
    QVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = c * v[i];
    return out;
}

inline ZVec operator-(const ZVec& a, const ZVec& b)
{
    if (a.size() != b.size()) throw std::invalid_argument("vec sub: size mismatch");
    ZVec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

inline ZVec negate(const ZVec& v)
{
    ZVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
    return out;
}

// Clears denominators: returns the integer vector d*v where d = lcm of denominators.
inline ZVec clear_denominators(const QVec& v)
{
    Int d = 1;
    for (const auto& x : v) d = lcm(d, rat_den(x));
    ZVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = rat_num(v[i]) * (d / rat_den(v[i]));
    return out;
}

inline std::string format_qvec(const QVec& v)
{
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += format_rational(v[i]);
    }
    return s + ")";
}

inline std::string format_zvec(const ZVec& v)
{
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].str();
    }
    return s + ")";
}

} // namespace tropikit
