#pragma once

#include "tropikit/novikov.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace tropikit {

// Linear combination of named generators over truncated q-series.
using Combination = std::map<std::string, NovikovElement>;

// Curved algebra presented by tables: for every declared arity d in
// 0..d_max, maps[d] sends a generator tuple to its image combination, and
// tuples absent from a declared table map to zero.  Arities above d_max are
// unknown rather than zero.  The three distinguished generators (strict unit
// candidate, weighted unit, geometric unit) are optional names.
struct AInftyData {
    int g = 2; // grading modulus, positive and even
    Rational cutoff = 0;
    std::vector<std::string> generators;
    std::map<std::string, int> degree;
    int d_max = -1;
    std::map<int, std::map<std::vector<std::string>, Combination>> maps;
    std::string unit;
    std::string weighted;
    std::string maximum;

    bool declared(int d) const { return d >= 0 && d <= d_max; }
};

Combination basis(const AInftyData& a, const std::string& name);
bool combination_is_zero(const Combination& c);
Combination combination_add(const Combination& x, const Combination& y);
Combination combination_scale(const QComplex& c, const Combination& x);
std::string combination_str(const Combination& c);

// Multilinear evaluation of the arity-d table; throws when d is undeclared.
Combination m_apply(const AInftyData& a, int d, const std::vector<Combination>& args);

struct RelationIssue {
    int d = 0;
    std::vector<std::string> tuple;
    std::string detail;
};

struct AlgebraReport {
    bool ok = true;
    std::vector<std::string> missing; // arities that were needed but undeclared
    std::vector<RelationIssue> failures;
};

// Residuals of sum_{j,k} (-1)^{j + |a_1| + ... + |a_j|}
// m_{d-k+1}(a_1..a_j, m_k(a_{j+1}..a_{j+k}), a_{j+k+1}..a_d) over all
// generator tuples with d <= up_to_d.  A relation is only evaluated when
// every arity it involves is declared; gaps are reported, never guessed.
AlgebraReport check_associativity(const AInftyData& a, int up_to_d);

// m_2(e, a) = a = (-1)^{|a|} m_2(a, e) for every generator, and declared
// tables of other arities vanish on tuples containing e.
AlgebraReport check_strict_unit(const AInftyData& a, const std::string& e);

struct LeadingUnitReport {
    bool ok = false;
    bool exact = false; // no higher-order terms at all
    std::string detail;
};

// m_1(weighted) must equal unit - maximum up to terms of positive valuation.
LeadingUnitReport check_homotopy_unit_leading(const AInftyData& a);

struct MCResult {
    Combination residual;     // what remains after removing the unit line
    bool solved = false;
    NovikovElement potential; // the unit coefficient of the full sum
};

// Evaluates m_0(1) + m_1(b) + m_2(b,b) + ... for odd b of positive
// valuation; b solves the projective equation when the sum lies on the unit
// line.  Throws when b is even, has valuation zero, or the declared arities
// cannot exhaust the sum below the cutoff.
MCResult mc_residual(const AInftyData& a, const Combination& b);

// The same presentation with every q-series cut at a smaller exponent.
AInftyData truncated(const AInftyData& a, const Rational& cutoff);

// Morphism presented by component tables F^d, declared for 0..d_max.
struct MorphismData {
    AInftyData source;
    AInftyData target;
    int d_max = -1;
    std::map<int, std::map<std::vector<std::string>, Combination>> components;

    bool declared(int d) const { return d >= 0 && d <= d_max; }
};

struct MorphismReport {
    bool ok = true;
    std::vector<std::string> missing;
    std::vector<RelationIssue> failures;
    bool unital_checked = false;
    bool unital = false;
    std::vector<RelationIssue> unit_failures;
};

// sum (-1)^{i + |a_1| + ... + |a_i|} F(a_1..a_i, m(a..), ..) against
// sum m(F(..), ..., F(..)) over positive partitions, plus the unit rules
// F^1(e) = e and vanishing of higher insertions when units are designated.
MorphismReport check_morphism(const MorphismData& f, int up_to_d);

// One term per rigid type: sign * mult / d_black! times the product of the
// per-component counts.
struct SplitContribution {
    Int mult = 1;
    int d_black = 0;
    int sign = 1;
    std::vector<NovikovElement> factors;
};

NovikovElement split_assembly(const std::vector<SplitContribution>& types,
                              const Rational& cutoff);

} // namespace tropikit
