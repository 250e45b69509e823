#pragma once

#include "tropikit/matrix.hpp"

#include <optional>

namespace tropikit {

// Feasible region { x : A_ineq x >= b_ineq, A_eq x = b_eq }, variables free.
struct LinearProgram {
    int vars = 0;
    QMat A_ineq;
    QVec b_ineq;
    QMat A_eq;
    QVec b_eq;

    void add_ineq(const QVec& a, const Rational& b);
    void add_eq(const QVec& a, const Rational& b);
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    Rational value = 0;
    QVec x;
};

// Exact two-phase simplex (Bland's rule).
LpResult lp_maximize(const LinearProgram& lp, const QVec& objective);

std::optional<QVec> lp_feasible_point(const LinearProgram& lp);

struct RelintResult {
    bool empty = true;
    QVec point;
    std::vector<int> implicit_equalities; // indices into A_ineq rows
};

// Point with strictly positive slack on every non-implicit inequality.
RelintResult lp_relative_interior(const LinearProgram& lp);

// Dimension of the feasible set (-1 if empty).
int lp_dimension(const LinearProgram& lp);

} // namespace tropikit
