#pragma once

#include "tddel/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace tddel::lp {

// One variable of a bounded linear program.  The lower bound is always
// finite; the upper bound may be absent.
struct Variable {
    Rational lower = 0;
    std::optional<Rational> upper;
    Rational objective = 0; // minimized
};

// minimize  sum objective_j x_j
// subject   sum row_j x_j == rhs   (per row)
//           lower <= x <= upper
struct Problem {
    std::vector<Variable> vars;
    std::vector<std::vector<std::pair<int, Rational>>> rows; // sparse
    std::vector<Rational> rhs;
};

enum class Status {
    Optimal,       // finished; x holds an optimal point
    Infeasible,    // the equality system has no point within the bounds
    TargetReached, // early stop: objective dropped below the given target
};

struct Solution {
    Status status = Status::Infeasible;
    std::vector<Rational> x;
    Rational objective = 0;
};

// Exact two-phase primal simplex on bounded variables with Bland's rule,
// which guarantees termination.  All arithmetic is rational; results are
// exact vertices.  If `stop_below` is given, phase 2 returns as soon as the
// objective is strictly smaller than it.  Throws InternalError if the
// program is unbounded (callers here only build bounded programs).
Solution solve(const Problem& problem, const std::optional<Rational>& stop_below = {});

} // namespace tddel::lp
