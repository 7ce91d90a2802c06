#pragma once

#include <Eigen/Core>
#include <iosfwd>
#include <limits>
#include <vector>

#include "coxplain/errors.hpp"

namespace coxplain {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Per-variable bounds. lower = -inf marks a free-below variable.
struct LpBounds {
    double lower = 0.0;
    double upper = kInf;
    static LpBounds free() { return {-kInf, kInf}; }
    static LpBounds nonneg() { return {0.0, kInf}; }
    static LpBounds box(double lo, double hi) { return {lo, hi}; }
};

// minimize objective . v  subject to  constraint_matrix v <= rhs  and bounds.
struct LpProblem {
    Eigen::VectorXd objective;
    Eigen::MatrixXd constraint_matrix;
    Eigen::VectorXd rhs;
    std::vector<LpBounds> variable_bounds;

    Eigen::Index n_vars() const { return objective.size(); }
    Eigen::Index n_constraints() const { return constraint_matrix.rows(); }
    void check_well_formed() const;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
    LpStatus status = LpStatus::Infeasible;
    Eigen::VectorXd variables;
    double objective_value = 0.0;
    // One multiplier per constraint row, >= 0 for the minimization problem;
    // zero on slack rows (complementary slackness).
    Eigen::VectorXd duals;
};

struct LpOptions {
    double feasibility_tol = 1e-9;
    double pivot_tol = 1e-12;
    // Hard cap on simplex iterations; exceeding it raises NumericalFailure.
    int max_iterations = 0;  // 0 = automatic from problem size
};

// Two-phase primal simplex on a dense tableau with Bland's rule.
// Free variables are split into differences of nonnegative parts; a crash
// pass pivots them into the basis first, which usually removes the need for
// artificial variables. Status is certified: the returned point is checked
// against the constraints before reporting Optimal.
LpSolution solve_lp(const LpProblem& problem, const LpOptions& options = {});

// Plain-text dump (one constraint per line, 17 significant digits) for
// offline comparison against external solvers.
void dump_lp(const LpProblem& problem, std::ostream& os);

}  // namespace coxplain
