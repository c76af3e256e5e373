#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace m3rs {

/// Maximization LP of the restricted-master class: all variables >= 0,
/// all rows <=, right-hand sides >= 0 (so the origin is always feasible).
struct LpProblem {
    Eigen::VectorXd objective;  // c, one entry per variable
    std::vector<std::vector<std::pair<int, double>>> rows;  // sparse coefficients
    Eigen::VectorXd rhs;

    int num_vars() const { return static_cast<int>(objective.size()); }
    int num_rows() const { return static_cast<int>(rows.size()); }
};

enum class LpStatus { Optimal, Unbounded, Infeasible };

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    Eigen::VectorXd primal;  // per variable
    Eigen::VectorXd dual;    // per row, >= 0 at an optimum
    double objective = 0.0;
};

/// Pivoting stalled beyond the iteration cap.
struct LpNumericalFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Solve deadline exceeded (set via LpOptions::time_limit).
struct LpTimeLimit : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct LpOptions {
    long long max_iterations = -1;  // < 0: derived from the problem size
    double time_limit = 0.0;        // seconds, <= 0: none
};

/// Dense primal simplex from the slack basis. Dantzig pricing with a
/// permanent switch to Bland's rule once the objective stops improving,
/// so cycling cannot occur. At an optimum, strong duality and
/// complementary slackness hold to 1e-6.
LpResult solve_lp(const LpProblem& problem, const LpOptions& options = {});

}  // namespace m3rs
