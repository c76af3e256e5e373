#include "m3rs/lp.hpp"

#include <chrono>
#include <cmath>

namespace m3rs {

namespace {

constexpr double kPivotTol = 1e-9;
constexpr int kStallWindow = 64;  // non-improving pivots before Bland's rule

using Clock = std::chrono::steady_clock;

}  // namespace

LpResult solve_lp(const LpProblem& problem, const LpOptions& options) {
    const int n = problem.num_vars();
    const int m = problem.num_rows();
    if (static_cast<int>(problem.rhs.size()) != m)
        throw std::invalid_argument("solve_lp: rhs size does not match row count");
    for (int i = 0; i < m; ++i) {
        if (!std::isfinite(problem.rhs[i]))
            throw std::invalid_argument("solve_lp: rhs must be finite");
        if (problem.rhs[i] < 0)
            throw std::invalid_argument("solve_lp: negative rhs is outside the "
                                        "supported problem class");
        for (const auto& [col, coef] : problem.rows[i]) {
            (void)coef;
            if (col < 0 || col >= n)
                throw std::invalid_argument("solve_lp: column index out of range");
        }
    }

    // Dictionary over [structural | slack] columns, slack basis start.
    const int total = n + m;
    Eigen::MatrixXd tab = Eigen::MatrixXd::Zero(m, total);
    for (int i = 0; i < m; ++i) {
        for (const auto& [col, coef] : problem.rows[i]) tab(i, col) += coef;
        tab(i, n + i) = 1.0;
    }
    Eigen::VectorXd beta = problem.rhs;        // current basic values
    Eigen::VectorXd red = Eigen::VectorXd::Zero(total);  // reduced costs
    red.head(n) = problem.objective;
    double z = 0.0;
    std::vector<int> basis(m);
    for (int i = 0; i < m; ++i) basis[i] = n + i;

    const long long cap = options.max_iterations >= 0
                              ? options.max_iterations
                              : 10000 + 200LL * total;
    const auto deadline = options.time_limit > 0
                              ? Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                    std::chrono::duration<double>(options.time_limit))
                              : Clock::time_point::max();

    bool bland = false;
    int since_improvement = 0;
    double best_z = z;

    for (long long iter = 0;; ++iter) {
        if (iter >= cap)
            throw LpNumericalFailure("solve_lp: iteration cap reached");
        if ((iter & 63) == 0 && Clock::now() > deadline)
            throw LpTimeLimit("solve_lp: time limit reached");

        // Entering column: most positive reduced cost, or first (Bland).
        int enter = -1;
        double best = kPivotTol;
        for (int j = 0; j < total; ++j) {
            if (red[j] > best) {
                enter = j;
                if (bland) break;
                best = red[j];
            }
        }
        if (enter < 0) break;  // optimal

        // Ratio test; ties to the smallest basis index keep pivots stable.
        int leave = -1;
        double min_ratio = 0.0;
        for (int i = 0; i < m; ++i) {
            if (tab(i, enter) > kPivotTol) {
                const double ratio = beta[i] / tab(i, enter);
                if (leave < 0 || ratio < min_ratio - kPivotTol ||
                    (ratio < min_ratio + kPivotTol && basis[i] < basis[leave])) {
                    leave = i;
                    min_ratio = ratio;
                }
            }
        }
        if (leave < 0) {
            LpResult res;
            res.status = LpStatus::Unbounded;
            return res;
        }

        // Pivot on (leave, enter).
        const double pivot = tab(leave, enter);
        tab.row(leave) /= pivot;
        beta[leave] /= pivot;
        for (int i = 0; i < m; ++i) {
            if (i == leave) continue;
            const double factor = tab(i, enter);
            if (factor != 0.0) {
                tab.row(i) -= factor * tab.row(leave);
                beta[i] -= factor * beta[leave];
                if (beta[i] < 0 && beta[i] > -1e-11) beta[i] = 0.0;
            }
        }
        const double rfactor = red[enter];
        red -= rfactor * tab.row(leave).transpose();
        z += rfactor * beta[leave];
        basis[leave] = enter;

        if (z > best_z + 1e-12) {
            best_z = z;
            since_improvement = 0;
        } else if (!bland && ++since_improvement >= kStallWindow) {
            bland = true;  // degenerate plateau, fall back to anti-cycling rule
        }
    }

    LpResult res;
    res.status = LpStatus::Optimal;
    res.primal = Eigen::VectorXd::Zero(n);
    for (int i = 0; i < m; ++i)
        if (basis[i] < n) res.primal[basis[i]] = beta[i];
    // Row duals are the negated reduced costs of the slack columns.
    res.dual = Eigen::VectorXd(m);
    for (int i = 0; i < m; ++i) res.dual[i] = -red[n + i];
    res.objective = z;
    return res;
}

}  // namespace m3rs
