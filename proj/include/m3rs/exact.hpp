#pragma once

#include <vector>

#include "m3rs/column.hpp"
#include "m3rs/types.hpp"

namespace m3rs {

struct SolveLimits {
    double max_time = 1200.0;  // seconds
    long long max_nodes = -1;  // < 0: unlimited
};

struct ExactResult {
    Solution solution;
    double upper_bound = 0.0;  // valid bound on the true optimum
    long long nodes = 0;
};

/// Depth-first branch and bound over (agent, next task, mode) route
/// extensions, schedules propagated as earliest arrivals. The optimistic
/// bound adds, for every unassigned task, the best per-visit value still
/// provably reachable. status Optimal means the search space was
/// exhausted and the objective is the true maximum; on a limit stop the
/// best incumbent is returned as Feasible with upper_bound still valid.
ExactResult solve_exact(const Instance& inst, Weights w,
                        const SolveLimits& limits);

enum class ModePolicy { Max, Min };

/// Fixed-mode baseline: per task keep the single highest-quality (Max) or
/// lowest-quality (Min) mode, catalog order breaking ties.
Instance restrict_modes(const Instance& inst, ModePolicy policy);

/// Task-row duals plus the fleet-row dual charged to every column.
struct PriceVector {
    std::vector<double> gamma;  // aligned with Instance::tasks, >= 0
    double fleet_dual = 0.0;
};

struct PricingResult {
    std::vector<Column> columns;  // reduced cost > 1e-9, best first
    bool exhausted = false;       // search space fully explored within limits
};

/// Single-agent search over a task subset maximizing
///   sum over visits of (lambda + (1-lambda) p - gamma) - fleet_dual.
/// Returns up to pool_cap distinct feasible columns with strictly
/// positive reduced cost, best first. An empty list with exhausted set
/// certifies that no positive column exists over the subset.
PricingResult solve_pricing(const Instance& inst, const std::vector<int>& subset,
                            const PriceVector& duals, Weights w,
                            const SolveLimits& limits, int pool_cap);

}  // namespace m3rs
