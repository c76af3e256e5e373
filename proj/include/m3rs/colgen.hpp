#pragma once

#include <cstdint>
#include <unordered_set>
#include <vector>

#include "m3rs/column.hpp"
#include "m3rs/exact.hpp"
#include "m3rs/lp.hpp"
#include "m3rs/types.hpp"

namespace m3rs {

/// Deduplicated set of candidate columns plus generation counters.
struct ColumnPool {
    std::vector<Column> columns;
    int iterations = 0;
    int columns_added = 0;
    int pricing_rounds = 0;

    /// False if a column with the same id is already present.
    bool insert(Column col);
    bool contains(std::uint64_t id) const { return ids_.count(id) != 0; }

private:
    std::unordered_set<std::uint64_t> ids_;
};

struct ColgenConfig {
    int subset_size = 12;             // |T'| sampled per pricing round
    double rmp_time_limit = 30.0;     // seconds
    double pricing_time_limit = 10.0; // seconds per pricing round
    double total_time_limit = 600.0;  // seconds
    int max_iterations = 1000;
    int pool_cap = 20;                // columns accepted per pricing round
    std::uint64_t seed = 0;
};

struct IterationTrace {
    int iteration = 0;
    std::size_t pool_size = 0;
    double rmp_objective = 0.0;
    double best_reduced_cost = 0.0;  // best column found this round, 0 if none
};

struct ColgenResult {
    Solution solution;
    ColumnPool pool;
    std::vector<IterationTrace> trace;
    double final_lp_objective = 0.0;
    bool converged = false;          // certified by a full-set pricing round
    double final_pricing_max_rc = 0.0;
};

/// Singleton columns: one per task and best feasible mode; tasks with no
/// feasible singleton are omitted.
ColumnPool init_pool(const Instance& inst, Weights w);

/// Set-packing master over the pool: one theta per column with its cost,
/// a <=1 coverage row per task, and one fleet row sum(theta) <= |A|.
LpProblem build_rmp(const ColumnPool& pool, const Instance& inst, Weights w);

/// Exact set packing over the pool columns: maximize total cost subject
/// to pairwise task-disjointness and at most |A| columns. Returns indices
/// into pool.columns.
std::vector<int> solve_final_integer(const ColumnPool& pool, const Instance& inst);

/// Alternating restricted master solves and dual-guided pricing on sampled
/// task subsets, then an exact integer re-solve over the pool. Status is
/// Optimal only when a full-set pricing round certified that no positive
/// reduced cost column exists and the integer solve matched the LP bound.
ColgenResult run_colgen(const Instance& inst, Weights w, const ColgenConfig& config);

}  // namespace m3rs
