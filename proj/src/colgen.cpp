#include "m3rs/colgen.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <set>

#include "m3rs/rng.hpp"

namespace m3rs {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

}  // namespace

bool ColumnPool::insert(Column col) {
    if (!ids_.insert(col.id).second) return false;
    columns.push_back(std::move(col));
    ++columns_added;
    return true;
}

ColumnPool init_pool(const Instance& inst, Weights w) {
    ColumnPool pool;
    for (int t = 0; t < static_cast<int>(inst.tasks.size()); ++t) {
        const Task& task = inst.tasks[t];
        int best_mode = -1;
        double best_quality = 0.0;
        for (int m = 0; m < static_cast<int>(task.modes.size()); ++m) {
            const SeqItem item{t, m};
            if (!earliest_schedule(inst, {&item, 1}).feasible) continue;
            if (best_mode < 0 || task.modes[m].quality > best_quality) {
                best_mode = m;
                best_quality = task.modes[m].quality;
            }
        }
        if (best_mode < 0) continue;  // no feasible singleton, omit
        const SeqItem item{t, best_mode};
        pool.insert(make_column(inst, w, {&item, 1}));
    }
    return pool;
}

LpProblem build_rmp(const ColumnPool& pool, const Instance& inst, Weights w) {
    (void)w;  // column costs already carry the scalarization
    const int n = static_cast<int>(pool.columns.size());
    const int tasks = static_cast<int>(inst.tasks.size());
    LpProblem lp;
    lp.objective = Eigen::VectorXd(n);
    for (int k = 0; k < n; ++k) lp.objective[k] = pool.columns[k].cost;
    lp.rows.assign(tasks + 1, {});
    lp.rhs = Eigen::VectorXd(tasks + 1);
    for (int t = 0; t < tasks; ++t) lp.rhs[t] = 1.0;
    lp.rhs[tasks] = static_cast<double>(inst.fleet.count);
    for (int k = 0; k < n; ++k) {
        for (int t : pool.columns[k].covered) lp.rows[t].push_back({k, 1.0});
        lp.rows[tasks].push_back({k, 1.0});
    }
    return lp;
}

std::vector<int> solve_final_integer(const ColumnPool& pool, const Instance& inst) {
    const int agents = inst.fleet.count;

    // Columns sorted by cost descending; equal-coverage columns keep only
    // the best-cost representative, which preserves the optimum.
    std::vector<int> order(pool.columns.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
        return pool.columns[x].cost > pool.columns[y].cost;
    });
    std::set<std::vector<int>> coverages;
    std::vector<int> cand;
    for (int k : order)
        if (coverages.insert(pool.columns[k].covered).second) cand.push_back(k);

    // prefix_best[i][r]: largest possible cost sum from cand[i:] with r slots.
    const int m = static_cast<int>(cand.size());
    std::vector<std::vector<double>> prefix_best(
        m + 1, std::vector<double>(agents + 1, 0.0));
    for (int i = m - 1; i >= 0; --i)
        for (int r = 1; r <= agents; ++r)
            prefix_best[i][r] = std::max(
                prefix_best[i + 1][r],
                pool.columns[cand[i]].cost + prefix_best[i + 1][r - 1]);

    std::vector<int> best, chosen;
    double best_cost = 0.0;
    std::vector<char> task_used(inst.tasks.size(), 0);

    // Depth-first choose/skip with the prefix bound; exact, no limits.
    auto rec = [&](auto&& self, int i, int slots, double cost) -> void {
        if (cost > best_cost + 1e-12) {
            best_cost = cost;
            best = chosen;
        }
        if (i >= m || slots == 0) return;
        if (cost + prefix_best[i][slots] <= best_cost + 1e-12) return;
        const Column& col = pool.columns[cand[i]];
        const bool clash = std::any_of(col.covered.begin(), col.covered.end(),
                                       [&](int t) { return task_used[t]; });
        if (!clash) {
            for (int t : col.covered) task_used[t] = 1;
            chosen.push_back(cand[i]);
            self(self, i + 1, slots - 1, cost + col.cost);
            chosen.pop_back();
            for (int t : col.covered) task_used[t] = 0;
        }
        self(self, i + 1, slots, cost);
    };
    rec(rec, 0, agents, 0.0);
    std::sort(best.begin(), best.end());
    return best;
}

ColgenResult run_colgen(const Instance& inst, Weights w,
                        const ColgenConfig& config) {
    const auto t0 = Clock::now();
    const int num_tasks = static_cast<int>(inst.tasks.size());
    std::mt19937_64 rng(config.seed);

    ColgenResult res;
    res.pool = init_pool(inst, w);

    int completed_iterations = 0;
    bool out_of_time = false;
    std::size_t pool_size_at_lp = 0;  // columns covered by final_lp_objective

    if (!res.pool.columns.empty()) {
        while (true) {
            if (seconds_since(t0) >= config.total_time_limit) {
                out_of_time = true;
                break;
            }
            if (res.pool.iterations >= config.max_iterations) break;

            const double remaining =
                config.total_time_limit - seconds_since(t0);
            LpResult rmp;
            try {
                rmp = solve_lp(build_rmp(res.pool, inst, w),
                               {-1, std::min(config.rmp_time_limit, remaining)});
            } catch (const LpTimeLimit&) {
                out_of_time = true;
                break;
            }
            res.final_lp_objective = rmp.objective;
            pool_size_at_lp = res.pool.columns.size();

            PriceVector duals;
            duals.gamma.assign(num_tasks, 0.0);
            for (int t = 0; t < num_tasks; ++t)
                duals.gamma[t] = std::max(0.0, rmp.dual[t]);
            duals.fleet_dual = std::max(0.0, rmp.dual[num_tasks]);

            const int size = std::min(config.subset_size, num_tasks);
            const std::vector<int> subset = sample_indices(rng, num_tasks, size);
            const double budget = std::min(
                config.pricing_time_limit,
                config.total_time_limit - seconds_since(t0));
            if (budget <= 0) {
                out_of_time = true;
                break;
            }
            const auto priced = solve_pricing(inst, subset, duals, w,
                                              {budget, -1}, config.pool_cap);
            ++res.pool.pricing_rounds;

            auto reduced_cost = [&](const Column& col) {
                double g = 0.0;
                for (int t : col.covered) g += duals.gamma[t];
                return col.cost - duals.fleet_dual - g;
            };

            int added = 0;
            double best_rc = 0.0;
            for (const auto& col : priced.columns) {
                best_rc = std::max(best_rc, reduced_cost(col));
                if (res.pool.insert(col)) ++added;
            }
            ++res.pool.iterations;
            ++completed_iterations;
            res.trace.push_back({res.pool.iterations, res.pool.columns.size(),
                                 rmp.objective, best_rc});

            if (added > 0) continue;

            // Nothing new from the sampled subset: a full-set round decides
            // between convergence and more columns.
            const double full_budget = std::min(
                config.pricing_time_limit,
                config.total_time_limit - seconds_since(t0));
            if (full_budget <= 0) {
                out_of_time = true;
                break;
            }
            std::vector<int> all(num_tasks);
            std::iota(all.begin(), all.end(), 0);
            const auto full = solve_pricing(inst, all, duals, w,
                                            {full_budget, -1}, config.pool_cap);
            ++res.pool.pricing_rounds;
            res.final_pricing_max_rc = 0.0;
            int full_added = 0;
            for (const auto& col : full.columns) {
                res.final_pricing_max_rc =
                    std::max(res.final_pricing_max_rc, reduced_cost(col));
                if (res.pool.insert(col)) ++full_added;
            }
            if (full.columns.empty() && full.exhausted) {
                res.converged = true;
                break;
            }
            if (full_added == 0) break;  // no progress possible, not certified
        }
    }

    // Keep the LP bound aligned with the pool the integer solve sees.
    if (completed_iterations > 0 && pool_size_at_lp < res.pool.columns.size()) {
        const LpResult rmp = solve_lp(build_rmp(res.pool, inst, w));
        res.final_lp_objective = rmp.objective;
    }

    // Final integer re-solve over whatever the pool holds.
    const std::vector<int> picked = solve_final_integer(res.pool, inst);
    int agent = 0;
    for (int k : picked) {
        Route route;
        route.agent = agent++;
        route.visits = res.pool.columns[k].visits;
        route.return_time = res.pool.columns[k].return_time;
        res.solution.routes.push_back(std::move(route));
    }
    res.solution.objective = objective_value(inst, res.solution, w);

    if (res.pool.columns.empty()) {
        res.solution.status = SolveStatus::Optimal;  // no feasible column exists
    } else if (res.converged &&
               std::abs(res.solution.objective - res.final_lp_objective) <= 1e-6) {
        res.solution.status = SolveStatus::Optimal;
    } else if (out_of_time && completed_iterations == 0) {
        res.solution.status = SolveStatus::TimedOut;
    } else {
        res.solution.status = SolveStatus::Feasible;
    }
    res.solution.compute_time = seconds_since(t0);
    return res;
}

}  // namespace m3rs
