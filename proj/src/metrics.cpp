#include "m3rs/metrics.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <stdexcept>
#include <thread>

#include "m3rs/core.hpp"
#include "m3rs/io.hpp"

namespace m3rs {

namespace {

int visited_count(const Solution& sol) {
    int n = 0;
    for (const auto& r : sol.routes) n += static_cast<int>(r.visits.size());
    return n;
}

double quality_sum(const Instance& inst, const Solution& sol) {
    const auto index = task_index_map(inst);
    double q = 0.0;
    for (const auto& r : sol.routes)
        for (const auto& v : r.visits) {
            auto it = index.find(v.task_id);
            if (it == index.end())
                throw std::invalid_argument("quality_sum: unknown task id " +
                                            std::to_string(v.task_id));
            q += inst.tasks[it->second].modes.at(v.mode_index).quality;
        }
    return q;
}

}  // namespace

double success_rate(const Instance& inst, const Solution& sol) {
    if (inst.tasks.empty()) return 0.0;
    return static_cast<double>(visited_count(sol)) /
           static_cast<double>(inst.tasks.size());
}

double dosage_quality(const Instance& inst, const Solution& sol) {
    const int n = visited_count(sol);
    if (n == 0) return 0.0;
    return quality_sum(inst, sol) / static_cast<double>(n);
}

double max_instance_quality(const Instance& inst) {
    double p = 0.0;
    for (const auto& t : inst.tasks)
        for (const auto& m : t.modes) p = std::max(p, m.quality);
    return p;
}

double mission_success_index(const Instance& inst, const Solution& sol) {
    if (inst.tasks.empty()) return 0.0;
    const double p_max = max_instance_quality(inst);
    return (visited_count(sol) + quality_sum(inst, sol)) /
           (static_cast<double>(inst.tasks.size()) * (1.0 + p_max));
}

double avg_lateness(const Instance& inst,
                    const std::vector<std::pair<int, double>>& executed_log) {
    if (executed_log.empty()) return 0.0;
    const auto index = task_index_map(inst);
    double total = 0.0;
    for (const auto& [id, completion] : executed_log) {
        auto it = index.find(id);
        if (it == index.end())
            throw std::invalid_argument("avg_lateness: unknown task id " +
                                        std::to_string(id));
        total += std::max(0.0, completion - inst.tasks[it->second].window_end);
    }
    return total / static_cast<double>(executed_log.size());
}

const char* method_name(Method m) {
    switch (m) {
        case Method::Exact: return "exact";
        case Method::Colgen: return "colgen";
        case Method::RsfMax: return "rsf-max";
        case Method::RsfMin: return "rsf-min";
    }
    return "?";
}

std::optional<Method> method_from_name(const std::string& name) {
    if (name == "exact") return Method::Exact;
    if (name == "colgen") return Method::Colgen;
    if (name == "rsf-max") return Method::RsfMax;
    if (name == "rsf-min") return Method::RsfMin;
    return std::nullopt;
}

namespace {

// Fixed-mode solves run on the restricted instance; their visits must be
// re-indexed against the original mode lists before the solution can be
// checked or serialized with the original instance. Labels are preserved
// by restrict_modes, so they key the remapping.
Solution solve_restricted(const Instance& inst, ModePolicy policy, Weights w,
                          const SolveLimits& limits) {
    const Instance restricted = restrict_modes(inst, policy);
    Solution sol = solve_exact(restricted, w, limits).solution;
    const auto index = task_index_map(inst);
    const auto rindex = task_index_map(restricted);
    for (auto& route : sol.routes)
        for (auto& v : route.visits) {
            const std::string& label = restricted.tasks[rindex.at(v.task_id)]
                                           .modes.at(v.mode_index)
                                           .label;
            const Task& task = inst.tasks[index.at(v.task_id)];
            v.mode_index = -1;
            for (int m = 0; m < static_cast<int>(task.modes.size()); ++m)
                if (task.modes[m].label == label) {
                    v.mode_index = m;
                    break;
                }
            if (v.mode_index < 0)
                throw std::logic_error("solve_restricted: mode label lost");
        }
    return sol;
}

}  // namespace

Solution solve_with_method(const Instance& inst, Method method, Weights w,
                           const SolveLimits& limits, const ColgenConfig& colgen) {
    switch (method) {
        case Method::Exact:
            return solve_exact(inst, w, limits).solution;
        case Method::Colgen: {
            ColgenConfig cfg = colgen;
            cfg.total_time_limit = limits.max_time;
            return run_colgen(inst, w, cfg).solution;
        }
        case Method::RsfMax:
            return solve_restricted(inst, ModePolicy::Max, w, limits);
        case Method::RsfMin:
            return solve_restricted(inst, ModePolicy::Min, w, limits);
    }
    throw std::logic_error("solve_with_method: unknown method");
}

MetricReport make_report(const Instance& inst, const Solution& sol, double lambda) {
    MetricReport rep;
    rep.lambda = lambda;
    rep.sr = success_rate(inst, sol);
    rep.dq = dosage_quality(inst, sol);
    rep.msi = mission_success_index(inst, sol);
    rep.compute_time = sol.compute_time;
    rep.status = sol.status;
    return rep;
}

std::vector<MetricReport> pareto_sweep(const Instance& inst, Method method,
                                       const std::vector<double>& lambda_grid,
                                       const SolveLimits& limits,
                                       const ColgenConfig& colgen, int threads) {
    for (double l : lambda_grid)
        if (l < 0.0 || l > 1.0)
            throw std::invalid_argument("pareto_sweep: lambda outside [0, 1]");

    std::vector<MetricReport> rows(lambda_grid.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= lambda_grid.size()) break;
            const Solution sol = solve_with_method(inst, method,
                                                   Weights{lambda_grid[i]},
                                                   limits, colgen);
            rows[i] = make_report(inst, sol, lambda_grid[i]);
        }
    };
    const int n_workers = std::max(
        1, std::min<int>(threads, static_cast<int>(lambda_grid.size())));
    if (n_workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < n_workers; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    return rows;
}

std::string metric_csv_header() {
    return "instance,method,lambda,sr,dq,msi,ct_seconds,status";
}

std::string metric_csv_row(const MetricReport& rep, const std::string& instance,
                           const std::string& method) {
    char buf[256];
    std::snprintf(buf, sizeof(buf), "%s,%s,%g,%.6f,%.6f,%.6f,%.1f,%s",
                  instance.c_str(), method.c_str(), rep.lambda, rep.sr, rep.dq,
                  rep.msi, io::quantize_time(rep.compute_time),
                  status_letter(rep.status));
    return buf;
}

}  // namespace m3rs
