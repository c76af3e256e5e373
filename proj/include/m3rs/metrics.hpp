#pragma once

#include <optional>
#include <string>
#include <vector>

#include "m3rs/colgen.hpp"
#include "m3rs/exact.hpp"
#include "m3rs/types.hpp"

namespace m3rs {

struct MetricReport {
    double lambda = 0.0;
    double sr = 0.0;
    double dq = 0.0;
    double msi = 0.0;
    double compute_time = 0.0;
    SolveStatus status = SolveStatus::Feasible;
};

/// visited tasks / |T|.
double success_rate(const Instance& inst, const Solution& sol);

/// Mean visit quality; 0 for an empty solution.
double dosage_quality(const Instance& inst, const Solution& sol);

/// (visited + sum quality) / (|T| * (1 + p_max)), p_max over the instance.
double mission_success_index(const Instance& inst, const Solution& sol);

/// Highest mode quality anywhere in the instance.
double max_instance_quality(const Instance& inst);

/// Mean positive overrun of window ends over an execution log of
/// (task id, actual completion seconds); 0 for an empty log.
double avg_lateness(const Instance& inst,
                    const std::vector<std::pair<int, double>>& executed_log);

enum class Method { Exact, Colgen, RsfMax, RsfMin };

const char* method_name(Method m);
std::optional<Method> method_from_name(const std::string& name);

/// One solve with the chosen method. The RS-F baselines run the exact
/// search on the mode-restricted instance; lambda still steers which tasks
/// get covered.
Solution solve_with_method(const Instance& inst, Method method, Weights w,
                           const SolveLimits& limits, const ColgenConfig& colgen);

MetricReport make_report(const Instance& inst, const Solution& sol, double lambda);

/// One solve and report per lambda, rows ordered by lambda. Solver
/// failures surface as row statuses; the sweep itself never aborts.
/// threads > 1 computes rows concurrently.
std::vector<MetricReport> pareto_sweep(const Instance& inst, Method method,
                                       const std::vector<double>& lambda_grid,
                                       const SolveLimits& limits,
                                       const ColgenConfig& colgen, int threads = 1);

std::string metric_csv_header();
std::string metric_csv_row(const MetricReport& rep, const std::string& instance,
                           const std::string& method);

}  // namespace m3rs
