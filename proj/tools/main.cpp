// Command-line front end: instance generation, solving, lambda sweeps,
// and solution checking over stable JSON/CSV formats.
// Exit codes: 0 ok, 1 infeasible/violations, 2 usage or parse errors.

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "m3rs/colgen.hpp"
#include "m3rs/core.hpp"
#include "m3rs/exact.hpp"
#include "m3rs/instgen.hpp"
#include "m3rs/io.hpp"
#include "m3rs/metrics.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

std::vector<double> parse_grid(const std::string& spec) {
    std::vector<double> grid;
    const auto colon = spec.find(':');
    if (colon != std::string::npos) {
        const auto colon2 = spec.find(':', colon + 1);
        if (colon2 == std::string::npos)
            throw std::invalid_argument("grid must be start:end:step or a comma list");
        const double lo = std::stod(spec.substr(0, colon));
        const double hi = std::stod(spec.substr(colon + 1, colon2 - colon - 1));
        const double step = std::stod(spec.substr(colon2 + 1));
        if (step <= 0 || hi < lo)
            throw std::invalid_argument("grid must satisfy start <= end, step > 0");
        const int n = static_cast<int>(std::floor((hi - lo) / step + 1e-9)) + 1;
        for (int i = 0; i < n; ++i)
            grid.push_back(std::min(hi, lo + i * step));
    } else {
        std::string rest = spec;
        while (!rest.empty()) {
            const auto comma = rest.find(',');
            grid.push_back(std::stod(rest.substr(0, comma)));
            if (comma == std::string::npos) break;
            rest.erase(0, comma + 1);
        }
    }
    for (double& l : grid) l = std::clamp(l, 0.0, 1.0);
    std::sort(grid.begin(), grid.end());
    if (grid.empty()) throw std::invalid_argument("empty lambda grid");
    return grid;
}

int sweep_workers(std::size_t rows) {
    int cap = static_cast<int>(std::thread::hardware_concurrency());
    if (cap < 1) cap = 1;
    if (const char* env = std::getenv("M3RS_THREADS")) {
        const int v = std::atoi(env);
        if (v >= 1) cap = std::min(cap, v);
    }
    return std::max(1, std::min<int>(cap, static_cast<int>(rows)));
}

std::string default_solution_path(std::string input) {
    const std::string suffix = ".json";
    if (input.size() > suffix.size() &&
        input.compare(input.size() - suffix.size(), suffix.size(), suffix) == 0)
        input.resize(input.size() - suffix.size());
    return input + ".sol.json";
}

m3rs::Instance load_valid_instance(const std::string& path) {
    m3rs::Instance inst = m3rs::io::read_instance(path);
    const auto problems = m3rs::validate_instance(inst);
    if (!problems.empty()) {
        std::cerr << path << " is not a valid instance:\n";
        for (const auto& p : problems) std::cerr << "  " << p << "\n";
        throw std::domain_error("instance validation failed");
    }
    return inst;
}

struct GenArgs {
    int tasks = 20;
    int agents = 2;
    double horizon_hours = 0.86;
    std::uint64_t seed = 0;
    double area = 30.0;
    double window_min = 300.0;
    double window_max = 900.0;
    double speed = 0.5;
    double capacity = 100.0;
    double travel_energy_rate = 0.02;
    std::string output;
};

int run_gen(const GenArgs& a) {
    m3rs::GenSpec spec;
    spec.n_tasks = a.tasks;
    spec.n_agents = a.agents;
    spec.horizon_hours = a.horizon_hours;
    spec.seed = a.seed;
    spec.area_side = a.area;
    spec.window_width_min = a.window_min;
    spec.window_width_max = a.window_max;
    spec.speed = a.speed;
    spec.capacity = a.capacity;
    spec.travel_energy_rate = a.travel_energy_rate;
    const m3rs::Instance inst = m3rs::generate(spec);
    m3rs::io::write_instance(inst, a.output);
    std::cout << "wrote " << a.output << " (" << inst.name << ", "
              << inst.tasks.size() << " tasks)\n";
    return kExitOk;
}

struct SolveArgs {
    std::string input;
    std::string method = "exact";
    double lambda = 0.5;
    double time_limit = 1200.0;
    std::string output;
    std::string trace;
    m3rs::ColgenConfig colgen;
};

int run_solve(const SolveArgs& a) {
    const m3rs::Instance inst = load_valid_instance(a.input);
    const auto method = m3rs::method_from_name(a.method);
    if (!method) throw std::invalid_argument("unknown method " + a.method);

    const m3rs::Weights w{a.lambda};
    const m3rs::SolveLimits limits{a.time_limit, -1};

    m3rs::Solution sol;
    if (*method == m3rs::Method::Colgen) {
        m3rs::ColgenConfig cfg = a.colgen;
        cfg.total_time_limit = a.time_limit;
        const m3rs::ColgenResult res = m3rs::run_colgen(inst, w, cfg);
        sol = res.solution;
        if (!a.trace.empty()) {
            std::ofstream out(a.trace);
            if (!out) throw std::runtime_error("cannot write " + a.trace);
            out << "iteration,pool_size,rmp_objective,best_reduced_cost\n";
            char buf[128];
            for (const auto& row : res.trace) {
                std::snprintf(buf, sizeof(buf), "%d,%zu,%.9g,%.9g\n", row.iteration,
                              row.pool_size, row.rmp_objective,
                              row.best_reduced_cost);
                out << buf;
            }
        }
    } else {
        if (!a.trace.empty())
            throw std::invalid_argument("--trace is only available with colgen");
        sol = m3rs::solve_with_method(inst, *method, w, limits, a.colgen);
    }

    const std::string out_path =
        a.output.empty() ? default_solution_path(a.input) : a.output;
    m3rs::io::write_solution(sol, inst, {inst.name, a.method, a.lambda}, out_path);

    const auto rep = m3rs::make_report(inst, sol, a.lambda);
    std::cout << m3rs::metric_csv_header() << "\n"
              << m3rs::metric_csv_row(rep, inst.name, a.method) << "\n";
    return kExitOk;
}

struct SweepArgs {
    std::string input;
    std::string method = "exact";
    std::string grid = "0:1:0.1";
    double time_limit = 100.0;
    bool relax_start = false;
    int agents_override = 0;
    std::string output;
    m3rs::ColgenConfig colgen;
};

int run_sweep(const SweepArgs& a) {
    m3rs::Instance inst = load_valid_instance(a.input);
    const auto method = m3rs::method_from_name(a.method);
    if (!method) throw std::invalid_argument("unknown method " + a.method);
    if (a.relax_start)
        for (auto& t : inst.tasks) t.window_start = 0.0;
    if (a.agents_override > 0) inst.fleet.count = a.agents_override;

    const std::vector<double> grid = parse_grid(a.grid);
    const m3rs::SolveLimits limits{a.time_limit, -1};
    const auto rows = m3rs::pareto_sweep(inst, *method, grid, limits, a.colgen,
                                         sweep_workers(grid.size()));

    std::ofstream out(a.output);
    if (!out) throw std::runtime_error("cannot write " + a.output);
    out << m3rs::metric_csv_header() << "\n";
    for (const auto& row : rows)
        out << m3rs::metric_csv_row(row, inst.name, a.method) << "\n";
    std::cout << "wrote " << a.output << " (" << rows.size() << " rows)\n";
    return kExitOk;
}

struct CheckArgs {
    std::string instance;
    std::string solution;
};

int run_check(const CheckArgs& a) {
    const m3rs::Instance inst = load_valid_instance(a.instance);
    m3rs::io::SolutionMeta meta;
    const m3rs::Solution sol = m3rs::io::read_solution(a.solution, inst, &meta);

    const auto report = m3rs::check_solution(inst, sol);
    bool ok = report.ok;
    for (const auto& v : report.violations)
        std::cout << m3rs::violation_name(v.kind) << ": " << v.detail << "\n";

    const double recomputed =
        m3rs::objective_value(inst, sol, m3rs::Weights{meta.lambda});
    if (std::abs(recomputed - sol.objective) > 1e-6) {
        ok = false;
        std::cout << "objective_mismatch: stored " << sol.objective
                  << " recomputed " << recomputed << "\n";
    }
    if (ok) {
        std::cout << "ok\n";
        return kExitOk;
    }
    return kExitViolation;
}

void add_colgen_flags(CLI::App* cmd, m3rs::ColgenConfig& cfg) {
    cmd->add_option("--subset-size", cfg.subset_size, "Tasks sampled per pricing round")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--max-iterations", cfg.max_iterations, "Column generation iteration cap")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--pool-cap", cfg.pool_cap, "Columns accepted per pricing round")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--pricing-time-limit", cfg.pricing_time_limit,
                    "Seconds per pricing round")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--rmp-time-limit", cfg.rmp_time_limit,
                    "Seconds per restricted master solve")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--seed", cfg.seed, "Subset sampling seed");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Multi-robot multi-mode routing and scheduling solver suite"};
    app.require_subcommand(1);

    GenArgs gen;
    CLI::App* cmd_gen = app.add_subcommand("gen", "Generate a synthetic instance");
    cmd_gen->add_option("--tasks", gen.tasks, "Number of tasks")
        ->required()
        ->check(CLI::PositiveNumber);
    cmd_gen->add_option("--agents", gen.agents, "Number of agents")
        ->required()
        ->check(CLI::PositiveNumber);
    cmd_gen->add_option("--horizon-hours", gen.horizon_hours, "Mission time, hours")
        ->required()
        ->check(CLI::PositiveNumber);
    cmd_gen->add_option("--seed", gen.seed, "Generator seed (default 0)");
    cmd_gen->add_option("--area", gen.area, "Square side, meters");
    cmd_gen->add_option("--window-min", gen.window_min, "Min window width, seconds");
    cmd_gen->add_option("--window-max", gen.window_max, "Max window width, seconds");
    cmd_gen->add_option("--speed", gen.speed, "Agent speed, m/s");
    cmd_gen->add_option("--capacity", gen.capacity, "Agent energy budget");
    cmd_gen->add_option("--travel-energy-rate", gen.travel_energy_rate,
                        "Energy per meter");
    cmd_gen->add_option("-o,--output", gen.output, "Instance file")->required();

    SolveArgs solve;
    CLI::App* cmd_solve = app.add_subcommand("solve", "Solve one instance");
    cmd_solve->add_option("-i,--instance", solve.input, "Instance file")->required();
    cmd_solve->add_option("--method", solve.method, "Solver")
        ->required()
        ->check(CLI::IsMember({"exact", "colgen", "rsf-max", "rsf-min"}));
    cmd_solve->add_option("--lambda", solve.lambda, "Quality factor in [0, 1]")
        ->check(CLI::Range(0.0, 1.0));
    cmd_solve->add_option("--time-limit", solve.time_limit, "Seconds")
        ->check(CLI::PositiveNumber);
    cmd_solve->add_option("-o,--output", solve.output,
                          "Solution file (default: <instance>.sol.json)");
    cmd_solve->add_option("--trace", solve.trace,
                          "Column generation iteration trace CSV");
    add_colgen_flags(cmd_solve, solve.colgen);

    SweepArgs sweep;
    CLI::App* cmd_sweep = app.add_subcommand("sweep", "Metric rows over a lambda grid");
    cmd_sweep->add_option("-i,--instance", sweep.input, "Instance file")->required();
    cmd_sweep->add_option("--method", sweep.method, "Solver")
        ->check(CLI::IsMember({"exact", "colgen", "rsf-max", "rsf-min"}));
    cmd_sweep->add_option("--grid", sweep.grid, "start:end:step or comma list");
    cmd_sweep->add_option("--time-limit", sweep.time_limit, "Seconds per solve")
        ->check(CLI::PositiveNumber);
    cmd_sweep->add_flag("--relax-start", sweep.relax_start,
                        "Set every window start to 0");
    cmd_sweep->add_option("--agents-override", sweep.agents_override,
                          "Replace the fleet size")
        ->check(CLI::PositiveNumber);
    cmd_sweep->add_option("-o,--output", sweep.output, "CSV file")->required();
    add_colgen_flags(cmd_sweep, sweep.colgen);

    CheckArgs check;
    CLI::App* cmd_check = app.add_subcommand("check", "Validate a solution file");
    cmd_check->add_option("-i,--instance", check.instance, "Instance file")->required();
    cmd_check->add_option("-s,--solution", check.solution, "Solution file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (cmd_gen->parsed()) return run_gen(gen);
        if (cmd_solve->parsed()) return run_solve(solve);
        if (cmd_sweep->parsed()) return run_sweep(sweep);
        if (cmd_check->parsed()) return run_check(check);
    } catch (const m3rs::InfeasibleSpec& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitViolation;
    } catch (const std::domain_error&) {
        return kExitViolation;  // validation details already printed
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
