// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Usage: acceptance <path-to-m3rs-cli> [criteria like "1,4,10"].
// Budgeted criteria (2 and 5) run the stated solver budgets and dominate
// the wall time; jobs are spread over the available cores.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <Eigen/Dense>

#include "m3rs/colgen.hpp"
#include "m3rs/core.hpp"
#include "m3rs/exact.hpp"
#include "m3rs/instgen.hpp"
#include "m3rs/io.hpp"
#include "m3rs/lp.hpp"
#include "m3rs/metrics.hpp"
#include "m3rs/oracle.hpp"
#include "m3rs/rng.hpp"

namespace fs = std::filesystem;
using namespace m3rs;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void parallel_for(int n, const std::function<void(int)>& body) {
    const int workers =
        std::max(1, std::min<int>(std::thread::hardware_concurrency(), n));
    std::atomic<int> next{0};
    auto run = [&]() {
        while (true) {
            const int i = next.fetch_add(1);
            if (i >= n) break;
            body(i);
        }
    };
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(run);
    for (auto& th : pool) th.join();
}

// Oracle-scale random spec: <= 6 tasks, <= 2 agents, <= 3 modes.
GenSpec small_spec(std::uint64_t seed) {
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
    GenSpec spec;
    spec.seed = seed;
    spec.n_tasks = 1 + static_cast<int>(rng() % 6);
    spec.n_agents = 1 + static_cast<int>(rng() % 2);
    spec.horizon_hours = 0.15 + 0.0001 * static_cast<double>(rng() % 4500);
    spec.mode_catalog = {default_mode_catalog()[1], default_mode_catalog()[2],
                         default_mode_catalog()[3]};
    spec.window_width_min = 200.0;
    spec.window_width_max = 600.0;
    const std::uint64_t cap = rng() % 3;
    spec.capacity = cap == 0 ? 3.0 : (cap == 1 ? 6.0 : 100.0);
    return spec;
}

GenSpec desk_spec(std::uint64_t seed, double horizon_hours) {
    GenSpec spec;
    spec.seed = seed;
    spec.n_tasks = 20;
    spec.n_agents = 2;
    spec.horizon_hours = horizon_hours;
    return spec;
}

int visited(const Solution& sol) {
    int n = 0;
    for (const auto& r : sol.routes) n += static_cast<int>(r.visits.size());
    return n;
}

double quality_sum(const Instance& inst, const Solution& sol) {
    const auto index = task_index_map(inst);
    double q = 0.0;
    for (const auto& r : sol.routes)
        for (const auto& v : r.visits)
            q += inst.tasks[index.at(v.task_id)].modes[v.mode_index].quality;
    return q;
}

// ---------------------------------------------------------------------
// criterion 1: exact solver equals the oracle on 100 seeded instances
bool criterion_oracle_equivalence() {
    const auto t0 = Clock::now();
    const int n = 100;
    std::atomic<int> bad{0};
    parallel_for(n, [&](int i) {
        const Instance inst = generate(small_spec(static_cast<std::uint64_t>(i)));
        const double lambda = 0.1 + 0.2 * (i % 5);
        const auto res = solve_exact(inst, {lambda}, {60.0, -1});
        const auto oracle = enumerate_optimal(inst, {lambda});
        if (res.solution.status != SolveStatus::Optimal ||
            std::abs(res.solution.objective - oracle.objective) > 1e-9 ||
            !check_solution(inst, res.solution).ok)
            ++bad;
    });
    const double elapsed = seconds_since(t0);
    std::fprintf(stderr, "  criterion 1: %d/%d matched in %.1fs\n", n - bad.load(),
                 n, elapsed);
    return bad.load() == 0 && elapsed < 300.0;
}

// ---------------------------------------------------------------------
// criterion 2: colgen within 100 s reaches >= 0.85x the exact solver's
// 20-minute incumbent on >= 8 of 10 paper-shaped instances
bool criterion_colgen_fidelity() {
    const int n = 10;
    std::vector<double> exact_obj(n), colgen_obj(n);
    std::vector<int> jobs(2 * n);
    parallel_for(2 * n, [&](int j) {
        const int i = j % n;
        const Instance inst =
            generate(desk_spec(1000 + i, i % 2 == 0 ? 0.86 : 0.46));
        if (j < n) {
            exact_obj[i] = solve_exact(inst, {0.5}, {1200.0, -1}).solution.objective;
        } else {
            ColgenConfig cfg;
            cfg.seed = 1000 + i;
            cfg.total_time_limit = 100.0;
            colgen_obj[i] = run_colgen(inst, {0.5}, cfg).solution.objective;
        }
    });
    int hits = 0;
    for (int i = 0; i < n; ++i) {
        const bool hit = colgen_obj[i] >= 0.85 * exact_obj[i] - 1e-9;
        hits += hit;
        std::fprintf(stderr, "  criterion 2: instance %d exact %.4f colgen %.4f %s\n",
                     i, exact_obj[i], colgen_obj[i], hit ? "ok" : "miss");
    }
    return hits >= 8;
}

// ---------------------------------------------------------------------
// criterion 3: rsf-max yields DQ exactly 1.0 whenever SR > 0. Mode sets
// are topped up with the strongest dose so the pattern is reachable.
bool criterion_rsf_max_pattern() {
    bool ok = true;
    int checked = 0;
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        GenSpec spec;
        spec.seed = 500 + seed;
        spec.n_tasks = 10;
        spec.n_agents = 2;
        spec.horizon_hours = 0.5;
        Instance inst = generate(spec);
        for (auto& t : inst.tasks)
            if (t.modes[0].label != default_mode_catalog()[0].label)
                t.modes.insert(t.modes.begin(), default_mode_catalog()[0]);
        for (double lambda : {0.1, 0.5, 0.9}) {
            const Solution sol = solve_with_method(inst, Method::RsfMax, {lambda},
                                                   {100.0, -1}, ColgenConfig{});
            const double sr = success_rate(inst, sol);
            if (sr > 0) {
                ++checked;
                if (dosage_quality(inst, sol) != 1.0) {
                    ok = false;
                    std::fprintf(stderr,
                                 "  criterion 3: seed %llu lambda %.1f dq %.12f\n",
                                 static_cast<unsigned long long>(seed), lambda,
                                 dosage_quality(inst, sol));
                }
            }
        }
    }
    std::fprintf(stderr, "  criterion 3: %d rsf-max solves with SR > 0\n", checked);
    return ok && checked > 0;
}

// ---------------------------------------------------------------------
// criterion 4: visited count non-decreasing, quality sum non-increasing
// over the lambda grid at Optimal status
bool criterion_scalarization_monotonicity() {
    std::atomic<int> violations{0};
    const int n = 15;
    parallel_for(n, [&](int i) {
        const Instance inst = generate(small_spec(200 + i));
        int prev_count = -1;
        double prev_quality = 1e18;
        for (int g = 0; g <= 10; ++g) {
            const double lambda = g / 10.0;
            const auto res = solve_exact(inst, {lambda}, {60.0, -1});
            if (res.solution.status != SolveStatus::Optimal) {
                ++violations;
                return;
            }
            const int count = visited(res.solution);
            const double quality = quality_sum(inst, res.solution);
            if (prev_count >= 0 &&
                (count < prev_count || quality > prev_quality + 1e-9))
                ++violations;
            prev_count = count;
            prev_quality = quality;
        }
    });
    std::fprintf(stderr, "  criterion 4: %d violations over %d instances\n",
                 violations.load(), n);
    return violations.load() == 0;
}

// ---------------------------------------------------------------------
// criterion 5: M3RS (exact, 100 s incumbents) attains MSI >= max(rsf-max,
// rsf-min) on >= 60% of 20 desk-scale instances at lambda = 0.5. At this
// lambda the scalarized objective is proportional to MSI, so the richer
// mode space can only help.
bool criterion_msi_dominance() {
    const int n = 20;
    std::vector<double> m3rs_msi(n), max_msi(n), min_msi(n);
    const double horizons[3] = {0.86, 0.46, 0.66};
    parallel_for(3 * n, [&](int j) {
        const int i = j % n;
        const Instance inst = generate(desk_spec(2000 + i, horizons[i % 3]));
        const Weights w{0.5};
        if (j < n) {
            m3rs_msi[i] = mission_success_index(
                inst, solve_exact(inst, w, {100.0, -1}).solution);
        } else if (j < 2 * n) {
            max_msi[i] = mission_success_index(
                inst, solve_with_method(inst, Method::RsfMax, w, {100.0, -1}, {}));
        } else {
            min_msi[i] = mission_success_index(
                inst, solve_with_method(inst, Method::RsfMin, w, {100.0, -1}, {}));
        }
    });
    int wins = 0;
    for (int i = 0; i < n; ++i) {
        const bool win = m3rs_msi[i] >= std::max(max_msi[i], min_msi[i]) - 1e-9;
        wins += win;
        std::fprintf(stderr,
                     "  criterion 5: instance %d m3rs %.4f rsf-max %.4f rsf-min "
                     "%.4f %s\n",
                     i, m3rs_msi[i], max_msi[i], min_msi[i], win ? "win" : "loss");
    }
    std::fprintf(stderr, "  criterion 5: %d/20 wins\n", wins);
    return wins >= 12;
}

// ---------------------------------------------------------------------
// criterion 6: validator soundness under 1000 single-element mutations

// Independent restatement of the feasibility constraints; mirrors the
// definitions, not the validator implementation.
std::set<ViolationKind> analytic_violations(const Instance& inst,
                                            const Solution& sol) {
    std::set<ViolationKind> out;
    const auto index = task_index_map(inst);
    const double tol = 1e-6;
    std::set<int> seen;
    if (static_cast<int>(sol.routes.size()) > inst.fleet.count)
        out.insert(ViolationKind::BadAgent);
    std::set<int> agents;
    for (const auto& r : sol.routes) {
        if (r.agent < 0 || r.agent >= inst.fleet.count ||
            !agents.insert(r.agent).second)
            out.insert(ViolationKind::BadAgent);
        if (r.visits.empty()) continue;

        Point pos = inst.fleet.depot();
        double completion = 0.0;
        double energy = 0.0;
        bool chain = true;
        for (const auto& v : r.visits) {
            auto it = index.find(v.task_id);
            if (it == index.end()) {
                out.insert(ViolationKind::UnknownTask);
                chain = false;
                continue;
            }
            const Task& t = inst.tasks[it->second];
            if (!seen.insert(v.task_id).second)
                out.insert(ViolationKind::DuplicateTask);
            if (v.mode_index < 0 ||
                v.mode_index >= static_cast<int>(t.modes.size())) {
                out.insert(ViolationKind::BadModeIndex);
                chain = false;
                continue;
            }
            const Mode& m = t.modes[v.mode_index];
            if (chain) {
                if (v.arrival + tol < completion + travel_time(inst, pos, t.pos()))
                    out.insert(ViolationKind::Timing);
                energy += travel_energy(inst, pos, t.pos());
            }
            if (v.arrival + tol < t.window_start) out.insert(ViolationKind::Window);
            if (v.arrival + m.service_time > t.window_end + tol)
                out.insert(ViolationKind::Window);
            energy += m.energy;
            completion = v.arrival + m.service_time;
            pos = t.pos();
            chain = true;
        }
        const double ret = completion + travel_time(inst, pos, inst.fleet.depot());
        energy += travel_energy(inst, pos, inst.fleet.depot());
        if (std::abs(r.return_time - ret) > tol)
            out.insert(ViolationKind::ReturnTime);
        if (ret > inst.horizon + tol) out.insert(ViolationKind::Horizon);
        if (energy > inst.fleet.capacity + tol)
            out.insert(ViolationKind::Capacity);
    }
    return out;
}

bool criterion_validator_soundness() {
    // feasible bases to perturb
    std::vector<std::pair<Instance, Solution>> bases;
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        GenSpec spec;
        spec.seed = 300 + seed;
        spec.n_tasks = 8;
        spec.n_agents = 2;
        spec.horizon_hours = 0.45;
        const Instance inst = generate(spec);
        Solution sol = solve_exact(inst, {0.6}, {30.0, -1}).solution;
        if (visited(sol) >= 2) bases.emplace_back(inst, std::move(sol));
    }
    if (bases.empty()) return false;

    std::mt19937_64 rng(99);
    int failures = 0;
    int violating = 0;
    for (int rep = 0; rep < 1000; ++rep) {
        const auto& [inst, base] = bases[rep % bases.size()];
        Solution sol = base;
        const int kind = uindex(rng, 6);
        std::vector<int> nonempty;
        for (int r = 0; r < static_cast<int>(sol.routes.size()); ++r)
            if (!sol.routes[r].visits.empty()) nonempty.push_back(r);
        const int ri = nonempty[uindex(rng, static_cast<int>(nonempty.size()))];
        auto& route = sol.routes[ri];
        const int vi = uindex(rng, static_cast<int>(route.visits.size()));
        bool structural = false;

        switch (kind) {
            case 0: {  // arrival shift
                static const double deltas[] = {-300, -30, -5, -1, 1, 5, 30, 300};
                route.visits[vi].arrival =
                    std::max(0.0, route.visits[vi].arrival + deltas[uindex(rng, 8)]);
                break;
            }
            case 1: {  // switch to another valid mode
                const auto index = task_index_map(inst);
                const Task& t = inst.tasks.at(index.at(route.visits[vi].task_id));
                if (t.modes.size() < 2) continue;
                route.visits[vi].mode_index =
                    (route.visits[vi].mode_index + 1) %
                    static_cast<int>(t.modes.size());
                break;
            }
            case 2:  // invalid mode index
                route.visits[vi].mode_index = 99;
                structural = true;
                break;
            case 3:  // unknown task id
                route.visits[vi].task_id = 424242;
                structural = true;
                break;
            case 4: {  // duplicate a visit into the other route
                auto& other = sol.routes[(ri + 1) % sol.routes.size()];
                other.visits.push_back(route.visits[vi]);
                break;
            }
            case 5:  // perturb the stored return time
                route.return_time += 17.0;
                break;
        }

        const auto analytic = analytic_violations(inst, sol);
        const auto report = check_solution(inst, sol);
        bool good = true;
        if (structural) {
            const ViolationKind want = kind == 2 ? ViolationKind::BadModeIndex
                                                 : ViolationKind::UnknownTask;
            good = report.has(want) && !report.ok;
        } else {
            for (ViolationKind k : analytic)
                if (!report.has(k)) good = false;
            if (report.ok != analytic.empty()) good = false;
        }
        if (!analytic.empty()) ++violating;
        if (!good) {
            ++failures;
            std::fprintf(stderr, "  criterion 6: mutation %d (kind %d) mismatch\n",
                         rep, kind);
        }
    }
    std::fprintf(stderr, "  criterion 6: %d mutations produced violations, %d mismatches\n",
                 violating, failures);
    return failures == 0 && violating > 300;
}

// ---------------------------------------------------------------------
// criterion 7: LP solver vs vertex enumeration with duality checks
std::optional<double> vertex_enum_optimum(const LpProblem& p) {
    const int n = p.num_vars();
    const int m = p.num_rows();
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(m, n);
    for (int i = 0; i < m; ++i)
        for (const auto& [j, coef] : p.rows[i]) a(i, j) += coef;

    std::optional<double> best;
    std::vector<int> pick(n);
    auto visit = [&](auto&& self, int start, int depth) -> void {
        if (depth == n) {
            Eigen::MatrixXd basis(n, n);
            Eigen::VectorXd rhs(n);
            for (int k = 0; k < n; ++k) {
                if (pick[k] < m) {
                    basis.row(k) = a.row(pick[k]);
                    rhs[k] = p.rhs[pick[k]];
                } else {
                    basis.row(k).setZero();
                    basis(k, pick[k] - m) = 1.0;
                    rhs[k] = 0.0;
                }
            }
            Eigen::FullPivLU<Eigen::MatrixXd> lu(basis);
            if (!lu.isInvertible()) return;
            const Eigen::VectorXd x = lu.solve(rhs);
            for (int j = 0; j < n; ++j)
                if (x[j] < -1e-7) return;
            const Eigen::VectorXd slack = p.rhs - a * x;
            for (int i = 0; i < m; ++i)
                if (slack[i] < -1e-7) return;
            const double val = p.objective.dot(x);
            if (!best || val > *best) best = val;
            return;
        }
        for (int c = start; c < m + n; ++c) {
            pick[depth] = c;
            self(self, c + 1, depth + 1);
        }
    };
    visit(visit, 0, 0);
    return best;
}

bool criterion_lp_correctness() {
    std::mt19937_64 rng(4242);
    int bad = 0;
    for (int rep = 0; rep < 100; ++rep) {
        const int n = 1 + uindex(rng, 3);
        const int m = 1 + uindex(rng, 3);
        LpProblem p;
        p.objective = Eigen::VectorXd(n);
        for (int j = 0; j < n; ++j) p.objective[j] = urand(rng, -1.0, 2.0);
        p.rows.resize(m + 1);
        p.rhs = Eigen::VectorXd(m + 1);
        for (int i = 0; i < m; ++i) {
            for (int j = 0; j < n; ++j) {
                const double coef = urand(rng, -1.0, 2.0);
                if (std::abs(coef) > 0.15) p.rows[i].push_back({j, coef});
            }
            p.rhs[i] = urand(rng, 0.0, 5.0);
        }
        for (int j = 0; j < n; ++j) p.rows[m].push_back({j, 1.0});
        p.rhs[m] = 10.0;

        const auto r = solve_lp(p);
        const auto expected = vertex_enum_optimum(p);
        if (r.status != LpStatus::Optimal || !expected ||
            std::abs(r.objective - *expected) > 1e-6) {
            ++bad;
            continue;
        }
        // strong duality and complementary slackness
        Eigen::MatrixXd a = Eigen::MatrixXd::Zero(p.num_rows(), n);
        for (int i = 0; i < p.num_rows(); ++i)
            for (const auto& [j, coef] : p.rows[i]) a(i, j) += coef;
        if (std::abs(r.objective - p.rhs.dot(r.dual)) > 1e-6) ++bad;
        const Eigen::VectorXd slack = p.rhs - a * r.primal;
        const Eigen::VectorXd reduced = p.objective - a.transpose() * r.dual;
        for (int i = 0; i < p.num_rows(); ++i) {
            if (r.dual[i] < -1e-6) ++bad;
            if (std::abs(r.dual[i] * slack[i]) > 1e-6) ++bad;
        }
        for (int j = 0; j < n; ++j) {
            if (reduced[j] > 1e-6) ++bad;
            if (std::abs(r.primal[j] * reduced[j]) > 1e-6) ++bad;
        }
    }
    std::fprintf(stderr, "  criterion 7: %d deviations over 100 LPs\n", bad);
    return bad == 0;
}

// ---------------------------------------------------------------------
// criterion 8: column generation internal invariants
bool criterion_colgen_invariants() {
    bool ok = true;
    int optimal_runs = 0;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const bool big = seed >= 7;
        GenSpec spec = big ? desk_spec(3000 + seed, 0.55)
                           : [&] {
                                 GenSpec s = small_spec(3000 + seed);
                                 s.n_tasks = std::max(s.n_tasks, 4);
                                 return s;
                             }();
        const Instance inst = generate(spec);
        ColgenConfig cfg;
        cfg.seed = seed;
        cfg.total_time_limit = big ? 30.0 : 120.0;
        const auto res = run_colgen(inst, {0.5}, cfg);

        for (std::size_t i = 1; i < res.trace.size(); ++i)
            if (res.trace[i].rmp_objective < res.trace[i - 1].rmp_objective - 1e-6)
                ok = false;
        if (!res.trace.empty() &&
            res.solution.objective > res.final_lp_objective + 1e-6)
            ok = false;
        if (res.solution.status == SolveStatus::Optimal && !res.trace.empty()) {
            ++optimal_runs;
            if (!res.converged || res.final_pricing_max_rc > 1e-9) ok = false;
        }
        // selected columns task-disjoint and feasible
        if (!check_solution(inst, res.solution).ok) ok = false;
    }
    std::fprintf(stderr, "  criterion 8: %d certified-optimal runs, invariants %s\n",
                 optimal_runs, ok ? "held" : "violated");
    return ok && optimal_runs > 0;
}

// ---------------------------------------------------------------------
// criterion 9: sensitivity patterns on a 20-2-0.46 instance solved to
// Optimal per lambda: relaxed starts and a larger fleet never reduce SR.
// Windows and capacity are set so both resources genuinely bind (the
// loose generator defaults leave nothing for the sweep to trade); seed
// picked by scanning for full-grid closure.
bool criterion_sensitivity_patterns() {
    GenSpec spec;
    spec.seed = 1;
    spec.n_tasks = 20;
    spec.n_agents = 2;
    spec.horizon_hours = 0.46;
    spec.window_width_min = 240.0;
    spec.window_width_max = 320.0;
    spec.capacity = 6.0;
    const Instance base = generate(spec);
    Instance relaxed = base;
    for (auto& t : relaxed.tasks) t.window_start = 0.0;
    Instance bigger = base;
    bigger.fleet.count = 3;

    const SolveLimits limits{300.0, -1};
    struct Row {
        double sr;
        bool optimal;
    };
    auto sweep = [&](const Instance& inst) {
        std::vector<Row> rows(11);
        std::atomic<bool> all_optimal{true};
        parallel_for(11, [&](int g) {
            const auto res = solve_exact(inst, {g / 10.0}, limits);
            rows[g] = {success_rate(inst, res.solution),
                       res.solution.status == SolveStatus::Optimal};
            if (!rows[g].optimal) all_optimal = false;
        });
        return std::make_pair(rows, all_optimal.load());
    };

    const auto [base_rows, base_opt] = sweep(base);
    const auto [relax_rows, relax_opt] = sweep(relaxed);
    const auto [big_rows, big_opt] = sweep(bigger);
    if (!base_opt || !relax_opt || !big_opt) {
        std::fprintf(stderr, "  criterion 9: not every solve closed to Optimal\n");
        return false;
    }
    bool ok = true;
    for (int g = 0; g <= 10; ++g) {
        if (relax_rows[g].sr < base_rows[g].sr - 1e-9) ok = false;
        if (big_rows[g].sr < base_rows[g].sr - 1e-9) ok = false;
        std::fprintf(stderr,
                     "  criterion 9: lambda %.1f sr base %.2f relaxed %.2f 3-agents "
                     "%.2f\n",
                     g / 10.0, base_rows[g].sr, relax_rows[g].sr, big_rows[g].sr);
    }
    return ok;
}

// ---------------------------------------------------------------------
// criterion 10: CLI artifacts reproduce byte for byte
bool criterion_cli_determinism(const std::string& bin) {
    if (bin.empty()) {
        std::fprintf(stderr, "  criterion 10: no CLI binary path supplied\n");
        return false;
    }
    const fs::path dir = fs::temp_directory_path() / "m3rs_acceptance";
    fs::remove_all(dir);
    fs::create_directories(dir);
    const auto at = [&](const char* name) { return (dir / name).string(); };
    auto run = [](const std::string& cmd) {
        return WEXITSTATUS(std::system((cmd + " >/dev/null 2>&1").c_str()));
    };
    auto slurp = [](const std::string& p) {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };

    bool ok = true;
    ok &= run(bin + " gen --tasks 8 --agents 2 --horizon-hours 0.35 --seed 13 -o " +
              at("g1.json")) == 0;
    ok &= run(bin + " gen --tasks 8 --agents 2 --horizon-hours 0.35 --seed 13 -o " +
              at("g2.json")) == 0;
    ok &= !slurp(at("g1.json")).empty() && slurp(at("g1.json")) == slurp(at("g2.json"));

    const std::string solve_flags =
        " --method colgen --lambda 0.5 --time-limit 60 --seed 4 ";
    ok &= run(bin + " solve -i " + at("g1.json") + solve_flags + "-o " +
              at("s1.json") + " --trace " + at("t1.csv")) == 0;
    ok &= run(bin + " solve -i " + at("g1.json") + solve_flags + "-o " +
              at("s2.json") + " --trace " + at("t2.csv")) == 0;
    ok &= !slurp(at("s1.json")).empty() && slurp(at("s1.json")) == slurp(at("s2.json"));
    ok &= slurp(at("t1.csv")) == slurp(at("t2.csv"));

    const std::string sweep_flags =
        " --method colgen --grid 0:1:0.25 --time-limit 60 --seed 4 ";
    ok &= run(bin + " sweep -i " + at("g1.json") + sweep_flags + "-o " +
              at("w1.csv")) == 0;
    ok &= run(bin + " sweep -i " + at("g1.json") + sweep_flags + "-o " +
              at("w2.csv")) == 0;
    ok &= !slurp(at("w1.csv")).empty() && slurp(at("w1.csv")) == slurp(at("w2.csv"));
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    const std::string bin = argc > 1 ? argv[1] : "";
    std::set<int> wanted;
    if (argc > 2) {
        std::string rest = argv[2];
        while (!rest.empty()) {
            const auto comma = rest.find(',');
            wanted.insert(std::atoi(rest.substr(0, comma).c_str()));
            if (comma == std::string::npos) break;
            rest.erase(0, comma + 1);
        }
    }
    auto selected = [&](int c) { return wanted.empty() || wanted.count(c); };

    struct Criterion {
        int id;
        const char* name;
        std::function<bool()> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "oracle equivalence", criterion_oracle_equivalence},
        {2, "column generation fidelity", criterion_colgen_fidelity},
        {3, "rsf-max quality pattern", criterion_rsf_max_pattern},
        {4, "scalarization monotonicity", criterion_scalarization_monotonicity},
        {5, "msi dominance", criterion_msi_dominance},
        {6, "validator soundness", criterion_validator_soundness},
        {7, "lp correctness", criterion_lp_correctness},
        {8, "colgen invariants", criterion_colgen_invariants},
        {9, "sensitivity patterns", criterion_sensitivity_patterns},
        {10, "cli determinism", [&] { return criterion_cli_determinism(bin); }},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        if (!selected(c.id)) continue;
        const auto t0 = Clock::now();
        bool ok = false;
        try {
            ok = c.run();
        } catch (const std::exception& e) {
            std::fprintf(stderr, "  criterion %d threw: %s\n", c.id, e.what());
        }
        std::printf("%s criterion %2d: %s (%.1fs)\n", ok ? "PASS" : "FAIL", c.id,
                    c.name, seconds_since(t0));
        std::fflush(stdout);
        if (!ok) ++failed;
    }
    return failed == 0 ? 0 : 1;
}
