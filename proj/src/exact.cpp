#include "m3rs/exact.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <set>
#include <stdexcept>

#include "m3rs/core.hpp"

namespace m3rs {

namespace {

using Clock = std::chrono::steady_clock;

constexpr double kValueEps = 1e-12;
constexpr double kRcTol = 1e-9;  // strictly positive reduced cost threshold

struct ModeCand {
    int mode_index;
    double service;
    double energy;
    double prize;  // lambda + (1-lambda) q - gamma
};

// One task of the search, with only the modes that can ever be executed
// (window-feasible and feasible as a singleton route).
struct TaskCand {
    int task_index;
    double a, b;
    std::vector<ModeCand> modes;
    double best_prize;
    double min_leg_in = 0.0;     // cheapest possible incoming travel time
    double min_energy_in = 0.0;  // cheapest possible incoming travel energy
};

// Convex-hull increment of one task's (time cost, prize) frontier, the
// unit of the fractional multiple-choice knapsack bound.
struct BoundSeg {
    int ci;
    double dcost;
    double dprize;
};

using Seq = std::vector<SeqItem>;

int compare_seq(const Seq& x, const Seq& y) {
    const std::size_t n = std::min(x.size(), y.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i].task != y[i].task) return x[i].task < y[i].task ? -1 : 1;
        if (x[i].mode != y[i].mode) return x[i].mode < y[i].mode ? -1 : 1;
    }
    if (x.size() != y.size()) return x.size() < y.size() ? -1 : 1;
    return 0;
}

int compare_routes(const std::vector<Seq>& x, const std::vector<Seq>& y) {
    const std::size_t n = std::min(x.size(), y.size());
    for (std::size_t i = 0; i < n; ++i)
        if (int c = compare_seq(x[i], y[i])) return c;
    if (x.size() != y.size()) return x.size() < y.size() ? -1 : 1;
    return 0;
}

// Sequential route construction: agent k's route is fully built before
// agent k+1 starts. Identical agents are canonicalized two ways: an agent
// may start only if the previous route is non-empty, and first tasks
// strictly increase across routes. The per-extension window, horizon and
// capacity filters are exact thanks to the triangle inequality: appending
// a task directly gives its earliest possible arrival and cheapest energy,
// so a task failing the direct test can never appear in any extension.
class Engine {
public:
    Engine(const Instance& inst, Weights w, const std::vector<int>& task_indices,
           const std::vector<double>* gamma, int num_agents,
           const SolveLimits& limits)
        : inst_(inst), num_agents_(num_agents) {
        depot_ = inst.fleet.depot();
        horizon_ = inst.horizon;
        capacity_ = inst.fleet.capacity;
        max_nodes_ = limits.max_nodes;
        deadline_ = limits.max_time > 0
                        ? Clock::now() + std::chrono::duration_cast<Clock::duration>(
                              std::chrono::duration<double>(limits.max_time))
                        : Clock::time_point::max();

        for (int ti : task_indices) {
            const Task& t = inst.tasks.at(ti);
            TaskCand c;
            c.task_index = ti;
            c.a = t.window_start;
            c.b = t.window_end;
            c.best_prize = 0.0;
            const double g = gamma ? gamma->at(ti) : 0.0;
            const double tt_d = travel_time(inst, depot_, t.pos());
            const double te_d = travel_energy(inst, depot_, t.pos());
            for (int m = 0; m < static_cast<int>(t.modes.size()); ++m) {
                const Mode& mode = t.modes[m];
                const double arr = std::max(t.window_start, tt_d);
                if (arr + mode.service_time > t.window_end + kFeasTol) continue;
                if (arr + mode.service_time + tt_d > horizon_ + kFeasTol) continue;
                if (te_d + mode.energy + te_d > capacity_ + kFeasTol) continue;
                const double prize = w.lambda + (1.0 - w.lambda) * mode.quality - g;
                c.modes.push_back({m, mode.service_time, mode.energy, prize});
                c.best_prize = std::max(c.best_prize, prize);
            }
            if (!c.modes.empty()) cands_.push_back(std::move(c));
        }

        const int n = static_cast<int>(cands_.size());
        tt_.assign(n, std::vector<double>(n));
        te_.assign(n, std::vector<double>(n));
        tt_depot_.resize(n);
        te_depot_.resize(n);
        for (int i = 0; i < n; ++i) {
            const Point pi = inst.tasks[cands_[i].task_index].pos();
            tt_depot_[i] = travel_time(inst, depot_, pi);
            te_depot_[i] = travel_energy(inst, depot_, pi);
            for (int j = 0; j < n; ++j) {
                const Point pj = inst.tasks[cands_[j].task_index].pos();
                tt_[i][j] = travel_time(inst, pi, pj);
                te_[i][j] = travel_energy(inst, pi, pj);
            }
        }
        for (int i = 0; i < n; ++i) {
            double leg = tt_depot_[i];
            double energy_leg = te_depot_[i];
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                leg = std::min(leg, tt_[j][i]);
                energy_leg = std::min(energy_leg, te_[j][i]);
            }
            cands_[i].min_leg_in = leg;
            cands_[i].min_energy_in = energy_leg;
        }
        for (const auto& c : cands_)
            sum_positive_prize_ += std::max(0.0, c.best_prize);
        root_bound_ = sum_positive_prize_;
        // All-integer prizes (lambda = 1, no duals): solution values live on
        // the integer lattice, so fractional bounds round down.
        integral_prizes_ = true;
        for (const auto& c : cands_)
            for (const auto& mc : c.modes)
                if (std::abs(mc.prize - std::round(mc.prize)) > 1e-12)
                    integral_prizes_ = false;
        build_bound_segments();
    }

    // Column collection (pricing) instead of best-solution tracking.
    void enable_column_collection(double rc_offset, int pool_cap) {
        collect_columns_ = true;
        rc_offset_ = rc_offset;
        pool_cap_ = pool_cap;
    }

    // Prime the incumbent with a known feasible assignment.
    void seed_incumbent(double value, std::vector<Seq> routes) {
        if (value > best_value_ + kValueEps) {
            best_value_ = value;
            best_routes_ = std::move(routes);
        }
    }

    void run() {
        used_.assign(cands_.size(), 0);
        scratch_.assign(cands_.size() + num_agents_ + 2, {});
        cur_value_ = 0.0;
        if (num_agents_ >= 1 && !cands_.empty())
            dfs(0, -1, 0.0, 0.0, /*min_first=*/0, /*route_first=*/-1, 0);
        exhausted_ = !timed_out_ && !node_capped_;
    }

    // Results.
    double best_value() const { return best_value_; }
    const std::vector<Seq>& best_routes() const { return best_routes_; }
    bool exhausted() const { return exhausted_; }
    long long nodes() const { return nodes_; }
    double root_bound() const { return root_bound_; }

    struct ColEntry {
        double rc;
        Seq seq;
        bool operator<(const ColEntry& o) const {
            if (rc != o.rc) return rc < o.rc;
            return compare_seq(seq, o.seq) > 0;  // evict larger descriptions first
        }
    };
    const std::set<ColEntry>& kept_columns() const { return kept_; }

private:
    // loc: -1 for the depot, otherwise a candidate index.
    double tt_from(int loc, int ci) const {
        return loc < 0 ? tt_depot_[ci] : tt_[loc][ci];
    }
    double te_from(int loc, int ci) const {
        return loc < 0 ? te_depot_[ci] : te_[loc][ci];
    }

    double prune_threshold() const {
        if (!collect_columns_) return best_value_;
        if (static_cast<int>(kept_.size()) >= pool_cap_)
            return std::max(kRcTol, kept_.begin()->rc) + rc_offset_;
        return kRcTol + rc_offset_;
    }

    // Per-task frontier of (resource cost, prize) points, upper convex hull
    // from the origin so segment slopes decrease. The global slope-ordered
    // segment list makes the fractional multiple-choice knapsack bound a
    // single scan per node. Built twice: service time against the horizon
    // pool and energy against the capacity pool.
    std::vector<BoundSeg> hull_segments(bool energy_costs) const {
        struct Pt {
            double cost, prize;
        };
        std::vector<std::pair<double, BoundSeg>> slope_segs;
        for (int ci = 0; ci < static_cast<int>(cands_.size()); ++ci) {
            const TaskCand& c = cands_[ci];
            std::vector<Pt> pts;
            for (const auto& mc : c.modes) {
                if (mc.prize <= 0.0) continue;
                const double cost = energy_costs ? mc.energy + c.min_energy_in
                                                 : mc.service + c.min_leg_in;
                pts.push_back({cost, mc.prize});
            }
            std::sort(pts.begin(), pts.end(), [](const Pt& x, const Pt& y) {
                return x.cost < y.cost || (x.cost == y.cost && x.prize > y.prize);
            });
            std::vector<Pt> hull = {{0.0, 0.0}};
            for (const Pt& p : pts) {
                if (p.prize <= hull.back().prize) continue;
                while (hull.size() >= 2) {
                    const Pt& b = hull.back();
                    const Pt& a = hull[hull.size() - 2];
                    // b below the chord a->p: drop it
                    if ((b.prize - a.prize) * (p.cost - a.cost) <=
                        (p.prize - a.prize) * (b.cost - a.cost))
                        hull.pop_back();
                    else
                        break;
                }
                hull.push_back(p);
            }
            for (std::size_t k = 1; k < hull.size(); ++k) {
                const double dc = hull[k].cost - hull[k - 1].cost;
                const double dp = hull[k].prize - hull[k - 1].prize;
                const double slope = dc > 0 ? dp / dc : 1e30;
                slope_segs.push_back({slope, {ci, dc, dp}});
            }
        }
        std::sort(slope_segs.begin(), slope_segs.end(),
                  [](const auto& x, const auto& y) {
                      if (x.first != y.first) return x.first > y.first;
                      if (x.second.ci != y.second.ci) return x.second.ci < y.second.ci;
                      return x.second.dcost < y.second.dcost;
                  });
        std::vector<BoundSeg> segs;
        segs.reserve(slope_segs.size());
        for (const auto& [slope, seg] : slope_segs) segs.push_back(seg);
        return segs;
    }

    void build_bound_segments() {
        time_segs_ = hull_segments(false);
        energy_segs_ = hull_segments(true);
        elig_.assign(cands_.size(), 0);
    }

    static double knapsack_bound(const std::vector<BoundSeg>& segs,
                                 const std::vector<char>& elig, double budget) {
        if (budget < 0) budget = 0;
        double bound = 0.0;
        for (const BoundSeg& s : segs) {
            if (!elig[s.ci]) continue;
            if (s.dcost <= 0) {
                bound += s.dprize;
            } else if (s.dcost <= budget) {
                bound += s.dprize;
                budget -= s.dcost;
            } else {
                bound += s.dprize * (budget / s.dcost);
                break;
            }
        }
        return bound;
    }

    // Fractional knapsack over the remaining service-time capacity: the
    // current agent has horizon - completion left, every untouched agent a
    // full horizon. Travel, windows and energy are relaxed except for the
    // cheapest incoming leg folded into each task's cost, so this stays an
    // upper bound; on the last agent, tasks no longer reachable from the
    // current state are excluded (exact by the triangle inequality).
    double remaining_bound(int loc, double completion, double energy, int agent) {
        const bool last_agent = agent == num_agents_ - 1;
        for (int ci = 0; ci < static_cast<int>(cands_.size()); ++ci) {
            if (used_[ci]) {
                elig_[ci] = 0;
                continue;
            }
            if (!last_agent) {
                elig_[ci] = 1;
                continue;
            }
            const TaskCand& c = cands_[ci];
            const double arr = std::max(c.a, completion + tt_from(loc, ci));
            char reach = 0;
            for (const auto& mc : c.modes) {
                if (arr + mc.service > c.b + kFeasTol) continue;
                if (arr + mc.service + tt_depot_[ci] > horizon_ + kFeasTol) continue;
                if (energy + te_from(loc, ci) + mc.energy + te_depot_[ci] >
                    capacity_ + kFeasTol)
                    continue;
                reach = 1;
                break;
            }
            elig_[ci] = reach;
        }

        const int fresh = num_agents_ - agent - 1;
        const double time_budget = (horizon_ - completion) + fresh * horizon_;
        const double energy_budget = (capacity_ - energy) + fresh * capacity_;
        return std::min(knapsack_bound(time_segs_, elig_, time_budget),
                        knapsack_bound(energy_segs_, elig_, energy_budget));
    }

    // Current assignment as a route list view, cur_seq_ being the last route.
    int compare_current_vs_best() const {
        const std::size_t cur_n = done_routes_.size() + (cur_seq_.empty() ? 0 : 1);
        const std::size_t n = std::min(cur_n, best_routes_.size());
        for (std::size_t i = 0; i < n; ++i) {
            const Seq& mine = i < done_routes_.size() ? done_routes_[i] : cur_seq_;
            if (int c = compare_seq(mine, best_routes_[i])) return c;
        }
        if (cur_n != best_routes_.size())
            return cur_n < best_routes_.size() ? -1 : 1;
        return 0;
    }

    void consider_current() {
        if (collect_columns_) {
            if (cur_seq_.empty()) return;
            const double rc = cur_value_ - rc_offset_;
            if (rc <= kRcTol) return;
            if (static_cast<int>(kept_.size()) >= pool_cap_) {
                if (rc <= kept_.begin()->rc) return;
                kept_.insert({rc, cur_seq_});
                kept_.erase(kept_.begin());
            } else {
                kept_.insert({rc, cur_seq_});
            }
            return;
        }
        if (cur_value_ < best_value_ - kValueEps) return;
        if (cur_value_ <= best_value_ + kValueEps && compare_current_vs_best() >= 0)
            return;  // equal value, not lexicographically smaller
        best_value_ = std::max(best_value_, cur_value_);
        best_routes_ = done_routes_;
        if (!cur_seq_.empty()) best_routes_.push_back(cur_seq_);
    }

    void dfs(int agent, int loc, double completion, double energy, int min_first,
             int route_first, int depth) {
        ++nodes_;
        if ((nodes_ & 1023) == 0 && Clock::now() > deadline_) timed_out_ = true;
        if (max_nodes_ >= 0 && nodes_ > max_nodes_) node_capped_ = true;
        if (timed_out_ || node_capped_) return;

        consider_current();

        double bound = cur_value_ + remaining_bound(loc, completion, energy, agent);
        if (integral_prizes_) bound = std::floor(bound + 1e-9);
        if (bound <= prune_threshold() + kValueEps) return;

        std::vector<Ext>& exts = scratch_[depth];
        exts.clear();
        for (int ci = 0; ci < static_cast<int>(cands_.size()); ++ci) {
            if (used_[ci]) continue;
            if (cur_seq_.empty() && ci < min_first) continue;
            const TaskCand& c = cands_[ci];
            const double arr_base = completion + tt_from(loc, ci);
            const double arr = std::max(c.a, arr_base);
            for (int mi = 0; mi < static_cast<int>(c.modes.size()); ++mi) {
                const ModeCand& mc = c.modes[mi];
                const double comp = arr + mc.service;
                if (comp > c.b + kFeasTol) continue;
                if (comp + tt_depot_[ci] > horizon_ + kFeasTol) continue;
                if (energy + te_from(loc, ci) + mc.energy + te_depot_[ci] >
                    capacity_ + kFeasTol)
                    continue;
                exts.push_back({ci, mi, arr, comp});
            }
        }
        std::sort(exts.begin(), exts.end(), [](const Ext& x, const Ext& y) {
            if (x.comp != y.comp) return x.comp < y.comp;
            if (x.ci != y.ci) return x.ci < y.ci;
            return x.mi < y.mi;
        });

        for (const auto& ext : exts) {
            if (timed_out_ || node_capped_) return;
            const TaskCand& c = cands_[ext.ci];
            const ModeCand& mc = c.modes[ext.mi];
            used_[ext.ci] = 1;
            cur_seq_.push_back({c.task_index, mc.mode_index});
            cur_value_ += mc.prize;
            dfs(agent, ext.ci, ext.comp,
                energy + te_from(loc, ext.ci) + mc.energy, min_first,
                route_first < 0 ? ext.ci : route_first, depth + 1);
            cur_value_ -= mc.prize;
            cur_seq_.pop_back();
            used_[ext.ci] = 0;
        }

        // Close the route and hand over to the next agent.
        if (!cur_seq_.empty() && agent + 1 < num_agents_) {
            if (timed_out_ || node_capped_) return;
            done_routes_.push_back(std::move(cur_seq_));
            cur_seq_.clear();
            dfs(agent + 1, -1, 0.0, 0.0, route_first + 1, -1, depth + 1);
            cur_seq_ = std::move(done_routes_.back());
            done_routes_.pop_back();
        }
    }

    struct Ext {
        int ci;
        int mi;  // index into cands_[ci].modes
        double arrival;
        double comp;
    };

    const Instance& inst_;
    int num_agents_;
    Point depot_;
    double horizon_ = 0.0;
    double capacity_ = 0.0;
    long long max_nodes_ = -1;
    Clock::time_point deadline_;
    std::vector<std::vector<Ext>> scratch_;  // per-depth extension buffers

    std::vector<TaskCand> cands_;
    std::vector<std::vector<double>> tt_, te_;
    std::vector<double> tt_depot_, te_depot_;

    std::vector<char> used_;
    std::vector<char> elig_;  // scratch for remaining_bound
    std::vector<BoundSeg> time_segs_, energy_segs_;
    Seq cur_seq_;
    std::vector<Seq> done_routes_;
    double cur_value_ = 0.0;
    double sum_positive_prize_ = 0.0;
    double root_bound_ = 0.0;

    double best_value_ = 0.0;
    std::vector<Seq> best_routes_;

    bool collect_columns_ = false;
    double rc_offset_ = 0.0;
    int pool_cap_ = 0;
    std::set<ColEntry> kept_;

    long long nodes_ = 0;
    bool timed_out_ = false;
    bool node_capped_ = false;
    bool exhausted_ = false;
    bool integral_prizes_ = false;
};

}  // namespace

namespace {

// Fixed-mode warm starts: the single-mode restrictions search tiny trees,
// and their incumbents prime the full branch and bound. Mode indices are
// remapped through labels, which restrict_modes preserves.
std::vector<std::vector<SeqItem>> warm_sequences(const Instance& inst,
                                                 const Instance& restricted,
                                                 const Solution& sol) {
    const auto index = task_index_map(inst);
    std::vector<std::vector<SeqItem>> seqs;
    for (const auto& route : sol.routes) {
        std::vector<SeqItem> seq;
        for (const auto& v : route.visits) {
            const int ti = index.at(v.task_id);
            const std::string& label =
                restricted.tasks[ti].modes.at(v.mode_index).label;
            int mode = -1;
            for (int m = 0; m < static_cast<int>(inst.tasks[ti].modes.size()); ++m)
                if (inst.tasks[ti].modes[m].label == label) {
                    mode = m;
                    break;
                }
            if (mode < 0) throw std::logic_error("warm_sequences: label lost");
            seq.push_back({ti, mode});
        }
        if (!seq.empty()) seqs.push_back(std::move(seq));
    }
    return seqs;
}

}  // namespace

ExactResult solve_exact(const Instance& inst, Weights w,
                        const SolveLimits& limits) {
    const auto start = Clock::now();
    std::vector<int> all(inst.tasks.size());
    for (int i = 0; i < static_cast<int>(all.size()); ++i) all[i] = i;

    bool multi_mode = false;
    for (const auto& t : inst.tasks) multi_mode = multi_mode || t.modes.size() > 1;

    struct Warm {
        double value;
        std::vector<std::vector<SeqItem>> seqs;
    };
    std::vector<Warm> warm;
    if (multi_mode) {
        const double slice = std::min(limits.max_time * 0.1, 15.0);
        for (ModePolicy policy : {ModePolicy::Max, ModePolicy::Min}) {
            const Instance restricted = restrict_modes(inst, policy);
            const auto sub = solve_exact(restricted, w, {slice, limits.max_nodes});
            Solution translated = sub.solution;
            auto seqs = warm_sequences(inst, restricted, translated);
            warm.push_back({objective_value(restricted, sub.solution, w),
                            std::move(seqs)});
        }
    }

    const double remaining =
        limits.max_time - std::chrono::duration<double>(Clock::now() - start).count();
    Engine engine(inst, w, all, nullptr, inst.fleet.count,
                  {std::max(remaining, 0.001), limits.max_nodes});
    for (auto& ws : warm) engine.seed_incumbent(ws.value, std::move(ws.seqs));
    engine.run();

    ExactResult res;
    res.nodes = engine.nodes();
    int agent = 0;
    for (const auto& seq : engine.best_routes()) {
        auto sched = earliest_schedule(inst, seq, agent++);
        res.solution.routes.push_back(std::move(sched.route));
    }
    res.solution.objective = objective_value(inst, res.solution, w);
    res.solution.status =
        engine.exhausted() ? SolveStatus::Optimal : SolveStatus::Feasible;
    res.upper_bound =
        engine.exhausted() ? res.solution.objective : engine.root_bound();
    res.solution.compute_time =
        std::chrono::duration<double>(Clock::now() - start).count();
    return res;
}

Instance restrict_modes(const Instance& inst, ModePolicy policy) {
    Instance out = inst;
    for (auto& t : out.tasks) {
        if (t.modes.empty())
            throw std::invalid_argument("restrict_modes: empty mode set for task " +
                                        std::to_string(t.id));
        int pick = 0;
        for (int m = 1; m < static_cast<int>(t.modes.size()); ++m) {
            const bool better = policy == ModePolicy::Max
                                    ? t.modes[m].quality > t.modes[pick].quality
                                    : t.modes[m].quality < t.modes[pick].quality;
            if (better) pick = m;
        }
        t.modes = {t.modes[pick]};
    }
    return out;
}

PricingResult solve_pricing(const Instance& inst, const std::vector<int>& subset,
                            const PriceVector& duals, Weights w,
                            const SolveLimits& limits, int pool_cap) {
    if (duals.gamma.size() != inst.tasks.size())
        throw std::invalid_argument(
            "solve_pricing: gamma must align with the instance tasks");
    std::set<int> unique_subset;
    for (int ti : subset) {
        if (ti < 0 || ti >= static_cast<int>(inst.tasks.size()))
            throw std::invalid_argument("solve_pricing: subset index out of range");
        if (!unique_subset.insert(ti).second)
            throw std::invalid_argument("solve_pricing: duplicate subset index");
    }
    if (pool_cap < 1) throw std::invalid_argument("solve_pricing: pool_cap < 1");

    Engine engine(inst, w, subset, &duals.gamma, 1, limits);
    engine.enable_column_collection(duals.fleet_dual, pool_cap);
    engine.run();

    PricingResult res;
    res.exhausted = engine.exhausted();
    const auto& kept = engine.kept_columns();
    for (auto it = kept.rbegin(); it != kept.rend(); ++it)
        res.columns.push_back(make_column(inst, w, it->seq));
    return res;
}

}  // namespace m3rs
