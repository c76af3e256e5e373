#include "m3rs/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "m3rs/core.hpp"

namespace m3rs {

namespace {

constexpr int kMaxOracleTasks = 8;

struct State {
    const Instance& inst;
    Weights w;
    std::vector<char> used;
    std::vector<std::vector<SeqItem>> routes;  // one per agent, may stay empty
    double value = 0.0;
    double best = 0.0;
    std::vector<std::vector<SeqItem>> best_routes;
};

// Extends agent's route with every unused (task, mode), or closes it and
// moves on. Prefix feasibility is rechecked with earliest_schedule from
// scratch; an infeasible prefix cannot become feasible by appending.
void recurse(State& st, int agent) {
    if (st.value > st.best) {
        st.best = st.value;
        st.best_routes = st.routes;
    }
    if (agent >= st.inst.fleet.count) return;

    const int n = static_cast<int>(st.inst.tasks.size());
    auto& route = st.routes[agent];
    for (int t = 0; t < n; ++t) {
        if (st.used[t]) continue;
        const Task& task = st.inst.tasks[t];
        for (int m = 0; m < static_cast<int>(task.modes.size()); ++m) {
            route.push_back({t, m});
            const auto sched = earliest_schedule(st.inst, route, agent);
            if (sched.feasible) {
                st.used[t] = 1;
                st.value += st.w.lambda + (1.0 - st.w.lambda) * task.modes[m].quality;
                recurse(st, agent);
                st.value -= st.w.lambda + (1.0 - st.w.lambda) * task.modes[m].quality;
                st.used[t] = 0;
            }
            route.pop_back();
        }
    }
    recurse(st, agent + 1);  // close this route, empty or not
}

}  // namespace

OracleResult enumerate_optimal(const Instance& inst, Weights w) {
    if (static_cast<int>(inst.tasks.size()) > kMaxOracleTasks)
        throw std::invalid_argument(
            "enumerate_optimal: instance too large for exhaustive enumeration");

    State st{inst, w, std::vector<char>(inst.tasks.size(), 0),
             std::vector<std::vector<SeqItem>>(inst.fleet.count)};
    recurse(st, 0);

    OracleResult res;
    res.objective = st.best;
    int agent = 0;
    for (const auto& seq : st.best_routes) {
        if (seq.empty()) continue;
        auto sched = earliest_schedule(inst, seq, agent++);
        res.solution.routes.push_back(std::move(sched.route));
    }
    res.solution.objective = objective_value(inst, res.solution, w);
    res.solution.status = SolveStatus::Optimal;
    return res;
}

}  // namespace m3rs
