#include "m3rs/core.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace m3rs {

const char* status_letter(SolveStatus s) {
    switch (s) {
        case SolveStatus::Optimal: return "O";
        case SolveStatus::Feasible: return "F";
        case SolveStatus::Infeasible: return "I";
        case SolveStatus::TimedOut: return "T";
    }
    return "?";
}

const char* status_name(SolveStatus s) {
    switch (s) {
        case SolveStatus::Optimal: return "Optimal";
        case SolveStatus::Feasible: return "Feasible";
        case SolveStatus::Infeasible: return "Infeasible";
        case SolveStatus::TimedOut: return "TimedOut";
    }
    return "?";
}

const char* violation_name(ViolationKind k) {
    switch (k) {
        case ViolationKind::UnknownTask: return "unknown_task";
        case ViolationKind::DuplicateTask: return "duplicate_task";
        case ViolationKind::BadModeIndex: return "bad_mode_index";
        case ViolationKind::BadAgent: return "bad_agent";
        case ViolationKind::Capacity: return "capacity";
        case ViolationKind::Timing: return "timing";
        case ViolationKind::Window: return "window";
        case ViolationKind::Horizon: return "horizon";
        case ViolationKind::ReturnTime: return "return_time";
    }
    return "?";
}

bool FeasibilityReport::has(ViolationKind k) const {
    for (const auto& v : violations)
        if (v.kind == k) return true;
    return false;
}

double euclidean(Point a, Point b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

double travel_time(const Instance& inst, Point from, Point to) {
    return euclidean(from, to) / inst.fleet.speed;
}

double travel_energy(const Instance& inst, Point from, Point to) {
    return euclidean(from, to) * inst.fleet.travel_energy_rate;
}

std::unordered_map<int, int> task_index_map(const Instance& inst) {
    std::unordered_map<int, int> map;
    map.reserve(inst.tasks.size());
    for (int i = 0; i < static_cast<int>(inst.tasks.size()); ++i)
        map.emplace(inst.tasks[i].id, i);
    return map;
}

std::vector<std::string> validate_instance(const Instance& inst) {
    std::vector<std::string> problems;
    auto bad = [&](const std::string& msg) { problems.push_back(msg); };

    if (inst.fleet.count < 1) bad("fleet count must be >= 1");
    if (!(inst.fleet.capacity > 0)) bad("fleet capacity must be > 0");
    if (!(inst.fleet.speed > 0)) bad("fleet speed must be > 0");
    if (inst.fleet.travel_energy_rate < 0) bad("travel energy rate must be >= 0");
    if (!(inst.horizon > 0)) bad("horizon must be > 0");
    if (!std::isfinite(inst.fleet.depot_x) || !std::isfinite(inst.fleet.depot_y))
        bad("depot coordinates must be finite");

    std::set<int> ids;
    for (const auto& t : inst.tasks) {
        const std::string tag = "task " + std::to_string(t.id) + ": ";
        if (!ids.insert(t.id).second) bad(tag + "duplicate id");
        if (!std::isfinite(t.x) || !std::isfinite(t.y))
            bad(tag + "coordinates must be finite");
        if (t.window_start < 0) bad(tag + "window start must be >= 0");
        if (!(t.window_start < t.window_end))
            bad(tag + "window start must be < window end");
        if (t.window_end > inst.horizon + kFeasTol)
            bad(tag + "window end exceeds the horizon");
        if (t.modes.empty()) {
            bad(tag + "mode set is empty");
            continue;
        }
        std::set<std::string> labels;
        bool any_fits = false;
        for (const auto& m : t.modes) {
            if (m.service_time < 0) bad(tag + "mode service time must be >= 0");
            if (m.energy < 0) bad(tag + "mode energy must be >= 0");
            if (!(m.quality > 0) || m.quality > 1.0)
                bad(tag + "mode quality must be in (0, 1]");
            if (!labels.insert(m.label).second)
                bad(tag + "duplicate mode label '" + m.label + "'");
            if (t.window_start + m.service_time <= t.window_end + kFeasTol)
                any_fits = true;
        }
        if (!any_fits) bad(tag + "no mode fits inside the time window");
    }
    return problems;
}

namespace {

void add(FeasibilityReport& rep, ViolationKind kind, std::string detail) {
    rep.ok = false;
    rep.violations.push_back({kind, std::move(detail)});
}

}  // namespace

FeasibilityReport check_solution(const Instance& inst, const Solution& sol) {
    FeasibilityReport rep;
    const auto index = task_index_map(inst);
    const Point depot = inst.fleet.depot();

    if (static_cast<int>(sol.routes.size()) > inst.fleet.count)
        add(rep, ViolationKind::BadAgent, "more routes than agents");
    std::set<int> agents_seen;
    std::set<int> tasks_seen;

    for (const auto& route : sol.routes) {
        const std::string rtag = "agent " + std::to_string(route.agent) + ": ";
        if (route.agent < 0 || route.agent >= inst.fleet.count)
            add(rep, ViolationKind::BadAgent, rtag + "agent index out of range");
        else if (!agents_seen.insert(route.agent).second)
            add(rep, ViolationKind::BadAgent, rtag + "agent used by two routes");

        if (route.visits.empty()) continue;  // trivially feasible

        Point pos = depot;
        double completion = 0.0;  // departure from the depot at time 0
        double energy = 0.0;
        bool chain_known = true;  // false after a visit that cannot be resolved

        for (const auto& v : route.visits) {
            const std::string vtag =
                rtag + "task " + std::to_string(v.task_id) + ": ";
            auto it = index.find(v.task_id);
            if (it == index.end()) {
                add(rep, ViolationKind::UnknownTask, vtag + "unknown task id");
                chain_known = false;
                continue;
            }
            const Task& task = inst.tasks[it->second];
            if (!tasks_seen.insert(v.task_id).second)
                add(rep, ViolationKind::DuplicateTask,
                    vtag + "task serviced more than once");
            if (v.mode_index < 0 ||
                v.mode_index >= static_cast<int>(task.modes.size())) {
                add(rep, ViolationKind::BadModeIndex,
                    vtag + "mode index " + std::to_string(v.mode_index) +
                        " out of range");
                chain_known = false;
                continue;
            }
            const Mode& mode = task.modes[v.mode_index];

            if (chain_known) {
                const double lower =
                    completion + travel_time(inst, pos, task.pos());
                if (v.arrival < lower - kFeasTol)
                    add(rep, ViolationKind::Timing,
                        vtag + "arrival precedes predecessor completion + travel");
                energy += travel_energy(inst, pos, task.pos());
            }
            if (v.arrival < task.window_start - kFeasTol)
                add(rep, ViolationKind::Window,
                    vtag + "service starts before the window opens");
            if (v.arrival + mode.service_time > task.window_end + kFeasTol)
                add(rep, ViolationKind::Window,
                    vtag + "service completes after the window closes");

            energy += mode.energy;
            completion = v.arrival + mode.service_time;
            pos = task.pos();
            chain_known = true;
        }

        const double ret = completion + travel_time(inst, pos, depot);
        energy += travel_energy(inst, pos, depot);
        if (std::abs(route.return_time - ret) > kFeasTol)
            add(rep, ViolationKind::ReturnTime,
                rtag + "stored return time differs from the recomputed one");
        if (ret > inst.horizon + kFeasTol)
            add(rep, ViolationKind::Horizon,
                rtag + "depot return exceeds the mission horizon");
        if (energy > inst.fleet.capacity + kFeasTol)
            add(rep, ViolationKind::Capacity,
                rtag + "route energy exceeds the agent capacity");
    }
    return rep;
}

double objective_value(const Instance& inst, const Solution& sol, Weights w) {
    const auto index = task_index_map(inst);
    int visited = 0;
    double quality = 0.0;
    for (const auto& route : sol.routes) {
        for (const auto& v : route.visits) {
            auto it = index.find(v.task_id);
            if (it == index.end())
                throw std::invalid_argument("objective_value: unknown task id " +
                                            std::to_string(v.task_id));
            const Task& task = inst.tasks[it->second];
            if (v.mode_index < 0 ||
                v.mode_index >= static_cast<int>(task.modes.size()))
                throw std::invalid_argument(
                    "objective_value: bad mode index for task " +
                    std::to_string(v.task_id));
            ++visited;
            quality += task.modes[v.mode_index].quality;
        }
    }
    return w.lambda * visited + (1.0 - w.lambda) * quality;
}

ScheduleOutcome earliest_schedule(const Instance& inst,
                                  std::span<const SeqItem> seq, int agent) {
    ScheduleOutcome out;
    out.route.agent = agent;

    std::set<int> used;
    const Point depot = inst.fleet.depot();
    Point pos = depot;
    double completion = 0.0;
    double energy = 0.0;

    for (const auto& item : seq) {
        if (item.task < 0 || item.task >= static_cast<int>(inst.tasks.size()))
            throw std::invalid_argument("earliest_schedule: task index out of range");
        const Task& task = inst.tasks[item.task];
        if (item.mode < 0 || item.mode >= static_cast<int>(task.modes.size()))
            throw std::invalid_argument("earliest_schedule: mode index out of range");
        if (!used.insert(item.task).second)
            throw std::invalid_argument("earliest_schedule: repeated task in sequence");
        const Mode& mode = task.modes[item.mode];

        const double arrival =
            std::max(task.window_start, completion + travel_time(inst, pos, task.pos()));
        if (arrival + mode.service_time > task.window_end + kFeasTol) {
            out.blocker = ViolationKind::Window;
            return out;
        }
        energy += travel_energy(inst, pos, task.pos()) + mode.energy;
        if (energy > inst.fleet.capacity + kFeasTol) {
            out.blocker = ViolationKind::Capacity;
            return out;
        }
        out.route.visits.push_back({task.id, item.mode, arrival});
        completion = arrival + mode.service_time;
        pos = task.pos();
    }

    out.route.return_time = completion + travel_time(inst, pos, depot);
    if (out.route.return_time > inst.horizon + kFeasTol) {
        out.blocker = ViolationKind::Horizon;
        return out;
    }
    energy += travel_energy(inst, pos, depot);
    if (energy > inst.fleet.capacity + kFeasTol) {
        out.blocker = ViolationKind::Capacity;
        return out;
    }
    out.total_energy = energy;
    out.feasible = true;
    return out;
}

}  // namespace m3rs
