#pragma once

#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "m3rs/types.hpp"

namespace m3rs {

/// Tolerance for all feasibility comparisons, in seconds / energy units.
inline constexpr double kFeasTol = 1e-6;

double euclidean(Point a, Point b);

/// Euclidean distance over fixed base speed. Symmetric, zero iff same point.
double travel_time(const Instance& inst, Point from, Point to);

/// Euclidean distance times the per-meter energy rate.
double travel_energy(const Instance& inst, Point from, Point to);

enum class ViolationKind {
    UnknownTask,    // visit references a task id not in the instance
    DuplicateTask,  // task serviced more than once fleet-wide
    BadModeIndex,   // mode index outside the task's mode set
    BadAgent,       // agent index out of range, reused, or too many routes
    Capacity,       // route energy (service + travel incl. depot legs) > Q
    Timing,         // arrival earlier than predecessor completion + travel
    Window,         // service starts before a_i or completes after b_i
    Horizon,        // depot return later than the mission horizon
    ReturnTime,     // stored return_time inconsistent with the visit sequence
};

const char* violation_name(ViolationKind k);

struct Violation {
    ViolationKind kind;
    std::string detail;
};

struct FeasibilityReport {
    bool ok = true;
    std::vector<Violation> violations;

    bool has(ViolationKind k) const;
};

/// Instance well-formedness problems, empty when the instance is valid.
std::vector<std::string> validate_instance(const Instance& inst);

/// Checks every mission constraint and reports all violations, not just
/// the first: at-most-once assignment, mode validity, per-route energy
/// capacity, arrival-time propagation, time windows (closed interval on
/// completion), and depot return within the horizon. Empty solutions and
/// empty routes are trivially feasible.
FeasibilityReport check_solution(const Instance& inst, const Solution& sol);

/// lambda * (visited task count) + (1-lambda) * sum of visit qualities.
/// Arrival times do not enter the value. Throws std::invalid_argument on
/// unknown task ids or mode indices.
double objective_value(const Instance& inst, const Solution& sol, Weights w);

/// (task index, mode index) element of a fixed service sequence.
struct SeqItem {
    int task = 0;
    int mode = 0;
};

struct ScheduleOutcome {
    bool feasible = false;
    ViolationKind blocker = ViolationKind::Window;  // first violated constraint
    Route route;                                    // valid when feasible
    double total_energy = 0.0;  // service + travel energy incl. depot legs
};

/// Forward propagation of earliest arrival times for a fixed (task, mode)
/// sequence: arrival(first) = max(a, t_depot), arrival(next) =
/// max(a, completion(prev) + travel). Because the objective is free of
/// arrival times and waiting is allowed, a sequence is feasible under some
/// arrival assignment iff it is feasible under the earliest one.
/// Throws std::invalid_argument on repeated tasks or bad indices.
ScheduleOutcome earliest_schedule(const Instance& inst,
                                  std::span<const SeqItem> seq, int agent = 0);

/// id -> index into Instance::tasks.
std::unordered_map<int, int> task_index_map(const Instance& inst);

}  // namespace m3rs
