#pragma once

#include <string>
#include <vector>

namespace m3rs {

/// 2D location, meters.
struct Point {
    double x = 0.0;
    double y = 0.0;
};

/// One execution option for a task: service time and energy spent for a
/// given service quality. Quality lives in (0, 1].
struct Mode {
    std::string label;
    double service_time = 0.0;  // seconds
    double energy = 0.0;        // energy units
    double quality = 0.0;
};

struct Task {
    int id = 0;
    double x = 0.0;
    double y = 0.0;
    double window_start = 0.0;  // seconds, service may not start earlier
    double window_end = 0.0;    // seconds, service must complete by then
    std::vector<Mode> modes;    // non-empty, ordered strongest first

    Point pos() const { return {x, y}; }
};

/// Identical agents: shared energy budget per agent, base speed, and a
/// single depot where every route starts and ends.
struct Fleet {
    int count = 1;
    double capacity = 0.0;            // energy units per agent
    double speed = 1.0;               // m/s
    double travel_energy_rate = 0.0;  // energy units per meter
    double depot_x = 0.0;
    double depot_y = 0.0;

    Point depot() const { return {depot_x, depot_y}; }
};

struct Instance {
    std::string name;
    std::vector<Task> tasks;
    Fleet fleet;
    double horizon = 0.0;  // seconds, mission deadline for depot return
};

/// One serviced task inside a route.
struct Visit {
    int task_id = 0;
    int mode_index = 0;     // index into Task::modes
    double arrival = 0.0;   // seconds
};

struct Route {
    int agent = 0;
    std::vector<Visit> visits;
    double return_time = 0.0;  // arrival back at the depot, seconds
};

enum class SolveStatus { Optimal, Feasible, Infeasible, TimedOut };

const char* status_letter(SolveStatus s);  // "O", "F", "I", "T"
const char* status_name(SolveStatus s);

struct Solution {
    std::vector<Route> routes;
    double objective = 0.0;
    SolveStatus status = SolveStatus::Feasible;
    double compute_time = 0.0;  // seconds
};

/// Scalarization weight: lambda on task count, 1-lambda on quality sum.
/// The closed endpoints are admitted so sweeps can cover [0, 1].
struct Weights {
    double lambda = 0.5;
};

}  // namespace m3rs
