#pragma once

// Shared builders for unit tests: compact instance construction and the
// default dose catalog under short names.

#include <random>
#include <string>
#include <vector>

#include "m3rs/instgen.hpp"
#include "m3rs/types.hpp"

namespace testutil {

inline m3rs::Mode mode(const std::string& label, double service, double energy,
                       double quality) {
    return {label, service, energy, quality};
}

// Default catalog entries by strength rank: 0 strongest .. 3 weakest.
inline m3rs::Mode dose(int rank) { return m3rs::default_mode_catalog().at(rank); }

inline m3rs::Task task(int id, double x, double y, double a, double b,
                       std::vector<m3rs::Mode> modes) {
    m3rs::Task t;
    t.id = id;
    t.x = x;
    t.y = y;
    t.window_start = a;
    t.window_end = b;
    t.modes = std::move(modes);
    return t;
}

struct InstanceOpts {
    int agents = 1;
    double capacity = 1000.0;
    double speed = 1.0;
    double travel_energy_rate = 0.0;
    double depot_x = 0.0;
    double depot_y = 0.0;
    double horizon = 1e6;
};

inline m3rs::Instance instance(std::vector<m3rs::Task> tasks,
                               const InstanceOpts& o = {}) {
    m3rs::Instance inst;
    inst.name = "test";
    inst.tasks = std::move(tasks);
    inst.fleet.count = o.agents;
    inst.fleet.capacity = o.capacity;
    inst.fleet.speed = o.speed;
    inst.fleet.travel_energy_rate = o.travel_energy_rate;
    inst.fleet.depot_x = o.depot_x;
    inst.fleet.depot_y = o.depot_y;
    inst.horizon = o.horizon;
    return inst;
}

inline m3rs::Solution one_route(std::vector<m3rs::Visit> visits, double return_time,
                                int agent = 0) {
    m3rs::Solution sol;
    m3rs::Route r;
    r.agent = agent;
    r.visits = std::move(visits);
    r.return_time = return_time;
    sol.routes.push_back(std::move(r));
    return sol;
}

// Oracle-scale random spec: up to 6 tasks, 2 agents, 3 modes. The catalog
// drops the top dose so the shorter windows still admit every mode size.
inline m3rs::GenSpec small_spec(std::uint64_t seed) {
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
    m3rs::GenSpec spec;
    spec.seed = seed;
    spec.n_tasks = 1 + static_cast<int>(rng() % 6);
    spec.n_agents = 1 + static_cast<int>(rng() % 2);
    spec.horizon_hours = 0.15 + 0.0001 * static_cast<double>(rng() % 4500);
    spec.mode_catalog = {m3rs::default_mode_catalog()[1],
                         m3rs::default_mode_catalog()[2],
                         m3rs::default_mode_catalog()[3]};
    spec.window_width_min = 200.0;
    spec.window_width_max = 600.0;
    const std::uint64_t cap = rng() % 3;
    spec.capacity = cap == 0 ? 3.0 : (cap == 1 ? 6.0 : 100.0);
    return spec;
}

}  // namespace testutil
