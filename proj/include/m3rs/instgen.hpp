#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "m3rs/types.hpp"

namespace m3rs {

/// Default dose catalog, strongest first. Quality is the log10 reduction
/// over 6; service time and energy scale with the dose.
const std::vector<Mode>& default_mode_catalog();

/// Thrown when a generator spec cannot be satisfied (window redraws
/// exhausted for some task).
struct InfeasibleSpec : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GenSpec {
    int n_tasks = 20;
    int n_agents = 2;
    double horizon_hours = 0.86;
    double area_side = 30.0;  // meters, tasks uniform in the square
    std::uint64_t seed = 0;
    std::vector<Mode> mode_catalog;  // empty: use default_mode_catalog()
    double window_width_min = 300.0;  // seconds
    double window_width_max = 900.0;
    double speed = 0.5;               // m/s
    double capacity = 100.0;          // energy units
    double travel_energy_rate = 0.02; // energy units per meter
};

/// Seeded synthetic instance: uniform coordinates, random mode subsets
/// (strongest first), windows spread over the horizon and redrawn until a
/// mode fits, depot at the area center. Name "<tasks>-<agents>-<hours>".
/// Same spec and seed give an identical instance.
Instance generate(const GenSpec& spec);

}  // namespace m3rs
