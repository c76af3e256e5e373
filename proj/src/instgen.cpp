#include "m3rs/instgen.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "m3rs/core.hpp"
#include "m3rs/rng.hpp"

namespace m3rs {

const std::vector<Mode>& default_mode_catalog() {
    static const std::vector<Mode> catalog = {
        {"D_99.9999", 240.0, 4.0, 1.0},
        {"D_99.99", 160.0, 2.67, 0.667},
        {"D_99", 80.0, 1.33, 0.333},
        {"D_90", 40.0, 0.67, 0.167},
    };
    return catalog;
}

namespace {

std::string format_hours(double hours) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", hours);
    return buf;
}

constexpr int kMaxWindowRedraws = 1000;

}  // namespace

Instance generate(const GenSpec& spec) {
    const std::vector<Mode>& catalog =
        spec.mode_catalog.empty() ? default_mode_catalog() : spec.mode_catalog;

    if (spec.n_tasks < 1) throw std::invalid_argument("n_tasks must be >= 1");
    if (spec.n_agents < 1) throw std::invalid_argument("n_agents must be >= 1");
    if (!(spec.horizon_hours > 0))
        throw std::invalid_argument("horizon_hours must be > 0");
    if (!(spec.area_side > 0)) throw std::invalid_argument("area_side must be > 0");
    if (!(spec.speed > 0)) throw std::invalid_argument("speed must be > 0");
    if (!(spec.capacity > 0)) throw std::invalid_argument("capacity must be > 0");
    if (catalog.empty()) throw std::invalid_argument("mode catalog is empty");
    double max_service = 0.0;
    for (const auto& m : catalog) max_service = std::max(max_service, m.service_time);
    if (spec.window_width_min < max_service)
        throw std::invalid_argument(
            "window width minimum is below the longest catalog service time");
    if (spec.window_width_max < spec.window_width_min)
        throw std::invalid_argument("window width range is inverted");

    const double horizon = spec.horizon_hours * 3600.0;
    std::mt19937_64 rng(spec.seed);

    Instance inst;
    inst.name = std::to_string(spec.n_tasks) + "-" + std::to_string(spec.n_agents) +
                "-" + format_hours(spec.horizon_hours);
    inst.horizon = horizon;
    inst.fleet.count = spec.n_agents;
    inst.fleet.capacity = spec.capacity;
    inst.fleet.speed = spec.speed;
    inst.fleet.travel_energy_rate = spec.travel_energy_rate;
    inst.fleet.depot_x = spec.area_side / 2.0;
    inst.fleet.depot_y = spec.area_side / 2.0;

    const int ncat = static_cast<int>(catalog.size());
    for (int i = 0; i < spec.n_tasks; ++i) {
        Task t;
        t.id = i + 1;
        t.x = urand(rng, 0.0, spec.area_side);
        t.y = urand(rng, 0.0, spec.area_side);

        const int set_size = 1 + uindex(rng, ncat);
        for (int idx : sample_indices(rng, ncat, set_size))
            t.modes.push_back(catalog[idx]);  // ascending index = strongest first

        bool placed = false;
        for (int attempt = 0; attempt < kMaxWindowRedraws; ++attempt) {
            const double center = urand(rng, 0.0, horizon);
            const double width =
                urand(rng, spec.window_width_min, spec.window_width_max);
            const double a = std::max(0.0, center - width / 2.0);
            const double b = std::min(horizon, center + width / 2.0);
            const bool fits = std::any_of(
                t.modes.begin(), t.modes.end(),
                [&](const Mode& m) { return a + m.service_time <= b; });
            if (fits) {
                t.window_start = a;
                t.window_end = b;
                placed = true;
                break;
            }
        }
        if (!placed)
            throw InfeasibleSpec("task " + std::to_string(t.id) +
                                 ": no window admitting a mode after " +
                                 std::to_string(kMaxWindowRedraws) + " redraws");
        inst.tasks.push_back(std::move(t));
    }
    return inst;
}

}  // namespace m3rs
