#include "m3rs/column.hpp"

#include <algorithm>
#include <stdexcept>

namespace m3rs {

std::uint64_t column_id(const std::vector<Visit>& visits) {
    // FNV-1a over the (task_id, mode_index) sequence.
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&](std::uint64_t v) {
        for (int byte = 0; byte < 8; ++byte) {
            h ^= (v >> (8 * byte)) & 0xff;
            h *= 1099511628211ull;
        }
    };
    for (const auto& v : visits) {
        mix(static_cast<std::uint64_t>(static_cast<std::int64_t>(v.task_id)));
        mix(static_cast<std::uint64_t>(static_cast<std::int64_t>(v.mode_index)));
    }
    return h;
}

Column make_column(const Instance& inst, Weights w, std::span<const SeqItem> seq) {
    const auto sched = earliest_schedule(inst, seq);
    if (!sched.feasible)
        throw std::logic_error("make_column: infeasible sequence");
    Column col;
    col.visits = sched.route.visits;
    col.return_time = sched.route.return_time;
    for (const auto& item : seq) {
        col.covered.push_back(item.task);
        col.cost += w.lambda +
                    (1.0 - w.lambda) * inst.tasks[item.task].modes[item.mode].quality;
    }
    std::sort(col.covered.begin(), col.covered.end());
    col.id = column_id(col.visits);
    return col;
}

}  // namespace m3rs
