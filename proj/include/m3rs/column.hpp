#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "m3rs/core.hpp"
#include "m3rs/types.hpp"

namespace m3rs {

/// One feasible single-agent schedule together with what the restricted
/// master needs: the coverage set and the schedule's own objective value.
struct Column {
    std::vector<Visit> visits;  // earliest-arrival schedule
    std::vector<int> covered;   // task indices into Instance::tasks, ascending
    double cost = 0.0;          // lambda*|visits| + (1-lambda)*sum quality
    double return_time = 0.0;
    std::uint64_t id = 0;       // hash of the ordered (task, mode) sequence
};

std::uint64_t column_id(const std::vector<Visit>& visits);

/// Schedules the sequence and packages it as a Column.
/// Throws std::logic_error if the sequence is not feasible.
Column make_column(const Instance& inst, Weights w, std::span<const SeqItem> seq);

}  // namespace m3rs
