#pragma once

#include "m3rs/types.hpp"

namespace m3rs {

struct OracleResult {
    double objective = 0.0;
    Solution solution;
};

/// Exhaustive ground truth for tiny instances: enumerates every ordered
/// partition of every task subset across the agents together with every
/// mode combination, keeping the feasible maximum. No bounding of any
/// kind, only prefix feasibility pruning. Throws std::invalid_argument
/// when the instance has more than 8 tasks.
OracleResult enumerate_optimal(const Instance& inst, Weights w);

}  // namespace m3rs
