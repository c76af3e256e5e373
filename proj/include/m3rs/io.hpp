#pragma once

#include <string>

#include <json.hpp>

#include "m3rs/types.hpp"

namespace m3rs::io {

// Instance files store the horizon in hours and windows in seconds; the
// in-memory Instance is all seconds. ordered_json keeps key order stable
// so emitted files are byte-reproducible.

nlohmann::ordered_json instance_to_json(const Instance& inst);
Instance instance_from_json(const nlohmann::json& j);

void write_instance(const Instance& inst, const std::string& path);
Instance read_instance(const std::string& path);

/// Solve metadata carried by solution files next to the Solution itself.
struct SolutionMeta {
    std::string instance;
    std::string method;
    double lambda = 0.0;
};

nlohmann::ordered_json solution_to_json(const Solution& sol, const Instance& inst,
                                        const SolutionMeta& meta);
Solution solution_from_json(const nlohmann::json& j, const Instance& inst,
                            SolutionMeta* meta = nullptr);

void write_solution(const Solution& sol, const Instance& inst,
                    const SolutionMeta& meta, const std::string& path);
Solution read_solution(const std::string& path, const Instance& inst,
                       SolutionMeta* meta = nullptr);

/// Wall time as stored in files: rounded to 0.1 s so reruns of the same
/// seeded solve emit identical bytes.
double quantize_time(double seconds);

}  // namespace m3rs::io
