#include "m3rs/io.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

#include "m3rs/core.hpp"

namespace m3rs::io {

using nlohmann::json;
using nlohmann::ordered_json;

double quantize_time(double seconds) {
    return std::round(seconds * 10.0) / 10.0;
}

ordered_json instance_to_json(const Instance& inst) {
    ordered_json j;
    j["name"] = inst.name;
    j["horizon_hours"] = inst.horizon / 3600.0;
    j["fleet"] = {
        {"count", inst.fleet.count},
        {"capacity", inst.fleet.capacity},
        {"speed", inst.fleet.speed},
        {"travel_energy_rate", inst.fleet.travel_energy_rate},
        {"depot", {inst.fleet.depot_x, inst.fleet.depot_y}},
    };
    ordered_json tasks = ordered_json::array();
    for (const auto& t : inst.tasks) {
        ordered_json modes = ordered_json::array();
        for (const auto& m : t.modes)
            modes.push_back({{"label", m.label},
                             {"service_s", m.service_time},
                             {"energy", m.energy},
                             {"quality", m.quality}});
        tasks.push_back({{"id", t.id},
                         {"pos", {t.x, t.y}},
                         {"window_s", {t.window_start, t.window_end}},
                         {"modes", std::move(modes)}});
    }
    j["tasks"] = std::move(tasks);
    return j;
}

Instance instance_from_json(const json& j) {
    Instance inst;
    try {
        inst.name = j.at("name").get<std::string>();
        inst.horizon = j.at("horizon_hours").get<double>() * 3600.0;
        const auto& f = j.at("fleet");
        inst.fleet.count = f.at("count").get<int>();
        inst.fleet.capacity = f.at("capacity").get<double>();
        inst.fleet.speed = f.at("speed").get<double>();
        inst.fleet.travel_energy_rate = f.at("travel_energy_rate").get<double>();
        inst.fleet.depot_x = f.at("depot").at(0).get<double>();
        inst.fleet.depot_y = f.at("depot").at(1).get<double>();
        for (const auto& jt : j.at("tasks")) {
            Task t;
            t.id = jt.at("id").get<int>();
            t.x = jt.at("pos").at(0).get<double>();
            t.y = jt.at("pos").at(1).get<double>();
            t.window_start = jt.at("window_s").at(0).get<double>();
            t.window_end = jt.at("window_s").at(1).get<double>();
            for (const auto& jm : jt.at("modes")) {
                Mode m;
                m.label = jm.at("label").get<std::string>();
                m.service_time = jm.at("service_s").get<double>();
                m.energy = jm.at("energy").get<double>();
                m.quality = jm.at("quality").get<double>();
                t.modes.push_back(std::move(m));
            }
            inst.tasks.push_back(std::move(t));
        }
    } catch (const json::exception& e) {
        throw std::runtime_error(std::string("instance schema: ") + e.what());
    }
    return inst;
}

ordered_json solution_to_json(const Solution& sol, const Instance& inst,
                              const SolutionMeta& meta) {
    const auto index = task_index_map(inst);
    ordered_json j;
    j["instance"] = meta.instance;
    j["lambda"] = meta.lambda;
    j["method"] = meta.method;
    j["status"] = status_name(sol.status);
    j["objective"] = sol.objective;
    j["compute_time_s"] = quantize_time(sol.compute_time);
    ordered_json routes = ordered_json::array();
    for (const auto& r : sol.routes) {
        ordered_json visits = ordered_json::array();
        for (const auto& v : r.visits) {
            auto it = index.find(v.task_id);
            if (it == index.end())
                throw std::invalid_argument("solution_to_json: unknown task id " +
                                            std::to_string(v.task_id));
            const Task& task = inst.tasks[it->second];
            if (v.mode_index < 0 ||
                v.mode_index >= static_cast<int>(task.modes.size()))
                throw std::invalid_argument("solution_to_json: bad mode index");
            visits.push_back({{"task", v.task_id},
                              {"mode_label", task.modes[v.mode_index].label},
                              {"arrival_s", v.arrival}});
        }
        routes.push_back({{"agent", r.agent},
                          {"visits", std::move(visits)},
                          {"return_s", r.return_time}});
    }
    j["routes"] = std::move(routes);
    return j;
}

Solution solution_from_json(const json& j, const Instance& inst,
                            SolutionMeta* meta) {
    const auto index = task_index_map(inst);
    Solution sol;
    try {
        if (meta) {
            meta->instance = j.at("instance").get<std::string>();
            meta->method = j.at("method").get<std::string>();
            meta->lambda = j.at("lambda").get<double>();
        }
        const std::string status = j.at("status").get<std::string>();
        if (status == "Optimal") sol.status = SolveStatus::Optimal;
        else if (status == "Feasible") sol.status = SolveStatus::Feasible;
        else if (status == "Infeasible") sol.status = SolveStatus::Infeasible;
        else if (status == "TimedOut") sol.status = SolveStatus::TimedOut;
        else throw std::runtime_error("unknown status '" + status + "'");
        sol.objective = j.at("objective").get<double>();
        sol.compute_time = j.at("compute_time_s").get<double>();
        for (const auto& jr : j.at("routes")) {
            Route r;
            r.agent = jr.at("agent").get<int>();
            r.return_time = jr.at("return_s").get<double>();
            for (const auto& jv : jr.at("visits")) {
                Visit v;
                v.task_id = jv.at("task").get<int>();
                v.arrival = jv.at("arrival_s").get<double>();
                const std::string label = jv.at("mode_label").get<std::string>();
                auto it = index.find(v.task_id);
                if (it == index.end())
                    throw std::runtime_error("solution references unknown task id " +
                                             std::to_string(v.task_id));
                const Task& task = inst.tasks[it->second];
                v.mode_index = -1;
                for (int m = 0; m < static_cast<int>(task.modes.size()); ++m)
                    if (task.modes[m].label == label) {
                        v.mode_index = m;
                        break;
                    }
                if (v.mode_index < 0)
                    throw std::runtime_error("task " + std::to_string(v.task_id) +
                                             " has no mode labelled '" + label + "'");
                r.visits.push_back(v);
            }
            sol.routes.push_back(std::move(r));
        }
    } catch (const json::exception& e) {
        throw std::runtime_error(std::string("solution schema: ") + e.what());
    }
    return sol;
}

namespace {

json load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    json j;
    in >> j;  // throws json::parse_error on malformed input
    return j;
}

void dump_file(const ordered_json& j, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << j.dump(2) << '\n';
}

}  // namespace

void write_instance(const Instance& inst, const std::string& path) {
    dump_file(instance_to_json(inst), path);
}

Instance read_instance(const std::string& path) {
    return instance_from_json(load_file(path));
}

void write_solution(const Solution& sol, const Instance& inst,
                    const SolutionMeta& meta, const std::string& path) {
    dump_file(solution_to_json(sol, inst, meta), path);
}

Solution read_solution(const std::string& path, const Instance& inst,
                       SolutionMeta* meta) {
    return solution_from_json(load_file(path), inst, meta);
}

}  // namespace m3rs::io
