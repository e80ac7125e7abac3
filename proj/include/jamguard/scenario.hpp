#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "jamguard/jammer.hpp"
#include "jamguard/link_model.hpp"
#include "jamguard/node.hpp"

namespace jamguard {

struct SimParams {
    double duration = 0.0;      // seconds
    double epoch_length = 1.0;  // seconds per detector decision
    std::uint32_t attempts_per_epoch = 50;
    std::uint32_t n_min = 20;
};

struct SweepSpec {
    double d_min = 5.0;
    double d_max = 30.0;
    double step = 0.5;
    std::uint64_t n_packets = 1000;
    std::optional<std::uint64_t> seed; // defaults to the scenario seed
};

/// Either a pre-built curve on disk or an inline calibration sweep.
struct DetectorConfig {
    std::optional<std::string> curve_path;
    std::optional<SweepSpec> sweep;
    double z = 4.0;
    std::optional<std::uint32_t> n_runtime; // defaults to attempts_per_epoch
};

/// One axis of the batch-sweep grid: a dotted config path and the values to
/// substitute there (cartesian product across axes).
struct SweepAxis {
    std::string path;
    std::vector<nlohmann::json> values;
};

struct ScenarioConfig {
    std::vector<NodeSpec> nodes;
    std::vector<std::pair<std::string, std::string>> links;        // node ids
    std::vector<std::pair<std::uint32_t, std::uint32_t>> link_indices; // resolved
    std::vector<JammerSpec> jammers;
    LinkParams link_params;
    SimParams sim;
    DetectorConfig detector;
    std::optional<std::uint64_t> seed;
    std::vector<SweepAxis> sweep_axes;

    std::uint64_t n_epochs() const {
        return static_cast<std::uint64_t>(sim.duration / sim.epoch_length + 1e-9);
    }
    std::string link_name(std::uint32_t link_index) const {
        return links[link_index].first + "->" + links[link_index].second;
    }
};

/// Parse and validate. Throws config_error carrying every issue found, each
/// message qualified with the config path that caused it.
ScenarioConfig parse_scenario(const nlohmann::json& j);

/// load_scenario = read file + parse_scenario.
ScenarioConfig load_scenario(const std::filesystem::path& path);

nlohmann::json read_json_file(const std::filesystem::path& path);

} // namespace jamguard
