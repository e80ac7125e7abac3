#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>

#include "jamguard/calibration.hpp"
#include "jamguard/metrics.hpp"
#include "jamguard/report.hpp"
#include "jamguard/scenario.hpp"
#include "jamguard/sim.hpp"

namespace jamguard {

struct ExperimentResult {
    std::uint64_t seed = 0;
    ThresholdCurve curve;
    bool curve_from_sweep = false;
    SimTrace trace;
    MetricsReport report;
};

/// Seed precedence: explicit CLI value, then the config's seed, then the
/// JAMGUARD_SEED environment variable, then 0.
std::uint64_t resolve_seed(std::optional<std::uint64_t> cli_seed,
                           std::optional<std::uint64_t> config_seed);

/// Load the configured curve from disk (its sidecar fingerprint must match
/// the scenario's link parameters) or run the inline calibration sweep.
ThresholdCurve resolve_curve(const ScenarioConfig& cfg, std::uint64_t seed,
                             bool* from_sweep = nullptr);

/// Calibrate (when inline), simulate, aggregate. Deterministic given
/// (config, seed).
ExperimentResult run_experiment(const ScenarioConfig& cfg,
                                std::optional<std::uint64_t> seed_override = {});

/// Run the config once per point of the cartesian grid spanned by its
/// sweep_axes, writing each run into its own subdirectory of out_dir.
/// Returns the number of runs executed.
std::size_t sweep_batch(const nlohmann::json& base_config, const std::filesystem::path& out_dir,
                        EmitFormats formats, std::optional<std::uint64_t> seed_override);

} // namespace jamguard
