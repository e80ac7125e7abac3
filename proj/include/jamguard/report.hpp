#pragma once

#include <filesystem>
#include <string>

#include "jamguard/metrics.hpp"
#include "jamguard/sim.hpp"

namespace jamguard {

struct EmitFormats {
    bool csv = true;
    bool json = true;
};

/// Write the run outputs into out_dir:
///   epochs.csv   one row per (epoch, link); empty cells for undefined ratios
///   attempts.csv one row per packet attempt
///   report.json  the metrics aggregation (always recomputable from epochs.csv)
///   jammers.csv  emission-time totals, when the scenario has jammers
///   curve.csv    the threshold curve (+ .meta.json sidecar), when swept inline
/// All files use LF line endings and a stable column order; trace decimals
/// carry up to 9 significant digits.
void emit_report(const SimTrace& trace, const MetricsReport& report, const ScenarioConfig& cfg,
                 const std::filesystem::path& out_dir, EmitFormats formats,
                 const ThresholdCurve* curve_if_swept);

/// Re-read the per-epoch outcomes from an epochs.csv produced by emit_report.
std::vector<EpochOutcome> read_epochs_csv(const std::filesystem::path& path);

void write_report_json(const MetricsReport& report, const std::filesystem::path& path);

/// Shortest-of-9-significant-digits decimal formatting used across the CSVs.
std::string fmt_g9(double v);

} // namespace jamguard
