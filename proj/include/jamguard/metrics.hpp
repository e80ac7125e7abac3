#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jamguard/detector.hpp"
#include "jamguard/sim.hpp"

namespace jamguard {

/// The minimal per-epoch row the aggregation needs; exactly what epochs.csv
/// carries, so a report can always be rebuilt from the CSV alone.
struct EpochOutcome {
    std::string link;
    std::uint64_t epoch = 0;
    bool truth = false;
    Verdict verdict = Verdict::NoJamming;
};

struct LinkMetrics {
    std::string link;
    std::uint64_t epochs_total = 0;
    std::uint64_t binary_verdicts = 0; // Jamming or NoJamming
    std::uint64_t insufficient_count = 0;
    std::uint64_t truth_positive_epochs = 0;
    std::uint64_t truth_positive_binary = 0; // TPR denominator
    std::uint64_t truth_negative_binary = 0; // FPR denominator
    std::uint64_t detections = 0; // all Jamming verdicts
    std::uint64_t true_positives = 0;
    std::uint64_t false_positives = 0;
    std::optional<double> fpr; // false_positives / truth-negative binary epochs
    std::optional<double> tpr; // true_positives / truth-positive binary epochs
    // One entry per truth activation (rising edge of the truth flag, in epoch
    // order): the first Jamming verdict at or after it, as an epoch delta.
    std::vector<std::uint64_t> activation_epochs;
    std::vector<std::optional<std::uint64_t>> detection_latency_epochs;
};

struct MetricsReport {
    LinkMetrics global; // counters summed over links; no latencies
    std::vector<LinkMetrics> links;
};

/// Aggregate per-epoch outcomes. Rows of one link must appear in epoch order.
MetricsReport compute_metrics(const std::vector<EpochOutcome>& rows);

/// Convenience adapter over a finished trace.
MetricsReport compute_metrics(const SimTrace& trace, const ScenarioConfig& cfg);

} // namespace jamguard
