#include "jamguard/metrics.hpp"

#include <map>

namespace jamguard {

namespace {

LinkMetrics aggregate_one(const std::string& link, const std::vector<const EpochOutcome*>& rows) {
    LinkMetrics m;
    m.link = link;

    bool prev_truth = false;
    for (const auto* rp : rows) {
        const auto& r = *rp;
        ++m.epochs_total;
        const bool binary = r.verdict != Verdict::Insufficient;
        if (binary) {
            ++m.binary_verdicts;
            (r.truth ? m.truth_positive_binary : m.truth_negative_binary) += 1;
        } else {
            ++m.insufficient_count;
        }
        if (r.truth) {
            ++m.truth_positive_epochs;
            if (!prev_truth) {
                m.activation_epochs.push_back(r.epoch);
            }
        }
        if (r.verdict == Verdict::Jamming) {
            ++m.detections;
            (r.truth ? m.true_positives : m.false_positives) += 1;
        }
        prev_truth = r.truth;
    }

    if (m.truth_negative_binary > 0) {
        m.fpr = static_cast<double>(m.false_positives) /
                static_cast<double>(m.truth_negative_binary);
    }
    if (m.truth_positive_binary > 0) {
        m.tpr =
            static_cast<double>(m.true_positives) / static_cast<double>(m.truth_positive_binary);
    }

    for (const std::uint64_t act : m.activation_epochs) {
        std::optional<std::uint64_t> latency;
        for (const auto* rp : rows) {
            if (rp->epoch >= act && rp->verdict == Verdict::Jamming) {
                latency = rp->epoch - act;
                break;
            }
        }
        m.detection_latency_epochs.push_back(latency);
    }
    return m;
}

} // namespace

MetricsReport compute_metrics(const std::vector<EpochOutcome>& rows) {
    // Group by link, keeping first-appearance order.
    std::vector<std::string> order;
    std::map<std::string, std::vector<const EpochOutcome*>> by_link;
    for (const auto& r : rows) {
        auto [it, inserted] = by_link.try_emplace(r.link);
        if (inserted) {
            order.push_back(r.link);
        }
        it->second.push_back(&r);
    }

    MetricsReport report;
    report.global.link = "*";
    for (const auto& name : order) {
        LinkMetrics m = aggregate_one(name, by_link.at(name));
        auto& g = report.global;
        g.epochs_total += m.epochs_total;
        g.binary_verdicts += m.binary_verdicts;
        g.insufficient_count += m.insufficient_count;
        g.truth_positive_epochs += m.truth_positive_epochs;
        g.truth_positive_binary += m.truth_positive_binary;
        g.truth_negative_binary += m.truth_negative_binary;
        g.detections += m.detections;
        g.true_positives += m.true_positives;
        g.false_positives += m.false_positives;
        report.links.push_back(std::move(m));
    }
    auto& g = report.global;
    if (g.truth_negative_binary > 0) {
        g.fpr = static_cast<double>(g.false_positives) /
                static_cast<double>(g.truth_negative_binary);
    }
    if (g.truth_positive_binary > 0) {
        g.tpr =
            static_cast<double>(g.true_positives) / static_cast<double>(g.truth_positive_binary);
    }
    return report;
}

MetricsReport compute_metrics(const SimTrace& trace, const ScenarioConfig& cfg) {
    std::vector<EpochOutcome> rows;
    rows.reserve(trace.epochs.size());
    for (const auto& e : trace.epochs) {
        rows.push_back({cfg.link_name(e.link_index), e.verdict.epoch_index, e.verdict.truth,
                        e.verdict.verdict});
    }
    return compute_metrics(rows);
}

} // namespace jamguard
