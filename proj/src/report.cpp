#include "jamguard/report.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "jamguard/errors.hpp"

namespace jamguard {

using nlohmann::ordered_json;

std::string fmt_g9(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

namespace {

std::string opt_cell(const std::optional<double>& v) { return v ? fmt_g9(*v) : std::string{}; }

// Ratios pass through the same 9-significant-digit representation as the
// CSVs, so the JSON and CSV views of one quantity always agree.
ordered_json json_ratio(const std::optional<double>& v) {
    if (!v) {
        return nullptr;
    }
    return std::stod(fmt_g9(*v));
}

std::ofstream open_out(const std::filesystem::path& p) {
    std::ofstream out(p, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write: " + p.string());
    }
    return out;
}

ordered_json metrics_json(const LinkMetrics& m, bool with_latencies) {
    ordered_json j;
    j["link"] = m.link;
    j["epochs_total"] = m.epochs_total;
    j["binary_verdicts"] = m.binary_verdicts;
    j["insufficient_count"] = m.insufficient_count;
    j["truth_positive_epochs"] = m.truth_positive_epochs;
    j["truth_positive_binary"] = m.truth_positive_binary;
    j["truth_negative_binary"] = m.truth_negative_binary;
    j["detections"] = m.detections;
    j["true_positives"] = m.true_positives;
    j["false_positives"] = m.false_positives;
    j["fpr"] = json_ratio(m.fpr);
    j["tpr"] = json_ratio(m.tpr);
    if (with_latencies) {
        j["activation_epochs"] = m.activation_epochs;
        ordered_json lat = ordered_json::array();
        for (const auto& l : m.detection_latency_epochs) {
            if (l) {
                lat.push_back(*l);
            } else {
                lat.push_back(nullptr);
            }
        }
        j["detection_latency_epochs"] = lat;
    }
    return j;
}

} // namespace

void write_report_json(const MetricsReport& report, const std::filesystem::path& path) {
    ordered_json j;
    j["global"] = metrics_json(report.global, /*with_latencies=*/false);
    j["links"] = ordered_json::array();
    for (const auto& m : report.links) {
        j["links"].push_back(metrics_json(m, /*with_latencies=*/true));
    }
    auto out = open_out(path);
    out << j.dump(2) << '\n';
    if (!out.flush()) {
        throw std::runtime_error("write failed: " + path.string());
    }
}

void emit_report(const SimTrace& trace, const MetricsReport& report, const ScenarioConfig& cfg,
                 const std::filesystem::path& out_dir, EmitFormats formats,
                 const ThresholdCurve* curve_if_swept) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) {
        throw std::runtime_error("cannot create output directory " + out_dir.string() + ": " +
                                 ec.message());
    }

    if (formats.csv) {
        {
            auto out = open_out(out_dir / "epochs.csv");
            out << "epoch,t_s,link,d_m,pdr,ber,bpr,psr,thr,verdict,truth,n_sent\n";
            for (const auto& e : trace.epochs) {
                const auto& v = e.verdict;
                out << v.epoch_index << ',' << fmt_g9(e.t_start) << ','
                    << cfg.link_name(e.link_index) << ',' << fmt_g9(v.d_used) << ','
                    << opt_cell(pdr(e.stats)) << ',' << opt_cell(ber(e.stats)) << ','
                    << opt_cell(bpr(e.stats)) << ',' << opt_cell(psr(e.stats)) << ','
                    << fmt_g9(v.thr) << ',' << to_string(v.verdict) << ',' << (v.truth ? 1 : 0)
                    << ',' << e.stats.sent << '\n';
            }
            if (!out.flush()) {
                throw std::runtime_error("write failed: " + (out_dir / "epochs.csv").string());
            }
        }
        {
            auto out = open_out(out_dir / "attempts.csv");
            out << "t_s,link,d_m,outcome,bit_errors,bits_total,jam_overlap\n";
            for (const auto& a : trace.attempts) {
                out << fmt_g9(a.t_start) << ',' << cfg.link_name(a.link_index) << ','
                    << fmt_g9(a.d) << ',' << to_string(a.outcome) << ',' << a.bit_errors << ','
                    << a.bits_total << ',' << fmt_g9(a.jam_overlap) << '\n';
            }
            if (!out.flush()) {
                throw std::runtime_error("write failed: " + (out_dir / "attempts.csv").string());
            }
        }
        if (!trace.jammers.empty()) {
            auto out = open_out(out_dir / "jammers.csv");
            out << "jammer,kind,emitted_on_s\n";
            for (const auto& j : trace.jammers) {
                out << j.node_id << ',' << to_string(j.kind) << ',' << fmt_g9(j.emitted_on_s)
                    << '\n';
            }
            if (!out.flush()) {
                throw std::runtime_error("write failed: " + (out_dir / "jammers.csv").string());
            }
        }
        if (curve_if_swept != nullptr) {
            save_curve(*curve_if_swept, out_dir / "curve.csv");
        }
    }
    if (formats.json) {
        write_report_json(report, out_dir / "report.json");
    }
}

std::vector<EpochOutcome> read_epochs_csv(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot read: " + path.string());
    }
    std::string line;
    if (!std::getline(in, line) ||
        line != "epoch,t_s,link,d_m,pdr,ber,bpr,psr,thr,verdict,truth,n_sent") {
        throw config_error(path.string() + ": unexpected epochs.csv header");
    }
    std::vector<EpochOutcome> rows;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) {
            continue;
        }
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            cells.push_back(cell);
        }
        if (line.back() == ',') {
            cells.emplace_back();
        }
        if (cells.size() != 12) {
            throw config_error(path.string() + ":" + std::to_string(lineno) +
                               ": expected 12 columns");
        }
        EpochOutcome row;
        row.epoch = std::stoull(cells[0]);
        row.link = cells[2];
        const std::string& verdict = cells[9];
        if (verdict == "Jamming") {
            row.verdict = Verdict::Jamming;
        } else if (verdict == "NoJamming") {
            row.verdict = Verdict::NoJamming;
        } else if (verdict == "Insufficient") {
            row.verdict = Verdict::Insufficient;
        } else {
            throw config_error(path.string() + ":" + std::to_string(lineno) +
                               ": unknown verdict '" + verdict + "'");
        }
        row.truth = cells[10] == "1";
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace jamguard
