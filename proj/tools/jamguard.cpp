// Command-line front end: calibrate and run jamming-detection scenarios,
// batch-sweep parameter grids, and re-aggregate reports from emitted CSVs.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "jamguard/errors.hpp"
#include "jamguard/harness.hpp"

namespace {

jamguard::EmitFormats parse_formats(const std::string& spec) {
    jamguard::EmitFormats f{false, false};
    std::size_t pos = 0;
    while (pos <= spec.size()) {
        std::size_t comma = spec.find(',', pos);
        if (comma == std::string::npos) {
            comma = spec.size();
        }
        const std::string item = spec.substr(pos, comma - pos);
        if (item == "csv") {
            f.csv = true;
        } else if (item == "json") {
            f.json = true;
        } else if (!item.empty()) {
            throw jamguard::config_error("--format: unknown format '" + item +
                                         "' (expected csv and/or json)");
        }
        pos = comma + 1;
    }
    if (!f.csv && !f.json) {
        throw jamguard::config_error("--format: at least one of csv,json is required");
    }
    return f;
}

void print_summary(const jamguard::ExperimentResult& r) {
    const auto& g = r.report.global;
    std::printf("seed=%llu epochs=%llu detections=%llu false_positives=%llu",
                static_cast<unsigned long long>(r.seed),
                static_cast<unsigned long long>(g.epochs_total),
                static_cast<unsigned long long>(g.detections),
                static_cast<unsigned long long>(g.false_positives));
    if (g.fpr) {
        std::printf(" fpr=%.6g", *g.fpr);
    }
    if (g.tpr) {
        std::printf(" tpr=%.6g", *g.tpr);
    }
    std::printf("\n");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"IR-UWB ranging-link simulator with distance-adaptive jamming detection"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir = ".";
    std::string in_dir;
    std::string format_spec = "csv,json";
    std::optional<std::uint64_t> seed;

    auto add_common = [&](CLI::App* cmd, bool needs_config) {
        if (needs_config) {
            cmd->add_option("--config", config_path, "Scenario config (JSON)")
                ->required()
                ->check(CLI::ExistingFile);
        }
        cmd->add_option("--seed", seed,
                        "Seed override (precedence: --seed, config 'seed', JAMGUARD_SEED, 0)");
        cmd->add_option("--out", out_dir, "Output directory")->capture_default_str();
    };

    auto* calibrate = app.add_subcommand(
        "calibrate", "Run the attack-free distance sweep and write curve.csv (+ sidecar)");
    add_common(calibrate, true);

    auto* run = app.add_subcommand(
        "run", "Simulate one scenario and emit epochs.csv, attempts.csv and report.json");
    add_common(run, true);
    run->add_option("--format", format_spec, "Outputs to write: csv,json")
        ->capture_default_str();

    auto* sweep = app.add_subcommand(
        "sweep", "Run the scenario once per point of the config's sweep_axes grid");
    add_common(sweep, true);
    sweep->add_option("--format", format_spec, "Outputs to write: csv,json")
        ->capture_default_str();

    auto* report = app.add_subcommand("report", "Rebuild report.json from an emitted epochs.csv");
    report->add_option("--in", in_dir, "Directory holding epochs.csv")
        ->required()
        ->check(CLI::ExistingDirectory);
    report->add_option("--out", out_dir, "Output directory (default: --in)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (calibrate->parsed()) {
            const auto cfg = jamguard::load_scenario(config_path);
            if (!cfg.detector.sweep) {
                throw jamguard::config_error(
                    "detector.sweep: required by the calibrate subcommand");
            }
            const std::uint64_t eff_seed = jamguard::resolve_seed(seed, cfg.seed);
            const auto curve = jamguard::resolve_curve(cfg, eff_seed);
            std::filesystem::create_directories(out_dir);
            jamguard::save_curve(curve, std::filesystem::path(out_dir) / "curve.csv");
            std::printf("wrote %s (%zu knots, d_max=%g)\n",
                        (std::filesystem::path(out_dir) / "curve.csv").c_str(),
                        curve.knots().size(), curve.d_max());
        } else if (run->parsed()) {
            const auto formats = parse_formats(format_spec);
            const auto cfg = jamguard::load_scenario(config_path);
            const auto result = jamguard::run_experiment(cfg, seed);
            jamguard::emit_report(result.trace, result.report, cfg, out_dir, formats,
                                  result.curve_from_sweep ? &result.curve : nullptr);
            print_summary(result);
        } else if (sweep->parsed()) {
            const auto formats = parse_formats(format_spec);
            const auto base = jamguard::read_json_file(config_path);
            const std::size_t runs = jamguard::sweep_batch(base, out_dir, formats, seed);
            std::printf("%zu runs written under %s\n", runs, out_dir.c_str());
        } else if (report->parsed()) {
            const auto rows =
                jamguard::read_epochs_csv(std::filesystem::path(in_dir) / "epochs.csv");
            const auto metrics = jamguard::compute_metrics(rows);
            const std::filesystem::path dest =
                report->count("--out") ? std::filesystem::path(out_dir)
                                       : std::filesystem::path(in_dir);
            std::filesystem::create_directories(dest);
            jamguard::write_report_json(metrics, dest / "report.json");
            std::printf("wrote %s\n", (dest / "report.json").c_str());
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
