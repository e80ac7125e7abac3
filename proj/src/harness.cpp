#include "jamguard/harness.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>

#include "jamguard/errors.hpp"

namespace jamguard {

using nlohmann::json;

std::uint64_t resolve_seed(std::optional<std::uint64_t> cli_seed,
                           std::optional<std::uint64_t> config_seed) {
    if (cli_seed) {
        return *cli_seed;
    }
    if (config_seed) {
        return *config_seed;
    }
    if (const char* env = std::getenv("JAMGUARD_SEED")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0') {
            return v;
        }
        throw config_error("JAMGUARD_SEED: not a valid unsigned integer: '" + std::string(env) +
                           "'");
    }
    return 0;
}

ThresholdCurve resolve_curve(const ScenarioConfig& cfg, std::uint64_t seed, bool* from_sweep) {
    if (from_sweep) {
        *from_sweep = false;
    }
    const std::uint64_t fp = link_fingerprint(cfg.link_params);
    if (cfg.detector.curve_path) {
        ThresholdCurve curve = load_curve(*cfg.detector.curve_path);
        if (curve.link_fingerprint() != fp) {
            throw config_error("detector.curve: '" + *cfg.detector.curve_path +
                               "' was calibrated against different link parameters");
        }
        return curve;
    }
    const SweepSpec& sw = *cfg.detector.sweep;
    const std::uint64_t sweep_seed = sw.seed.value_or(seed);
    auto samples =
        run_sweep(cfg.link_params, sw.d_min, sw.d_max, sw.step, sw.n_packets, sweep_seed);
    const MarginPolicy policy{cfg.detector.z,
                              cfg.detector.n_runtime.value_or(cfg.sim.attempts_per_epoch)};
    if (from_sweep) {
        *from_sweep = true;
    }
    return build_threshold_curve(std::move(samples), policy, cfg.link_params.d_max, fp);
}

ExperimentResult run_experiment(const ScenarioConfig& cfg,
                                std::optional<std::uint64_t> seed_override) {
    const std::uint64_t seed = resolve_seed(seed_override, cfg.seed);
    bool from_sweep = false;
    ThresholdCurve curve = resolve_curve(cfg, seed, &from_sweep);
    SimTrace trace = run_scenario(cfg, curve, seed);
    MetricsReport report = compute_metrics(trace, cfg);
    return ExperimentResult{seed, std::move(curve), from_sweep, std::move(trace),
                            std::move(report)};
}

namespace {

// Set a dotted path like "detector.z" or "jammers[0].eps_jmax" in a config.
void set_json_path(json& root, const std::string& path, const json& value) {
    json* cur = &root;
    std::size_t pos = 0;
    while (pos < path.size()) {
        std::size_t dot = path.find('.', pos);
        if (dot == std::string::npos) {
            dot = path.size();
        }
        std::string seg = path.substr(pos, dot - pos);
        std::optional<std::size_t> index;
        if (const auto bracket = seg.find('['); bracket != std::string::npos) {
            if (seg.back() != ']') {
                throw config_error("sweep_axes path: malformed segment '" + seg + "'");
            }
            index = std::stoul(seg.substr(bracket + 1, seg.size() - bracket - 2));
            seg = seg.substr(0, bracket);
        }
        if (!cur->is_object()) {
            throw config_error("sweep_axes path '" + path + "': '" + seg +
                               "' is not inside an object");
        }
        json& child = (*cur)[seg];
        if (index) {
            if (!child.is_array() || *index >= child.size()) {
                throw config_error("sweep_axes path '" + path + "': index out of range");
            }
            cur = &child.at(*index);
        } else {
            cur = &child;
        }
        pos = dot + 1;
    }
    *cur = value;
}

std::string value_label(const json& v) {
    std::string s = v.is_string() ? v.get<std::string>() : v.dump();
    for (char& c : s) {
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '.' && c != '-' && c != '_') {
            c = '-';
        }
    }
    return s;
}

std::string leaf_name(const std::string& path) {
    const auto dot = path.rfind('.');
    return dot == std::string::npos ? path : path.substr(dot + 1);
}

} // namespace

std::size_t sweep_batch(const json& base_config, const std::filesystem::path& out_dir,
                        EmitFormats formats, std::optional<std::uint64_t> seed_override) {
    // Validate the base once; the axes live in the config itself.
    const ScenarioConfig base = parse_scenario(base_config);
    if (base.sweep_axes.empty()) {
        throw config_error("sweep_axes: required (non-empty) for the sweep subcommand");
    }

    const auto& axes = base.sweep_axes;
    std::vector<std::size_t> idx(axes.size(), 0);
    json index = json::array();
    std::size_t runs = 0;
    for (;;) {
        json cfg_json = base_config;
        cfg_json.erase("sweep_axes");
        std::string dir_name;
        json overrides = json::object();
        for (std::size_t a = 0; a < axes.size(); ++a) {
            const json& value = axes[a].values[idx[a]];
            set_json_path(cfg_json, axes[a].path, value);
            overrides[axes[a].path] = value;
            if (!dir_name.empty()) {
                dir_name += '_';
            }
            dir_name += leaf_name(axes[a].path) + "=" + value_label(value);
        }

        const ScenarioConfig cfg = parse_scenario(cfg_json);
        const ExperimentResult result = run_experiment(cfg, seed_override);
        emit_report(result.trace, result.report, cfg, out_dir / dir_name, formats,
                    result.curve_from_sweep ? &result.curve : nullptr);
        index.push_back({{"dir", dir_name}, {"overrides", overrides}, {"seed", result.seed}});
        ++runs;

        std::size_t a = 0;
        for (; a < axes.size(); ++a) {
            if (++idx[a] < axes[a].values.size()) {
                break;
            }
            idx[a] = 0;
        }
        if (a == axes.size()) {
            break;
        }
    }

    std::ofstream out(out_dir / "sweep_index.json", std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write: " + (out_dir / "sweep_index.json").string());
    }
    out << index.dump(2) << '\n';
    return runs;
}

} // namespace jamguard
