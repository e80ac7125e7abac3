#include "jamguard/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <unordered_map>

#include "jamguard/errors.hpp"

namespace jamguard {

using nlohmann::json;

namespace {

using Issues = std::vector<std::string>;

void err(Issues& issues, const std::string& path, const std::string& msg) {
    issues.push_back(path + ": " + msg);
}

void check_keys(const json& o, const std::set<std::string>& allowed, const std::string& path,
                Issues& issues) {
    for (auto it = o.begin(); it != o.end(); ++it) {
        if (!allowed.count(it.key())) {
            err(issues, path, "unknown key '" + it.key() + "'");
        }
    }
}

std::optional<double> get_num(const json& o, const char* k, const std::string& path,
                              Issues& issues) {
    if (!o.contains(k)) {
        return std::nullopt;
    }
    if (!o.at(k).is_number()) {
        err(issues, path + "." + k, "expected a number");
        return std::nullopt;
    }
    return o.at(k).get<double>();
}

std::optional<std::uint64_t> get_uint(const json& o, const char* k, const std::string& path,
                                      Issues& issues) {
    if (!o.contains(k)) {
        return std::nullopt;
    }
    if (!o.at(k).is_number_unsigned()) {
        err(issues, path + "." + k, "expected a non-negative integer");
        return std::nullopt;
    }
    return o.at(k).get<std::uint64_t>();
}

std::optional<std::string> get_str(const json& o, const char* k, const std::string& path,
                                   Issues& issues) {
    if (!o.contains(k)) {
        return std::nullopt;
    }
    if (!o.at(k).is_string()) {
        err(issues, path + "." + k, "expected a string");
        return std::nullopt;
    }
    return o.at(k).get<std::string>();
}

std::optional<Vec3> parse_vec3(const json& v, const std::string& path, Issues& issues) {
    if (!v.is_array() || v.size() != 3 || !v[0].is_number() || !v[1].is_number() ||
        !v[2].is_number()) {
        err(issues, path, "expected [x, y, z]");
        return std::nullopt;
    }
    Vec3 p{v[0].get<double>(), v[1].get<double>(), v[2].get<double>()};
    if (!is_finite(p)) {
        err(issues, path, "position must be finite");
        return std::nullopt;
    }
    return p;
}

std::vector<NodeSpec> parse_nodes(const json& j, Issues& issues) {
    std::vector<NodeSpec> nodes;
    if (!j.contains("nodes") || !j.at("nodes").is_array() || j.at("nodes").empty()) {
        err(issues, "nodes", "expected a non-empty array");
        return nodes;
    }
    std::set<std::string> seen;
    std::size_t idx = 0;
    for (const auto& nj : j.at("nodes")) {
        const std::string path = "nodes[" + std::to_string(idx++) + "]";
        NodeSpec node;
        if (!nj.is_object()) {
            err(issues, path, "expected an object");
            continue;
        }
        check_keys(nj, {"id", "role", "waypoints"}, path, issues);
        node.id = get_str(nj, "id", path, issues).value_or("");
        if (node.id.empty()) {
            err(issues, path + ".id", "required, non-empty");
        } else if (node.id.find_first_of(",\r\n") != std::string::npos) {
            err(issues, path + ".id", "must not contain commas or line breaks");
        } else if (!seen.insert(node.id).second) {
            err(issues, path + ".id", "duplicate node id '" + node.id + "'");
        }
        const std::string role = get_str(nj, "role", path, issues).value_or("ranging-node");
        if (role == "ranging-node") {
            node.role = NodeRole::RangingNode;
        } else if (role == "jammer-host") {
            node.role = NodeRole::JammerHost;
        } else {
            err(issues, path + ".role", "expected 'ranging-node' or 'jammer-host'");
        }
        if (!nj.contains("waypoints") || !nj.at("waypoints").is_array() ||
            nj.at("waypoints").empty()) {
            err(issues, path + ".waypoints", "expected a non-empty array");
        } else {
            std::size_t widx = 0;
            for (const auto& wj : nj.at("waypoints")) {
                const std::string wpath = path + ".waypoints[" + std::to_string(widx++) + "]";
                if (!wj.is_object()) {
                    err(issues, wpath, "expected {t, pos}");
                    continue;
                }
                check_keys(wj, {"t", "pos"}, wpath, issues);
                Waypoint w;
                const auto t = get_num(wj, "t", wpath, issues);
                if (!t || !std::isfinite(*t)) {
                    err(issues, wpath + ".t", "required finite number");
                    continue;
                }
                w.t = *t;
                if (!wj.contains("pos")) {
                    err(issues, wpath + ".pos", "required");
                    continue;
                }
                const auto pos = parse_vec3(wj.at("pos"), wpath + ".pos", issues);
                if (!pos) {
                    continue;
                }
                w.pos = *pos;
                if (!node.waypoints.empty() && w.t <= node.waypoints.back().t) {
                    err(issues, wpath + ".t", "waypoint times must be strictly increasing");
                    continue;
                }
                node.waypoints.push_back(w);
            }
        }
        nodes.push_back(std::move(node));
    }
    return nodes;
}

LinkParams parse_link_params(const json& j, Issues& issues) {
    LinkParams p;
    if (!j.contains("link_params")) {
        return p;
    }
    const auto& lj = j.at("link_params");
    const std::string path = "link_params";
    if (!lj.is_object()) {
        err(issues, path, "expected an object");
        return p;
    }
    check_keys(lj,
               {"eps_min", "eps_max", "d50", "slope", "shr_bits", "payload_bits", "bitrate",
                "d_max"},
               path, issues);
    p.eps_min = get_num(lj, "eps_min", path, issues).value_or(p.eps_min);
    p.eps_max = get_num(lj, "eps_max", path, issues).value_or(p.eps_max);
    p.d50 = get_num(lj, "d50", path, issues).value_or(p.d50);
    p.slope = get_num(lj, "slope", path, issues).value_or(p.slope);
    if (const auto v = get_uint(lj, "shr_bits", path, issues)) {
        p.shr_bits = static_cast<std::uint32_t>(*v);
    }
    if (const auto v = get_uint(lj, "payload_bits", path, issues)) {
        p.payload_bits = static_cast<std::uint32_t>(*v);
    }
    p.bitrate = get_num(lj, "bitrate", path, issues).value_or(p.bitrate);
    p.d_max = get_num(lj, "d_max", path, issues).value_or(p.d_max);

    if (!(p.eps_min >= 0.0 && p.eps_min < p.eps_max && p.eps_max <= 0.5)) {
        err(issues, path, "required: 0 <= eps_min < eps_max <= 0.5");
    }
    if (!(p.slope > 0.0)) {
        err(issues, path + ".slope", "must be > 0");
    }
    if (p.shr_bits < 1 || p.payload_bits < 1) {
        err(issues, path, "shr_bits and payload_bits must be >= 1");
    }
    if (!(p.bitrate > 0.0)) {
        err(issues, path + ".bitrate", "must be > 0");
    }
    if (!(p.d_max > 0.0)) {
        err(issues, path + ".d_max", "must be > 0");
    }
    return p;
}

JammerKind parse_kind(const std::string& s, const std::string& path, Issues& issues) {
    if (s == "constant") {
        return JammerKind::Constant;
    }
    if (s == "deceptive") {
        return JammerKind::Deceptive;
    }
    if (s == "random") {
        return JammerKind::Random;
    }
    if (s == "reactive") {
        return JammerKind::Reactive;
    }
    err(issues, path + ".kind", "expected one of constant|deceptive|random|reactive, got '" + s +
                                    "'");
    return JammerKind::Constant;
}

void check_prob(double v, const std::string& path, Issues& issues) {
    if (!(v >= 0.0 && v <= 1.0)) {
        err(issues, path, "probability must lie in [0, 1]");
    }
}

void check_pos(double v, const std::string& path, Issues& issues) {
    if (!(v > 0.0)) {
        err(issues, path, "must be > 0");
    }
}

} // namespace

ScenarioConfig parse_scenario(const json& j) {
    Issues issues;
    if (!j.is_object()) {
        throw config_error("config root: expected a JSON object");
    }
    check_keys(j,
               {"nodes", "links", "jammers", "link_params", "sim", "detector", "seed",
                "sweep_axes"},
               "config", issues);

    ScenarioConfig cfg;
    cfg.nodes = parse_nodes(j, issues);
    cfg.link_params = parse_link_params(j, issues);

    std::unordered_map<std::string, std::uint32_t> node_index;
    for (std::uint32_t i = 0; i < cfg.nodes.size(); ++i) {
        node_index.emplace(cfg.nodes[i].id, i);
    }

    // links
    if (!j.contains("links") || !j.at("links").is_array() || j.at("links").empty()) {
        err(issues, "links", "expected a non-empty array of [tx, rx] id pairs");
    } else {
        std::size_t idx = 0;
        for (const auto& lj : j.at("links")) {
            const std::string path = "links[" + std::to_string(idx++) + "]";
            if (!lj.is_array() || lj.size() != 2 || !lj[0].is_string() || !lj[1].is_string()) {
                err(issues, path, "expected [tx_id, rx_id]");
                continue;
            }
            const std::string tx = lj[0].get<std::string>();
            const std::string rx = lj[1].get<std::string>();
            bool ok = true;
            for (const auto& id : {tx, rx}) {
                auto it = node_index.find(id);
                if (it == node_index.end()) {
                    err(issues, path, "unknown node id '" + id + "'");
                    ok = false;
                } else if (cfg.nodes[it->second].role != NodeRole::RangingNode) {
                    err(issues, path, "node '" + id + "' is not a ranging-node");
                    ok = false;
                }
            }
            if (tx == rx) {
                err(issues, path, "link endpoints must differ");
                ok = false;
            }
            if (std::find(cfg.links.begin(), cfg.links.end(), std::pair{tx, rx}) !=
                cfg.links.end()) {
                err(issues, path, "duplicate link " + tx + "->" + rx);
                ok = false;
            }
            if (ok) {
                cfg.links.emplace_back(tx, rx);
                cfg.link_indices.emplace_back(node_index.at(tx), node_index.at(rx));
            }
        }
    }

    // sim
    {
        const std::string path = "sim";
        if (!j.contains("sim") || !j.at("sim").is_object()) {
            err(issues, path, "required object {duration, ...}");
        } else {
            const auto& sj = j.at("sim");
            check_keys(sj, {"duration", "epoch_length", "attempts_per_epoch", "n_min"}, path,
                       issues);
            cfg.sim.duration = get_num(sj, "duration", path, issues).value_or(0.0);
            cfg.sim.epoch_length =
                get_num(sj, "epoch_length", path, issues).value_or(cfg.sim.epoch_length);
            if (const auto v = get_uint(sj, "attempts_per_epoch", path, issues)) {
                cfg.sim.attempts_per_epoch = static_cast<std::uint32_t>(*v);
            }
            if (const auto v = get_uint(sj, "n_min", path, issues)) {
                cfg.sim.n_min = static_cast<std::uint32_t>(*v);
            }
        }
        if (!(cfg.sim.epoch_length > 0.0)) {
            err(issues, "sim.epoch_length", "must be > 0");
        } else if (cfg.sim.duration < cfg.sim.epoch_length) {
            err(issues, "sim.duration", "must cover at least one epoch");
        }
        if (cfg.sim.attempts_per_epoch < 1) {
            err(issues, "sim.attempts_per_epoch", "must be >= 1");
        }
    }

    // jammers
    if (j.contains("jammers")) {
        if (!j.at("jammers").is_array()) {
            err(issues, "jammers", "expected an array");
        } else {
            std::size_t idx = 0;
            for (const auto& jj : j.at("jammers")) {
                const std::string path = "jammers[" + std::to_string(idx++) + "]";
                if (!jj.is_object()) {
                    err(issues, path, "expected an object");
                    continue;
                }
                check_keys(jj,
                           {"kind", "node", "eps_jmax", "j50", "j_slope", "on_mean", "off_mean",
                            "pkt_rate", "pkt_airtime", "sense_prob", "sense_range",
                            "reaction_delay", "active_window"},
                           path, issues);
                JammerSpec spec;
                if (!jj.contains("kind")) {
                    err(issues, path + ".kind", "required");
                } else {
                    spec.kind = parse_kind(get_str(jj, "kind", path, issues).value_or(""), path,
                                           issues);
                }
                const std::string node_id = get_str(jj, "node", path, issues).value_or("");
                auto it = node_index.find(node_id);
                if (node_id.empty()) {
                    err(issues, path + ".node", "required");
                } else if (it == node_index.end()) {
                    err(issues, path + ".node", "unknown node id '" + node_id + "'");
                } else if (cfg.nodes[it->second].role != NodeRole::JammerHost) {
                    err(issues, path + ".node", "node '" + node_id + "' is not a jammer-host");
                } else {
                    spec.node = cfg.nodes[it->second];
                }
                spec.eps_jmax = get_num(jj, "eps_jmax", path, issues).value_or(spec.eps_jmax);
                spec.j50 = get_num(jj, "j50", path, issues).value_or(spec.j50);
                spec.j_slope = get_num(jj, "j_slope", path, issues).value_or(spec.j_slope);
                spec.on_mean = get_num(jj, "on_mean", path, issues).value_or(spec.on_mean);
                spec.off_mean = get_num(jj, "off_mean", path, issues).value_or(spec.off_mean);
                spec.pkt_rate = get_num(jj, "pkt_rate", path, issues).value_or(spec.pkt_rate);
                spec.pkt_airtime =
                    get_num(jj, "pkt_airtime", path, issues).value_or(spec.pkt_airtime);
                spec.sense_prob =
                    get_num(jj, "sense_prob", path, issues).value_or(spec.sense_prob);
                spec.sense_range =
                    get_num(jj, "sense_range", path, issues).value_or(spec.sense_range);
                spec.reaction_delay =
                    get_num(jj, "reaction_delay", path, issues).value_or(spec.reaction_delay);
                if (jj.contains("active_window")) {
                    const auto& aw = jj.at("active_window");
                    if (!aw.is_array() || aw.size() != 2 || !aw[0].is_number() ||
                        !aw[1].is_number()) {
                        err(issues, path + ".active_window", "expected [t_on, t_off]");
                    } else {
                        spec.active_window = {aw[0].get<double>(), aw[1].get<double>()};
                    }
                } else {
                    spec.active_window = {0.0, cfg.sim.duration};
                }
                check_prob(spec.eps_jmax, path + ".eps_jmax", issues);
                check_prob(spec.sense_prob, path + ".sense_prob", issues);
                check_pos(spec.j_slope, path + ".j_slope", issues);
                check_pos(spec.on_mean, path + ".on_mean", issues);
                check_pos(spec.off_mean, path + ".off_mean", issues);
                check_pos(spec.pkt_airtime, path + ".pkt_airtime", issues);
                check_pos(spec.sense_range, path + ".sense_range", issues);
                if (spec.pkt_rate < 0.0) {
                    err(issues, path + ".pkt_rate", "must be >= 0");
                }
                if (spec.reaction_delay < 0.0) {
                    err(issues, path + ".reaction_delay", "must be >= 0");
                }
                if (!(spec.active_window.t_on < spec.active_window.t_off)) {
                    err(issues, path + ".active_window", "requires t_on < t_off");
                }
                cfg.jammers.push_back(std::move(spec));
            }
        }
    }

    // detector
    {
        const std::string path = "detector";
        if (!j.contains("detector") || !j.at("detector").is_object()) {
            err(issues, path, "required object with either 'curve' or 'sweep'");
        } else {
            const auto& dj = j.at("detector");
            check_keys(dj, {"curve", "sweep", "z", "n_runtime"}, path, issues);
            cfg.detector.curve_path = get_str(dj, "curve", path, issues);
            if (dj.contains("sweep")) {
                const auto& swj = dj.at("sweep");
                const std::string spath = path + ".sweep";
                if (!swj.is_object()) {
                    err(issues, spath, "expected an object");
                } else {
                    check_keys(swj, {"d_min", "d_max", "step", "n_packets", "seed"}, spath,
                               issues);
                    SweepSpec sw;
                    sw.d_min = get_num(swj, "d_min", spath, issues).value_or(sw.d_min);
                    sw.d_max = get_num(swj, "d_max", spath, issues).value_or(sw.d_max);
                    sw.step = get_num(swj, "step", spath, issues).value_or(sw.step);
                    if (const auto v = get_uint(swj, "n_packets", spath, issues)) {
                        sw.n_packets = *v;
                    }
                    sw.seed = get_uint(swj, "seed", spath, issues);
                    if (!(sw.d_min < sw.d_max) || !(sw.step > 0.0) || sw.n_packets < 1) {
                        err(issues, spath, "requires d_min < d_max, step > 0, n_packets >= 1");
                    }
                    cfg.detector.sweep = sw;
                }
            }
            cfg.detector.z = get_num(dj, "z", path, issues).value_or(cfg.detector.z);
            if (const auto v = get_uint(dj, "n_runtime", path, issues)) {
                cfg.detector.n_runtime = static_cast<std::uint32_t>(*v);
            }
            if (!(cfg.detector.z >= 0.0)) {
                err(issues, path + ".z", "must be >= 0");
            }
            if (cfg.detector.curve_path.has_value() == cfg.detector.sweep.has_value()) {
                err(issues, path, "exactly one of 'curve' or 'sweep' is required");
            }
        }
    }

    cfg.seed = get_uint(j, "seed", "config", issues);

    // sweep_axes (used by the batch sweep subcommand only)
    if (j.contains("sweep_axes")) {
        if (!j.at("sweep_axes").is_array()) {
            err(issues, "sweep_axes", "expected an array");
        } else {
            std::size_t idx = 0;
            for (const auto& aj : j.at("sweep_axes")) {
                const std::string path = "sweep_axes[" + std::to_string(idx++) + "]";
                if (!aj.is_object() || !aj.contains("path") || !aj.at("path").is_string() ||
                    !aj.contains("values") || !aj.at("values").is_array() ||
                    aj.at("values").empty()) {
                    err(issues, path, "expected {path: string, values: non-empty array}");
                    continue;
                }
                SweepAxis axis;
                axis.path = aj.at("path").get<std::string>();
                for (const auto& v : aj.at("values")) {
                    axis.values.push_back(v);
                }
                cfg.sweep_axes.push_back(std::move(axis));
            }
        }
    }

    // Trajectory coverage. A single-waypoint node is stationary; it is
    // normalized to a two-point path spanning the whole run.
    for (std::size_t i = 0; i < cfg.nodes.size(); ++i) {
        auto& node = cfg.nodes[i];
        if (node.waypoints.empty()) {
            continue; // already reported
        }
        if (node.waypoints.size() == 1) {
            const Vec3 pos = node.waypoints.front().pos;
            node.waypoints = {{0.0, pos}, {std::max(cfg.sim.duration, 1.0), pos}};
            continue;
        }
        if (node.waypoints.front().t > 0.0 || node.waypoints.back().t < cfg.sim.duration) {
            err(issues, "nodes[" + std::to_string(i) + "].waypoints",
                "trajectory must cover [0, duration]");
        }
    }

    // Jammer node specs were copied before normalization; refresh them.
    for (auto& spec : cfg.jammers) {
        if (!spec.node.id.empty()) {
            spec.node = cfg.nodes[node_index.at(spec.node.id)];
        }
    }

    if (!issues.empty()) {
        throw config_error(std::move(issues));
    }
    return cfg;
}

json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot read config file: " + path.string());
    }
    try {
        json j;
        in >> j;
        return j;
    } catch (const json::exception& e) {
        throw config_error(path.string() + ": " + e.what());
    }
}

ScenarioConfig load_scenario(const std::filesystem::path& path) {
    return parse_scenario(read_json_file(path));
}

} // namespace jamguard
