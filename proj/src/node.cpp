#include "jamguard/node.hpp"

#include <algorithm>
#include <stdexcept>

namespace jamguard {

Vec3 position_at(const NodeSpec& node, double t) {
    if (node.waypoints.empty()) {
        throw std::out_of_range("node '" + node.id + "' has no waypoints");
    }
    const auto& wps = node.waypoints;
    if (t < wps.front().t || t > wps.back().t) {
        throw std::out_of_range("t=" + std::to_string(t) + " outside waypoint span of node '" +
                                node.id + "' [" + std::to_string(wps.front().t) + ", " +
                                std::to_string(wps.back().t) + "]");
    }
    // First waypoint with time >= t; exact hits return the waypoint itself.
    auto it = std::lower_bound(wps.begin(), wps.end(), t,
                               [](const Waypoint& w, double tt) { return w.t < tt; });
    if (it->t == t) {
        return it->pos;
    }
    const auto& hi = *it;
    const auto& lo = *(it - 1);
    const double s = (t - lo.t) / (hi.t - lo.t);
    return lerp(lo.pos, hi.pos, s);
}

const char* to_string(NodeRole role) {
    return role == NodeRole::RangingNode ? "ranging-node" : "jammer-host";
}

} // namespace jamguard
