#pragma once

#include <string>
#include <vector>

#include "jamguard/geometry.hpp"

namespace jamguard {

enum class NodeRole { RangingNode, JammerHost };

struct Waypoint {
    double t = 0.0; // seconds
    Vec3 pos;

    bool operator==(const Waypoint&) const = default;
};

/// A platform following a piecewise-linear waypoint path.
/// Invariants: at least one waypoint, times strictly increasing, finite positions.
struct NodeSpec {
    std::string id;
    NodeRole role = NodeRole::RangingNode;
    std::vector<Waypoint> waypoints;

    bool operator==(const NodeSpec&) const = default;
};

/// Position at time t by linear interpolation between the bracketing waypoints.
/// Throws std::out_of_range when t lies outside the waypoint span.
Vec3 position_at(const NodeSpec& node, double t);

const char* to_string(NodeRole role);

} // namespace jamguard
