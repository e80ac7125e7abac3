#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "jamguard/node.hpp"
#include "jamguard/rng.hpp"

using namespace jamguard;

namespace {

NodeSpec line_node() {
    return NodeSpec{"n", NodeRole::RangingNode, {{0.0, {0, 0, 0}}, {10.0, {10, 0, 0}}}};
}

} // namespace

TEST_CASE("position_at hits waypoints exactly and interpolates between them") {
    const NodeSpec n = line_node();
    CHECK(position_at(n, 0.0) == Vec3{0, 0, 0});
    CHECK(position_at(n, 10.0) == Vec3{10, 0, 0});
    CHECK(position_at(n, 5.0) == Vec3{5, 0, 0});
}

TEST_CASE("position_at outside the waypoint span is an error") {
    const NodeSpec n = line_node();
    CHECK_THROWS_AS(position_at(n, 11.0), std::out_of_range);
    CHECK_THROWS_AS(position_at(n, -0.5), std::out_of_range);
}

TEST_CASE("position_at is continuous over the span") {
    NodeSpec n{"n",
               NodeRole::RangingNode,
               {{0.0, {0, 0, 0}}, {2.0, {4, -1, 3}}, {5.0, {-2, 2, 2}}, {9.0, {0, 0, 10}}}};
    RngStream rng(3, "continuity");
    for (int i = 0; i < 2000; ++i) {
        const double t = rng.uniform(1e-6, 9.0 - 1e-6);
        const double h = 1e-7;
        const Vec3 a = position_at(n, t - h);
        const Vec3 b = position_at(n, t + h);
        CHECK(distance(a, b) < 1e-5);
    }
}

TEST_CASE("distance basics") {
    CHECK(distance({0, 0, 0}, {0, 0, 0}) == 0.0);
    CHECK(distance({0, 0, 0}, {3, 4, 0}) == 5.0);
    CHECK(distance({1, 1, 1}, {2, 2, 2}) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));
}

TEST_CASE("distance is symmetric and non-negative") {
    RngStream rng(17, "dist");
    for (int i = 0; i < 1000; ++i) {
        const Vec3 a{rng.uniform(-50, 50), rng.uniform(-50, 50), rng.uniform(-50, 50)};
        const Vec3 b{rng.uniform(-50, 50), rng.uniform(-50, 50), rng.uniform(-50, 50)};
        CHECK(distance(a, b) == distance(b, a));
        CHECK(distance(a, b) >= 0.0);
    }
}
