#include <doctest.h>

#include <cmath>

#include "uavrelay/geometry.hpp"

using namespace uavrelay;

TEST_CASE("cartesian transform: axes and hand values") {
    const Waypoint origin = cartesian_from_polar({0.0, 0.0, 0.0});
    CHECK(origin.x == 0.0);
    CHECK(origin.y == 0.0);
    CHECK(origin.z == 0.0);

    const Waypoint unit = cartesian_from_polar({1.0, 0.0, M_PI / 2});
    CHECK(unit.x == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(unit.y == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(unit.z == doctest::Approx(1.0).epsilon(1e-12));

    const Waypoint w = cartesian_from_polar({2.0, M_PI / 2, M_PI / 6});
    CHECK(w.x == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(w.y == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(w.z == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("hop distances: degenerate orbit radius collapses to d") {
    for (double theta : {0.0, 1.0, 3.0})
        for (double phi : {0.0, 0.7}) {
            const LinkGeometry g = hop_distances(100.0, {0.0, theta, phi});
            CHECK(g.d_a == 100.0);
            CHECK(g.d_b == 100.0);
        }
}

TEST_CASE("hop distances: hand values") {
    const LinkGeometry side = hop_distances(100.0, {50.0, M_PI / 2, 0.0});
    CHECK(side.d_a == doctest::Approx(std::sqrt(12500.0)).epsilon(1e-12));
    CHECK(side.d_b == doctest::Approx(std::sqrt(12500.0)).epsilon(1e-12));
    CHECK(side.d_a == doctest::Approx(111.8034).epsilon(1e-6));

    const LinkGeometry inline_pos = hop_distances(100.0, {50.0, 0.0, 0.0});
    CHECK(inline_pos.d_a == doctest::Approx(50.0).epsilon(1e-12));
    CHECK(inline_pos.d_b == doctest::Approx(150.0).epsilon(1e-12));
}

TEST_CASE("hop distances: domain errors") {
    CHECK_THROWS_AS(hop_distances(0.0, {1.0, 0.0, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(hop_distances(-5.0, {1.0, 0.0, 0.0}), std::invalid_argument);
    // UAV exactly on a user node.
    CHECK_THROWS_AS(hop_distances(100.0, {100.0, 0.0, 0.0}), std::domain_error);
}

TEST_CASE("trajectory sampling: constant position") {
    Trajectory t;
    t.waypoints = {{30.0, 0.5, 0.2}};
    t.duration = 4.0;
    t.slot_count = 4;
    const auto slots = sample_trajectory(200.0, t);
    REQUIRE(slots.size() == 4);
    for (const auto& s : slots) {
        CHECK(s.link.d_a == slots.front().link.d_a);
        CHECK(s.link.d_b == slots.front().link.d_b);
    }
    CHECK(slots.front().slot == 1);
    CHECK(slots.back().slot == 4);
    CHECK(t.slot_length() == doctest::Approx(1.0));
}

TEST_CASE("trajectory sampling: endpoint and linear interpolation") {
    Trajectory two;
    two.waypoints = {{0.0, 0.0, 0.0}, {50.0, 0.0, 0.0}};
    two.duration = 2.0;
    two.slot_count = 2;
    const auto ends = sample_trajectory(200.0, two);
    REQUIRE(ends.size() == 2);
    CHECK(ends[0].position.r == doctest::Approx(0.0));
    CHECK(ends[1].position.r == doctest::Approx(50.0));

    Trajectory five = two;
    five.waypoints = {{0.0, 0.0, 0.0}, {100.0, 0.0, 0.0}};
    five.slot_count = 5;
    const auto slots = sample_trajectory(200.0, five);
    REQUIRE(slots.size() == 5);
    const double expect[5] = {0.0, 25.0, 50.0, 75.0, 100.0};
    for (int i = 0; i < 5; ++i)
        CHECK(slots[i].position.r == doctest::Approx(expect[i]).epsilon(1e-12));
}

TEST_CASE("trajectory sampling: input validation") {
    Trajectory t;
    t.duration = 1.0;
    t.slot_count = 4;
    CHECK_THROWS_AS(sample_trajectory(100.0, t), std::invalid_argument);
    t.waypoints = {{10.0, 0.0, 0.0}};
    t.slot_count = 1;
    CHECK_THROWS_AS(sample_trajectory(100.0, t), std::invalid_argument);
}

TEST_CASE("circular orbit covers one revolution") {
    const Trajectory t = circular_orbit(50.0, 0.3, 8.0, 8);
    REQUIRE(t.waypoints.size() == 8);
    CHECK(t.waypoints[0].theta == doctest::Approx(0.0));
    CHECK(t.waypoints[4].theta == doctest::Approx(M_PI));
    for (const auto& wp : t.waypoints) {
        CHECK(wp.r == 50.0);
        CHECK(wp.phi == 0.3);
    }
}
