// SPDX-License-Identifier: Apache-2.0
#include <cmath>

#include "doctest.h"

#include "minsinr/errors.hpp"
#include "minsinr/geometry.hpp"
#include "minsinr/rng.hpp"

#include "oracle.hpp"

using minsinr::Position;

TEST_CASE("distance: axis-aligned and degenerate cases") {
    CHECK(minsinr::distance({0, 0}, {3, 4}) == doctest::Approx(5.0).epsilon(1e-15));
    CHECK(minsinr::distance({1, 1}, {1, 1}) == 0.0);
    CHECK(minsinr::distance({-10, 0}, {10, 0}) == doctest::Approx(20.0).epsilon(1e-15));
}

TEST_CASE("distance: symmetric, non-negative, triangle inequality") {
    minsinr::Rng rng(42);
    for (int i = 0; i < 200; ++i) {
        const Position a{rng.uniform(-50, 50), rng.uniform(-50, 50)};
        const Position b{rng.uniform(-50, 50), rng.uniform(-50, 50)};
        const Position c{rng.uniform(-50, 50), rng.uniform(-50, 50)};
        const double ab = minsinr::distance(a, b);
        CHECK(ab >= 0.0);
        CHECK(ab == minsinr::distance(b, a));
        CHECK(ab <= minsinr::distance(a, c) + minsinr::distance(c, b) + 1e-12);
        // sqrt-of-squares cross-check against the hypot-based implementation
        CHECK(ab == doctest::Approx(oracle::dist({a.x, a.y}, {b.x, b.y})).epsilon(1e-13));
    }
}

TEST_CASE("is_finite rejects NaN and infinities") {
    CHECK(minsinr::is_finite({0.0, 0.0}));
    CHECK_FALSE(minsinr::is_finite({std::nan(""), 0.0}));
    CHECK_FALSE(minsinr::is_finite({0.0, INFINITY}));
    CHECK_FALSE(minsinr::is_finite({-INFINITY, 1.0}));
}

TEST_CASE("lerp: endpoints and midpoint") {
    const Position a{-10, 0};
    const Position b{10, 0};
    CHECK(minsinr::lerp(a, b, 0.0) == a);
    CHECK(minsinr::lerp(a, b, 1.0) == b);
    CHECK(minsinr::lerp(a, b, 0.5) == Position{0, 0});
    CHECK(minsinr::lerp({0, 10}, {0, -10}, 0.35) == Position{0, 3.0});
}

TEST_CASE("candidate_points: quarter circle K=4") {
    const auto pts = minsinr::candidate_points({0, 0}, 1.0, 4);
    REQUIRE(pts.size() == 4);
    CHECK(pts[0].x == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(pts[0].y == doctest::Approx(0.0).scale(1).epsilon(1e-15));
    CHECK(pts[1].x == doctest::Approx(0.0).scale(1).epsilon(1e-15));
    CHECK(pts[1].y == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(pts[2].x == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(pts[3].y == doctest::Approx(-1.0).epsilon(1e-15));
}

TEST_CASE("candidate_points: first point on +x, counter-clockwise, exact radius") {
    const Position center{3.5, -1.25};
    const double delta = 0.25;
    const auto pts = minsinr::candidate_points(center, delta, 36);
    REQUIRE(pts.size() == 36);
    CHECK(pts[0].x == doctest::Approx(center.x + delta).epsilon(1e-15));
    CHECK(pts[0].y == doctest::Approx(center.y).epsilon(1e-15));
    double prev_angle = -1.0;
    for (const Position& p : pts) {
        CHECK(minsinr::distance(center, p) == doctest::Approx(delta).epsilon(1e-12));
        double angle = std::atan2(p.y - center.y, p.x - center.x);
        if (angle < -1e-12) {
            angle += 2.0 * 3.14159265358979323846;
        }
        CHECK(angle > prev_angle - 1e-12);
        prev_angle = angle;
    }
}

TEST_CASE("candidate_points: rejects bad arguments") {
    CHECK_THROWS_AS((void)minsinr::candidate_points({0, 0}, 0.0, 36),
                    minsinr::ValidationError);
    CHECK_THROWS_AS((void)minsinr::candidate_points({0, 0}, -1.0, 36),
                    minsinr::ValidationError);
    CHECK_THROWS_AS((void)minsinr::candidate_points({0, 0}, 1.0, 2),
                    minsinr::ValidationError);
}
