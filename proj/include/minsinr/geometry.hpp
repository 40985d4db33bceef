// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <vector>

namespace minsinr {

/// A point in the 2-D deployment plane, in meters.
struct Position {
    double x = 0.0;
    double y = 0.0;

    bool operator==(const Position&) const = default;
};

inline bool is_finite(Position p) {
    return std::isfinite(p.x) && std::isfinite(p.y);
}

/// Euclidean distance between two points.
inline double distance(Position p, Position q) {
    return std::hypot(p.x - q.x, p.y - q.y);
}

/// Point at parameter t along the segment a -> b (t = 0 gives a, t = 1 gives b).
inline Position lerp(Position a, Position b, double t) {
    return {a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
}

/// K points spaced evenly on the circle of radius delta around center,
/// starting on the +x axis and proceeding counter-clockwise.
/// Throws ValidationError for delta <= 0 or k < 3.
std::vector<Position> candidate_points(Position center, double delta, int k);

} // namespace minsinr
