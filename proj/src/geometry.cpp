// SPDX-License-Identifier: Apache-2.0
#include "minsinr/geometry.hpp"

#include <string>

#include "minsinr/errors.hpp"

namespace minsinr {

std::vector<Position> candidate_points(Position center, double delta, int k) {
    if (!(delta > 0.0)) {
        throw ValidationError("candidate_points: delta must be > 0, got " + std::to_string(delta));
    }
    if (k < 3) {
        throw ValidationError("candidate_points: candidate_count must be >= 3, got " + std::to_string(k));
    }
    constexpr double two_pi = 6.283185307179586476925286766559;
    std::vector<Position> points;
    points.reserve(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) {
        const double angle = two_pi * static_cast<double>(i) / static_cast<double>(k);
        points.push_back({center.x + delta * std::cos(angle),
                          center.y + delta * std::sin(angle)});
    }
    return points;
}

} // namespace minsinr
