// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <string>

#include "haptix/types.hpp"

namespace haptix {

struct Vec2 {
    double x;
    double y;
};

struct Vec3 {
    double x;
    double y;
    double z;
};

/// Actuator placement in normalized hand coordinates, palm down,
/// x rightward across the knuckles, y toward the fingertips.
struct HandLayout {
    std::array<Vec2, 10> positions; // positions[i] belongs to V(i+1)

    Vec2 position(ActuatorId id) const { return positions[id.index() - 1]; }

    static const HandLayout& standard();
};

/// Ordered activation triple (T1, T2, T3) encoding one planar direction.
std::array<ActuatorId, 3> control_points(Direction direction);

/// Planar bearing of a direction in the x-z plane (x rightward,
/// z toward the fingertips), unit length. Forward is exactly +z;
/// the diagonals are derived from the standard layout's control points.
Vec2 planar_bearing(Direction direction);

inline constexpr double kDefaultElevationThresholdDeg = 22.5;

/// Quantizes an arbitrary nonzero 3D vector to the nearest of the 15 cues.
/// Throws std::invalid_argument("degenerate direction") on the zero vector.
Cue quantize_vector(const Vec3& v,
                    double elevation_threshold_deg = kDefaultElevationThresholdDeg);

/// Canonical 3D vector of a cue: the direction's planar bearing tilted
/// +/-45 degrees for Up/Down, flat otherwise. quantize_vector maps it
/// back to the same cue.
Vec3 canonical_vector(const Cue& cue);

/// Plain-text table "id x y", one actuator per line.
std::string layout_text();

} // namespace haptix
