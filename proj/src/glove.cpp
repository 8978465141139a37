// SPDX-License-Identifier: Apache-2.0

#include "haptix/glove.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

namespace haptix {

namespace {

constexpr double kPi = std::numbers::pi;

double deg_to_rad(double deg) { return deg * kPi / 180.0; }

Vec2 normalized(Vec2 v) {
    const double n = std::hypot(v.x, v.y);
    return {v.x / n, v.y / n};
}

// Angular distance between two planar unit bearings, in radians.
double bearing_distance(Vec2 a, Vec2 b) {
    const double dot = a.x * b.x + a.y * b.y;
    return std::acos(std::clamp(dot, -1.0, 1.0));
}

} // namespace

const HandLayout& HandLayout::standard() {
    // Right hand, palm down, thumb leftmost. Fingertips high, the
    // inter-finger row at 0.65, palm base near 0.1.
    static const HandLayout layout{{{
        {0.08, 0.88},  // V1 thumb tip
        {0.30, 0.95},  // V2 index tip
        {0.45, 0.97},  // V3 middle tip
        {0.60, 0.94},  // V4 ring tip
        {0.74, 0.86},  // V5 pinky tip
        {0.375, 0.65}, // V6 index/middle
        {0.525, 0.65}, // V7 middle/ring
        {0.675, 0.65}, // V8 ring/pinky
        {0.33, 0.10},  // V9 palm base left
        {0.62, 0.10},  // V10 palm base right
    }}};
    return layout;
}

std::array<ActuatorId, 3> control_points(Direction direction) {
    auto v = [](int i) { return ActuatorId(i); };
    switch (direction) {
    case Direction::LeftToRight: return {v(6), v(7), v(8)};
    case Direction::RightToLeft: return {v(8), v(7), v(6)};
    case Direction::RearRightToFrontLeft: return {v(10), v(7), v(2)};
    case Direction::Forward: return {v(9), v(6), v(2)};
    case Direction::RearLeftToFrontRight: return {v(9), v(7), v(5)};
    }
    throw std::invalid_argument("bad direction");
}

Vec2 planar_bearing(Direction direction) {
    const HandLayout& layout = HandLayout::standard();
    switch (direction) {
    case Direction::LeftToRight: return {1.0, 0.0};
    case Direction::RightToLeft: return {-1.0, 0.0};
    case Direction::Forward: return {0.0, 1.0};
    case Direction::RearRightToFrontLeft:
    case Direction::RearLeftToFrontRight: {
        const auto cp = control_points(direction);
        const Vec2 from = layout.position(cp[0]);
        const Vec2 to = layout.position(cp[2]);
        // Hand x maps to world x, hand y (toward fingertips) to world z.
        return normalized({to.x - from.x, to.y - from.y});
    }
    }
    throw std::invalid_argument("bad direction");
}

Cue quantize_vector(const Vec3& v, double elevation_threshold_deg) {
    const double planar = std::hypot(v.x, v.z);
    const double norm = std::hypot(planar, v.y);
    if (norm == 0.0) throw std::invalid_argument("degenerate direction");

    const double elevation = std::atan2(v.y, planar);
    const double threshold = deg_to_rad(elevation_threshold_deg);
    Gradient gradient = Gradient::Flat;
    if (elevation > threshold)
        gradient = Gradient::Up;
    else if (elevation < -threshold)
        gradient = Gradient::Down;

    if (planar == 0.0) return {Direction::Forward, gradient};

    const Vec2 bearing = normalized({v.x, v.z});
    Direction best = kAllDirections[0];
    double best_dist = bearing_distance(bearing, planar_bearing(best));
    for (Direction d : kAllDirections) {
        const double dist = bearing_distance(bearing, planar_bearing(d));
        if (dist < best_dist) { // ties keep enum declaration order
            best = d;
            best_dist = dist;
        }
    }
    return {best, gradient};
}

Vec3 canonical_vector(const Cue& cue) {
    const Vec2 b = planar_bearing(cue.direction);
    double elevation = 0.0;
    if (cue.gradient == Gradient::Up) elevation = deg_to_rad(45.0);
    if (cue.gradient == Gradient::Down) elevation = -deg_to_rad(45.0);
    const double c = std::cos(elevation);
    return {b.x * c, std::sin(elevation), b.y * c};
}

std::string layout_text() {
    const HandLayout& layout = HandLayout::standard();
    std::string out = "actuator x y\n";
    for (int i = 1; i <= 10; ++i) {
        const Vec2 p = layout.position(ActuatorId(i));
        char line[64];
        std::snprintf(line, sizeof line, "V%d %.3f %.3f\n", i, p.x, p.y);
        out += line;
    }
    return out;
}

} // namespace haptix
