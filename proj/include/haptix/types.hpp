// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace haptix {

/// One of the ten vibration motors on the glove, addressed V1..V10.
/// V1-V5 sit at the fingertips, V6-V8 between the fingers, V9-V10 at
/// the base of the palm.
class ActuatorId {
public:
    explicit constexpr ActuatorId(int index) : index_(index) {
        if (index < 1 || index > 10)
            throw std::invalid_argument("actuator index out of range 1..10");
    }

    constexpr int index() const { return index_; }

    friend constexpr bool operator==(ActuatorId, ActuatorId) = default;
    friend constexpr auto operator<=>(ActuatorId, ActuatorId) = default;

private:
    int index_;
};

enum class Direction {
    LeftToRight,
    RightToLeft,
    RearRightToFrontLeft,
    Forward,
    RearLeftToFrontRight,
};

inline constexpr std::array<Direction, 5> kAllDirections = {
    Direction::LeftToRight,      Direction::RightToLeft,
    Direction::RearRightToFrontLeft, Direction::Forward,
    Direction::RearLeftToFrontRight,
};

/// Vertical (y-axis) component of the 3D cue.
enum class Gradient { Up, Flat, Down };

inline constexpr std::array<Gradient, 3> kAllGradients = {
    Gradient::Up, Gradient::Flat, Gradient::Down,
};

enum class Scheme { RabbitSingle, RabbitDual, MotionIntensity };

inline constexpr std::array<Scheme, 3> kAllSchemes = {
    Scheme::RabbitSingle, Scheme::RabbitDual, Scheme::MotionIntensity,
};

/// One of the 15 communicable cues: planar direction plus gradient.
struct Cue {
    Direction direction;
    Gradient gradient;

    friend constexpr bool operator==(const Cue&, const Cue&) = default;
};

std::string_view to_token(Direction d);
std::string_view to_token(Gradient g);
std::string_view to_token(Scheme s);

Direction direction_from_token(std::string_view token);
Gradient gradient_from_token(std::string_view token);
Scheme scheme_from_token(std::string_view token);

} // namespace haptix
