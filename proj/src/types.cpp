// SPDX-License-Identifier: Apache-2.0

#include "haptix/types.hpp"

namespace haptix {

std::string_view to_token(Direction d) {
    switch (d) {
    case Direction::LeftToRight: return "left-to-right";
    case Direction::RightToLeft: return "right-to-left";
    case Direction::RearRightToFrontLeft: return "rear-right-to-front-left";
    case Direction::Forward: return "forward";
    case Direction::RearLeftToFrontRight: return "rear-left-to-front-right";
    }
    throw std::invalid_argument("bad direction");
}

std::string_view to_token(Gradient g) {
    switch (g) {
    case Gradient::Up: return "up";
    case Gradient::Flat: return "flat";
    case Gradient::Down: return "down";
    }
    throw std::invalid_argument("bad gradient");
}

std::string_view to_token(Scheme s) {
    switch (s) {
    case Scheme::RabbitSingle: return "rabbit-single";
    case Scheme::RabbitDual: return "rabbit-dual";
    case Scheme::MotionIntensity: return "motion-intensity";
    }
    throw std::invalid_argument("bad scheme");
}

Direction direction_from_token(std::string_view token) {
    for (Direction d : kAllDirections)
        if (to_token(d) == token) return d;
    throw std::invalid_argument("unknown direction token: " + std::string(token));
}

Gradient gradient_from_token(std::string_view token) {
    for (Gradient g : kAllGradients)
        if (to_token(g) == token) return g;
    throw std::invalid_argument("unknown gradient token: " + std::string(token));
}

Scheme scheme_from_token(std::string_view token) {
    for (Scheme s : kAllSchemes)
        if (to_token(s) == token) return s;
    throw std::invalid_argument("unknown scheme token: " + std::string(token));
}

} // namespace haptix
