// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "haptix/decoder.hpp"
#include "haptix/encoder.hpp"
#include "haptix/timeline.hpp"

using namespace haptix;

namespace {

const TimingConstants kConstants;
const IntensityScale kScale = IntensityScale::build();

Decoded roundtrip(const Cue& cue, Scheme scheme) {
    const Timeline tl = encode(cue, scheme, kConstants, kScale);
    return decode(tl.events, kConstants, kScale);
}

} // namespace

TEST_CASE("exhaustive round trip over all 45 combinations") {
    for (Scheme s : kAllSchemes)
        for (Direction d : kAllDirections)
            for (Gradient g : kAllGradients) {
                const Decoded dec = roundtrip({d, g}, s);
                CHECK(dec.scheme == s);
                CHECK(dec.cue == Cue{d, g});
            }
}

TEST_CASE("round trip survives sub-tolerance intensity perturbation") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> jitter(-1e-7, 1e-7);
    for (Scheme s : kAllSchemes)
        for (Direction d : kAllDirections)
            for (Gradient g : kAllGradients) {
                Timeline tl = encode({d, g}, s, kConstants, kScale);
                for (auto& e : tl.events) e.intensity += jitter(rng);
                const Decoded dec = decode(tl.events, kConstants, kScale);
                CHECK(dec.scheme == s);
                CHECK(dec.cue == Cue{d, g});
            }
}

TEST_CASE("file round trip with the widened 1e-4 tolerance") {
    for (Scheme s : kAllSchemes)
        for (Direction d : kAllDirections)
            for (Gradient g : kAllGradients) {
                const Timeline tl = encode({d, g}, s, kConstants, kScale);
                const Timeline parsed = timeline_from_json(to_json(tl));
                const Decoded dec =
                    decode(parsed.events, kConstants, kScale, {1e-4});
                CHECK(dec.scheme == s);
                CHECK(dec.cue == Cue{d, g});
            }
}

TEST_CASE("reversed onset order flips the decoded direction") {
    Timeline tl = encode({Direction::LeftToRight, Gradient::Up},
                         Scheme::RabbitSingle, kConstants, kScale);
    for (auto& e : tl.events)
        e.start_ms = tl.total_ms - (e.start_ms + e.duration_ms);
    const Decoded dec = decode(tl.events, kConstants, kScale);
    CHECK(dec.cue.direction == Direction::RightToLeft);
}

TEST_CASE("single-pulse blocks without overlap match no gradient") {
    std::vector<VibrationEvent> events = {
        {ActuatorId(6), 0.0, 450.0, 0.5},
        {ActuatorId(7), 500.0, 450.0, 0.5},
        {ActuatorId(8), 1000.0, 450.0, 0.5},
    };
    CHECK_THROWS_WITH_AS(decode(events, kConstants, kScale), "unknown gradient",
                         std::runtime_error);
}

TEST_CASE("actuator sets that match no direction are rejected") {
    std::vector<VibrationEvent> events = {
        {ActuatorId(1), 0.0, 125.0, 0.5},
        {ActuatorId(3), 300.0, 125.0, 0.5},
        {ActuatorId(4), 600.0, 125.0, 0.5},
    };
    CHECK_THROWS_WITH_AS(decode(events, kConstants, kScale), "unknown direction",
                         std::runtime_error);
    events.pop_back();
    CHECK_THROWS_WITH_AS(decode(events, kConstants, kScale), "unknown direction",
                         std::runtime_error);
}

TEST_CASE("empty input and per-actuator overlap are errors") {
    CHECK_THROWS_AS(decode({}, kConstants, kScale), std::runtime_error);
    const std::vector<VibrationEvent> overlapping = {
        {ActuatorId(6), 0.0, 125.0, 0.5},
        {ActuatorId(6), 50.0, 125.0, 0.5},
    };
    CHECK_THROWS_AS(decode(overlapping, kConstants, kScale),
                    std::invalid_argument);
}

TEST_CASE("off-scale uniform intensity is not guessed as rabbit-single") {
    Timeline tl = encode({Direction::Forward, Gradient::Flat},
                         Scheme::RabbitSingle, kConstants, kScale);
    for (auto& e : tl.events) e.intensity = 0.777; // no ladder level
    CHECK_THROWS_WITH_AS(decode(tl.events, kConstants, kScale),
                         "unknown gradient", std::runtime_error);
}
