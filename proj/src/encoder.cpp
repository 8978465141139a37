// SPDX-License-Identifier: Apache-2.0

#include "haptix/encoder.hpp"

#include <algorithm>
#include <stdexcept>

#include "haptix/glove.hpp"

namespace haptix {

std::array<int, 3> pulse_counts(Gradient gradient) {
    switch (gradient) {
    case Gradient::Up: return {2, 4, 6};
    case Gradient::Flat: return {4, 4, 4};
    case Gradient::Down: return {6, 4, 2};
    }
    throw std::invalid_argument("bad gradient");
}

double soa(double d_ms) {
    if (d_ms <= 0.0) throw std::invalid_argument("vibration period must be positive");
    return 0.32 * d_ms + 47.3;
}

namespace {

void sort_events(Timeline& timeline) {
    std::sort(timeline.events.begin(), timeline.events.end(),
              [](const VibrationEvent& a, const VibrationEvent& b) {
                  if (a.start_ms != b.start_ms) return a.start_ms < b.start_ms;
                  return a.actuator < b.actuator;
              });
    double total = 0.0;
    for (const VibrationEvent& e : timeline.events)
        total = std::max(total, e.start_ms + e.duration_ms);
    timeline.total_ms = total;
}

// Shared pulse schedule of the two rabbit schemes. ISI and IBI are gaps:
// pulse j of a block starts at block_start + j * (bd + isi); the next
// block starts ibi after the previous block's last pulse ends.
Timeline encode_rabbit(const Cue& cue, Scheme scheme,
                       const TimingConstants& c, const IntensityScale& scale) {
    const auto points = control_points(cue.direction);
    const auto counts = pulse_counts(cue.gradient);

    std::array<double, 3> level;
    if (scheme == Scheme::RabbitDual) {
        const auto idx = gradient_levels(Scheme::RabbitDual, cue.gradient);
        for (int i = 0; i < 3; ++i) level[i] = scale.level(idx[i]);
    } else {
        level.fill(scale.level(c.uniform_level));
    }

    Timeline timeline{scheme, cue, {}, 0.0};
    double block_start = 0.0;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < counts[i]; ++j)
            timeline.events.push_back({points[i],
                                       block_start + j * (c.burst_ms + c.isi_ms),
                                       c.burst_ms, level[i]});
        const double block_end = timeline.events.back().start_ms + c.burst_ms;
        block_start = block_end + c.ibi_ms;
    }
    sort_events(timeline);
    return timeline;
}

Timeline encode_motion(const Cue& cue, const TimingConstants& c,
                       const IntensityScale& scale) {
    const auto points = control_points(cue.direction);
    const auto idx = gradient_levels(Scheme::MotionIntensity, cue.gradient);
    const double onset_gap = soa(c.motion_period_ms);

    Timeline timeline{Scheme::MotionIntensity, cue, {}, 0.0};
    for (int i = 0; i < 3; ++i)
        timeline.events.push_back({points[i], i * onset_gap,
                                   c.motion_period_ms, scale.level(idx[i])});
    sort_events(timeline);
    return timeline;
}

} // namespace

Timeline encode(const Cue& cue, Scheme scheme, const TimingConstants& constants,
                const IntensityScale& scale) {
    if (constants.burst_ms <= 0 || constants.isi_ms <= 0 ||
        constants.ibi_ms <= 0 || constants.motion_period_ms <= 0)
        throw std::invalid_argument("timing constants must be positive");

    if (scheme == Scheme::MotionIntensity)
        return encode_motion(cue, constants, scale);
    return encode_rabbit(cue, scheme, constants, scale);
}

} // namespace haptix
