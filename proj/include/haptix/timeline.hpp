// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "haptix/types.hpp"

namespace haptix {

/// Constant-intensity burst on one actuator. Times in milliseconds.
struct VibrationEvent {
    ActuatorId actuator;
    double start_ms;
    double duration_ms;
    double intensity;
};

struct Timeline {
    Scheme scheme;
    Cue cue;
    std::vector<VibrationEvent> events; // sorted by (start_ms, actuator)
    double total_ms;                    // max over events of start + duration
};

/// Timing constants of the three schemes. Milliseconds.
struct TimingConstants {
    double burst_ms = 125.0;         // BD, one rabbit pulse
    double isi_ms = 50.0;            // gap between pulses on one actuator
    double ibi_ms = 100.0;           // gap between actuator blocks
    double motion_period_ms = 450.0; // d, vibration period per actuator
    int uniform_level = 4;           // RabbitSingle intensity level index
};

/// Canonical JSON document: fixed key order, events sorted by
/// (start_ms, actuator), times with one fractional digit, intensities
/// with at most four. Byte-stable for a given timeline.
std::string to_json(const Timeline& timeline);

Timeline timeline_from_json(std::string_view json);

} // namespace haptix
