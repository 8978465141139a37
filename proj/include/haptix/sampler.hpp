// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <string>
#include <vector>

#include "haptix/timeline.hpp"

namespace haptix {

struct RenderConfig {
    int rate = 1000;   // samples per second
    int precision = 4; // fractional digits of intensity in text output
};

/// Per-actuator intensity vector at one sample instant.
struct Frame {
    double t_ms;
    std::array<double, 10> intensities; // indexed by actuator - 1
};

/// Samples the timeline at the configured rate. Event membership is
/// left-closed/right-open: a frame at t carries an event's intensity iff
/// start <= t < start + duration. Frames run from t = 0 to the last
/// sample instant strictly before total_ms.
std::vector<Frame> render(const Timeline& timeline, const RenderConfig& config);

/// Byte-exact text form of the rendered stream:
///   HAPTIX/1 rate=<int> actuators=10
///   <t_ms>;<v1>;...;<v10>   (t with one fractional digit, v with
///                            exactly `precision` digits)
///   END
std::string render_text(const Timeline& timeline, const RenderConfig& config);

std::string frame_line(const Frame& frame, int precision);
std::string stream_header(const RenderConfig& config);

} // namespace haptix
