// SPDX-License-Identifier: Apache-2.0

#include "haptix/sampler.hpp"

#include <cstdio>
#include <stdexcept>

namespace haptix {

std::vector<Frame> render(const Timeline& timeline, const RenderConfig& config) {
    if (config.rate < 1) throw std::invalid_argument("sample rate must be >= 1");

    const double period = 1000.0 / config.rate;
    std::vector<Frame> frames;
    for (std::size_t k = 0; k * period < timeline.total_ms; ++k) {
        Frame frame{k * period, {}};
        for (const VibrationEvent& e : timeline.events)
            if (e.start_ms <= frame.t_ms && frame.t_ms < e.start_ms + e.duration_ms)
                frame.intensities[e.actuator.index() - 1] = e.intensity;
        frames.push_back(frame);
    }
    return frames;
}

std::string stream_header(const RenderConfig& config) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "HAPTIX/1 rate=%d actuators=10\n", config.rate);
    return buf;
}

std::string frame_line(const Frame& frame, int precision) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f", frame.t_ms);
    std::string line = buf;
    for (double v : frame.intensities) {
        std::snprintf(buf, sizeof buf, ";%.*f", precision, v);
        line += buf;
    }
    line += '\n';
    return line;
}

std::string render_text(const Timeline& timeline, const RenderConfig& config) {
    std::string out = stream_header(config);
    for (const Frame& frame : render(timeline, config))
        out += frame_line(frame, config.precision);
    out += "END\n";
    return out;
}

} // namespace haptix
