// SPDX-License-Identifier: Apache-2.0

#include "haptix/decoder.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <vector>

#include "haptix/glove.hpp"

namespace haptix {

namespace {

struct Block {
    ActuatorId actuator;
    std::vector<VibrationEvent> events; // sorted by start
    double first_onset() const { return events.front().start_ms; }
    double last_offset() const {
        double end = 0.0;
        for (const auto& e : events) end = std::max(end, e.start_ms + e.duration_ms);
        return end;
    }
};

bool close(double a, double b, double tol) { return std::fabs(a - b) <= tol; }

// Per-block intensity; throws if the block mixes intensities beyond tol.
double block_intensity(const Block& block, double tol) {
    const double v = block.events.front().intensity;
    for (const auto& e : block.events)
        if (!close(e.intensity, v, tol))
            throw std::runtime_error("unknown gradient");
    return v;
}

Gradient gradient_from_counts(const std::array<int, 3>& counts) {
    if (counts == std::array<int, 3>{2, 4, 6}) return Gradient::Up;
    if (counts == std::array<int, 3>{4, 4, 4}) return Gradient::Flat;
    if (counts == std::array<int, 3>{6, 4, 2}) return Gradient::Down;
    throw std::runtime_error("unknown gradient");
}

bool triple_matches(const std::array<double, 3>& intensities, Scheme scheme,
                    Gradient gradient, const IntensityScale& scale, double tol) {
    const auto idx = gradient_levels(scheme, gradient);
    for (int i = 0; i < 3; ++i)
        if (!close(intensities[i], scale.level(idx[i]), tol)) return false;
    return true;
}

} // namespace

Decoded decode(std::span<const VibrationEvent> events,
               const TimingConstants& constants, const IntensityScale& scale,
               const DecodeOptions& options) {
    if (events.empty()) throw std::runtime_error("empty timeline");

    std::map<int, Block> by_actuator;
    for (const VibrationEvent& e : events) {
        auto [it, inserted] =
            by_actuator.try_emplace(e.actuator.index(), Block{e.actuator, {}});
        it->second.events.push_back(e);
    }

    std::vector<Block> blocks;
    for (auto& [idx, block] : by_actuator) {
        std::sort(block.events.begin(), block.events.end(),
                  [](const auto& a, const auto& b) { return a.start_ms < b.start_ms; });
        for (size_t i = 1; i < block.events.size(); ++i)
            if (block.events[i].start_ms < block.events[i - 1].start_ms +
                                               block.events[i - 1].duration_ms)
                throw std::invalid_argument("overlapping events on one actuator");
        blocks.push_back(std::move(block));
    }

    // Direction: actuators in order of first onset must equal a
    // control-point triple.
    std::sort(blocks.begin(), blocks.end(), [](const Block& a, const Block& b) {
        return a.first_onset() < b.first_onset();
    });
    if (blocks.size() != 3) throw std::runtime_error("unknown direction");
    const std::array<ActuatorId, 3> order = {blocks[0].actuator,
                                             blocks[1].actuator,
                                             blocks[2].actuator};
    Direction direction{};
    bool found = false;
    for (Direction d : kAllDirections)
        if (control_points(d) == order) {
            direction = d;
            found = true;
            break;
        }
    if (!found) throw std::runtime_error("unknown direction");

    const double tol = options.intensity_tol;
    std::array<double, 3> intensities = {block_intensity(blocks[0], tol),
                                         block_intensity(blocks[1], tol),
                                         block_intensity(blocks[2], tol)};

    // Scheme: any cross-actuator overlap means apparent motion.
    bool overlap = false;
    for (int i = 0; i < 3 && !overlap; ++i)
        for (int j = i + 1; j < 3 && !overlap; ++j)
            overlap = blocks[i].first_onset() < blocks[j].last_offset() &&
                      blocks[j].first_onset() < blocks[i].last_offset();

    if (overlap) {
        for (Gradient g : kAllGradients)
            if (triple_matches(intensities, Scheme::MotionIntensity, g, scale, tol))
                return {Scheme::MotionIntensity, {direction, g}};
        throw std::runtime_error("unknown gradient");
    }

    const std::array<int, 3> counts = {static_cast<int>(blocks[0].events.size()),
                                       static_cast<int>(blocks[1].events.size()),
                                       static_cast<int>(blocks[2].events.size())};
    const Gradient gradient = gradient_from_counts(counts);

    // Uniform intensity at the configured uniform level is RabbitSingle;
    // anything else must fit RabbitDual's coding for the same gradient.
    const bool uniform = close(intensities[0], intensities[1], tol) &&
                         close(intensities[1], intensities[2], tol);
    if (uniform && close(intensities[0], scale.level(constants.uniform_level), tol))
        return {Scheme::RabbitSingle, {direction, gradient}};
    if (triple_matches(intensities, Scheme::RabbitDual, gradient, scale, tol))
        return {Scheme::RabbitDual, {direction, gradient}};
    throw std::runtime_error("unknown gradient");
}

} // namespace haptix
