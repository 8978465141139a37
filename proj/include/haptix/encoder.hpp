// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>

#include "haptix/intensity.hpp"
#include "haptix/timeline.hpp"
#include "haptix/types.hpp"

namespace haptix {

/// Rabbit pulse counts per control point: Up (2,4,6), Flat (4,4,4),
/// Down (6,4,2).
std::array<int, 3> pulse_counts(Gradient gradient);

/// Stimulus onset asynchrony for apparent motion: 0.32 * d + 47.3 ms.
double soa(double d_ms);

/// Builds the deterministic actuator timeline for one cue under one scheme.
Timeline encode(const Cue& cue, Scheme scheme, const TimingConstants& constants,
                const IntensityScale& scale);

} // namespace haptix
