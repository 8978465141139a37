// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>

#include "haptix/intensity.hpp"
#include "haptix/timeline.hpp"
#include "haptix/types.hpp"

namespace haptix {

struct DecodeOptions {
    /// Intensity match tolerance. 1e-6 for in-memory timelines; use
    /// 1e-4 for timelines re-parsed from their 4-digit serialization.
    double intensity_tol = 1e-6;
};

struct Decoded {
    Scheme scheme;
    Cue cue;
};

/// Recovers (scheme, cue) from an event list. Ambiguity is an error,
/// never a guess: throws std::runtime_error with "unknown direction" or
/// "unknown gradient" when no scheme/cue explains the events.
Decoded decode(std::span<const VibrationEvent> events,
               const TimingConstants& constants, const IntensityScale& scale,
               const DecodeOptions& options = {});

} // namespace haptix
