// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <string>
#include <vector>

#include "haptix/types.hpp"

namespace haptix {

/// Geometric JND ladder of drive amplitudes in (0, 1], clamped at 1.0.
/// level k (1-based) = min(1, base * (1 + jnd)^(k-1)).
struct IntensityScale {
    double base;
    double jnd;
    std::vector<double> levels;

    double level(int k) const; // 1-based, throws on out-of-range

    /// Default ladder: base 0.22, relative step 0.3, seven levels.
    static IntensityScale build(double base = 0.22, double jnd = 0.3, int n = 7);
};

/// Per-control-point intensity level indices for a gradient under an
/// intensity-coded scheme. Throws for RabbitSingle, which vibrates at a
/// single uniform level.
std::array<int, 3> gradient_levels(Scheme scheme, Gradient gradient);

/// Text dump "k value", value with six decimal places.
std::string scale_text(const IntensityScale& scale);

} // namespace haptix
