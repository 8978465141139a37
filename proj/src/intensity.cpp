// SPDX-License-Identifier: Apache-2.0

#include "haptix/intensity.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace haptix {

double IntensityScale::level(int k) const {
    if (k < 1 || k > static_cast<int>(levels.size()))
        throw std::invalid_argument("intensity level index out of range");
    return levels[k - 1];
}

IntensityScale IntensityScale::build(double base, double jnd, int n) {
    if (base <= 0.0 || base > 1.0)
        throw std::invalid_argument("scale base must be in (0, 1]");
    if (jnd <= 0.0) throw std::invalid_argument("jnd must be positive");
    if (n < 1) throw std::invalid_argument("scale needs at least one level");

    IntensityScale scale{base, jnd, {}};
    scale.levels.reserve(n);
    for (int k = 0; k < n; ++k)
        scale.levels.push_back(std::min(1.0, base * std::pow(1.0 + jnd, k)));
    return scale;
}

std::array<int, 3> gradient_levels(Scheme scheme, Gradient gradient) {
    if (scheme == Scheme::RabbitSingle)
        throw std::invalid_argument("scheme has uniform intensity");

    // RabbitDual codes the gradient on levels 1/3/6, MotionIntensity on
    // 1/4/6; Flat sits at each scheme's middle level.
    const int mid = scheme == Scheme::RabbitDual ? 3 : 4;
    switch (gradient) {
    case Gradient::Up: return {1, mid, 6};
    case Gradient::Down: return {6, mid, 1};
    case Gradient::Flat: return {mid, mid, mid};
    }
    throw std::invalid_argument("bad gradient");
}

std::string scale_text(const IntensityScale& scale) {
    std::string out;
    for (size_t k = 0; k < scale.levels.size(); ++k) {
        char line[48];
        std::snprintf(line, sizeof line, "%zu %.6f\n", k + 1, scale.levels[k]);
        out += line;
    }
    return out;
}

} // namespace haptix
