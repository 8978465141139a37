// SPDX-License-Identifier: Apache-2.0

// Acceptance suite: one test case per criterion, each printing a single
// pass/fail line. Run as a whole or per criterion via -tc='criterion N*'.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <future>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "capture_client.hpp"
#include "haptix/decoder.hpp"
#include "haptix/encoder.hpp"
#include "haptix/experiment.hpp"
#include "haptix/sampler.hpp"
#include "haptix/stats.hpp"
#include "haptix/stream.hpp"
#include "haptix/timeline.hpp"

using namespace haptix;

namespace {

const TimingConstants kConstants;
const IntensityScale kScale = IntensityScale::build();

void report(int criterion, bool ok, const char* what) {
    std::printf("criterion %d: %s - %s\n", criterion, ok ? "PASS" : "FAIL", what);
    CHECK_MESSAGE(ok, std::string(what));
}

double friedman_chi2_oracle(const std::vector<std::vector<double>>& m) {
    const int n = static_cast<int>(m.size());
    const int k = static_cast<int>(m.front().size());
    std::vector<double> rank_sum(k, 0.0);
    for (const auto& row : m) {
        std::vector<int> order(k);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(),
                  [&](int a, int b) { return row[a] < row[b]; });
        int i = 0;
        while (i < k) {
            int j = i;
            while (j + 1 < k && row[order[j + 1]] == row[order[i]]) ++j;
            for (int t = i; t <= j; ++t)
                rank_sum[order[t]] += 0.5 * (i + j) + 1.0;
            i = j + 1;
        }
    }
    double sum_sq = 0.0;
    for (double r : rank_sum) sum_sq += r * r;
    return 12.0 / (n * k * (k + 1)) * sum_sq - 3.0 * n * (k + 1);
}

} // namespace

TEST_CASE("criterion 1: exhaustive 45-combination round trip") {
    const auto start = std::chrono::steady_clock::now();
    bool ok = true;
    for (Scheme s : kAllSchemes)
        for (Direction d : kAllDirections)
            for (Gradient g : kAllGradients) {
                const Cue cue{d, g};
                try {
                    const Timeline tl = encode(cue, s, kConstants, kScale);
                    const Decoded dec = decode(tl.events, kConstants, kScale);
                    ok = ok && dec.scheme == s && dec.cue == cue;
                } catch (const std::exception&) {
                    ok = false;
                }
            }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    ok = ok && seconds < 1.0;
    report(1, ok, "decode(encode(cue, scheme)) identity, 45/45 in < 1 s");
}

TEST_CASE("criterion 2: soa(450) = 191.3 exactly") {
    report(2, std::fabs(soa(450.0) - 191.3) <= 1e-9, "SOA formula at d = 450 ms");
}

TEST_CASE("criterion 3: rabbit timing closed form") {
    const Timeline tl =
        encode({Direction::Forward, Gradient::Up}, Scheme::RabbitSingle,
               kConstants, kScale);
    bool ok = tl.total_ms == 2150.0;
    const std::map<int, std::vector<double>> expected = {
        {9, {0, 175}},
        {6, {400, 575, 750, 925}},
        {2, {1150, 1325, 1500, 1675, 1850, 2025}},
    };
    std::map<int, std::vector<double>> actual;
    for (const auto& e : tl.events) actual[e.actuator.index()].push_back(e.start_ms);
    ok = ok && actual == expected;
    report(3, ok, "forward/up rabbit-single onsets and 2150.0 ms total");
}

TEST_CASE("criterion 4: intensity ladder shape") {
    const IntensityScale scale = IntensityScale::build(0.22, 0.3, 7);
    bool ok = scale.levels.size() == 7 && scale.level(1) == 0.22 &&
              scale.level(7) == 1.0;
    for (int k = 1; k < 7; ++k) {
        ok = ok && scale.level(k + 1) >= scale.level(k);
        if (scale.level(k + 1) < 1.0)
            ok = ok &&
                 std::fabs(scale.level(k + 1) / scale.level(k) - 1.3) <= 1e-12;
    }
    ok = ok && scale.level(6) < 1.0; // S7 is the clamped level
    report(4, ok, "build_scale(0.22, 0.3, 7): S1 = 0.22, ratios 1.3, S7 clamped");
}

TEST_CASE("criterion 5: wilcoxon and effect-size paper identities") {
    std::vector<double> x(14), zero(14, 0.0);
    std::iota(x.begin(), x.end(), 1.0);
    const auto pos = stats::wilcoxon_signed_rank(x, zero);
    const auto neg = stats::wilcoxon_signed_rank(zero, x);
    bool ok = pos.w == 105.0 && std::fabs(pos.z - 3.30) <= 0.01;
    ok = ok && neg.w == 0.0 && std::fabs(neg.z + 3.30) <= 0.01;
    ok = ok && std::fabs(stats::effect_size_r(3.30, 14).r - 0.62) <= 0.005;
    ok = ok && std::fabs(stats::effect_size_r(2.62, 14).r - 0.50) <= 0.005;
    ok = ok && std::fabs(stats::effect_size_r(3.11, 14).r - 0.59) <= 0.005;
    report(5, ok, "W = 105 / Z = 3.30, W = 0 / Z = -3.30, r triples");
}

TEST_CASE("criterion 6: friedman statistic") {
    bool ok = stats::friedman({{1, 1, 1}, {2, 2, 2}, {3, 3, 3}}).chi2 == 0.0;
    ok = ok &&
         std::fabs(stats::friedman({{1, 2, 3}, {4, 5, 6}, {1, 5, 9}}).chi2 - 6.0) <=
             1e-12;

    std::mt19937 rng(1234);
    std::uniform_int_distribution<int> subjects(2, 5);
    std::uniform_int_distribution<int> value(0, 9);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<std::vector<double>> m(subjects(rng), std::vector<double>(3));
        for (auto& row : m)
            for (double& v : row) v = value(rng);
        bool degenerate = true;
        for (auto& row : m)
            if (row[0] != row[1] || row[1] != row[2]) degenerate = false;
        if (degenerate) m[0][0] += 1.0;
        ok = ok &&
             std::fabs(stats::friedman(m).chi2 - friedman_chi2_oracle(m)) <= 1e-9;
    }
    report(6, ok, "chi2 = 0 / 6.0 closed forms and 100-instance brute force");
}

TEST_CASE("criterion 7: balanced latin square k = 3") {
    const auto rows = balanced_latin_square(3);
    bool ok = rows.size() == 6;
    std::map<std::pair<int, int>, int> position_counts, pair_counts;
    for (const auto& row : rows) {
        for (int pos = 0; pos < 3; ++pos) ++position_counts[{pos, row[pos]}];
        for (int pos = 0; pos + 1 < 3; ++pos)
            ++pair_counts[{row[pos], row[pos + 1]}];
    }
    ok = ok && position_counts.size() == 9 && pair_counts.size() == 6;
    for (const auto& [key, count] : position_counts) ok = ok && count == 2;
    for (const auto& [key, count] : pair_counts) ok = ok && count == 2;
    report(7, ok, "6 rows, every condition twice per position, pairs twice");
}

TEST_CASE("criterion 8: trial generation") {
    bool ok = true;
    const TrialPlan plan = generate_trials(5, 99);
    for (const ConditionTrials& ct : plan.conditions) {
        ok = ok && ct.trials.size() == 30;
        std::map<std::pair<int, int>, int> cue_counts;
        for (int block : {1, 2}) {
            std::set<std::pair<int, int>> block_cues;
            for (const Trial& t : ct.trials)
                if (t.block == block)
                    block_cues.insert({static_cast<int>(t.cue.direction),
                                       static_cast<int>(t.cue.gradient)});
            ok = ok && block_cues.size() == 15; // block-wise permutation
        }
        for (const Trial& t : ct.trials)
            ++cue_counts[{static_cast<int>(t.cue.direction),
                          static_cast<int>(t.cue.gradient)}];
        ok = ok && cue_counts.size() == 15;
        for (const auto& [cue, count] : cue_counts) ok = ok && count == 2;
    }
    ok = ok && trials_csv(14, 4242) == trials_csv(14, 4242);
    report(8, ok, "30 trials/condition, each cue twice, byte-identical CSV");
}

TEST_CASE("criterion 9: sampler conservation and motion overlap window") {
    bool conservation = true;
    for (Scheme s : kAllSchemes)
        for (Direction d : kAllDirections)
            for (Gradient g : kAllGradients) {
                const Timeline tl = encode({d, g}, s, kConstants, kScale);
                const auto frames = render(tl, {1000, 4});
                for (int actuator = 1; actuator <= 10; ++actuator) {
                    double active_ms = 0.0;
                    for (const Frame& f : frames)
                        if (f.intensities[actuator - 1] > 0.0) active_ms += 1.0;
                    double event_ms = 0.0;
                    for (const auto& e : tl.events)
                        if (e.actuator.index() == actuator)
                            event_ms += e.duration_ms;
                    conservation =
                        conservation && std::fabs(active_ms - event_ms) <= 1.0;
                }
            }

    // As stated: every motion-intensity frame in [191.3, 450) shows
    // exactly two active actuators. The schedule itself makes this
    // unattainable: the third onset lands at 2 * soa(450) = 382.6 ms,
    // before the first offset at 450 ms, so frames in [382.6, 450)
    // carry three active actuators. Kept faithful rather than loosened.
    bool exactly_two = true;
    const Timeline motion =
        encode({Direction::Forward, Gradient::Up}, Scheme::MotionIntensity,
               kConstants, kScale);
    for (const Frame& f : render(motion, {1000, 4})) {
        if (f.t_ms >= 191.3 && f.t_ms < 450.0) {
            int active = 0;
            for (double v : f.intensities)
                if (v > 0.0) ++active;
            exactly_two = exactly_two && active == 2;
        }
    }
    report(9, conservation && exactly_two,
           "per-actuator conservation at 1 kHz; exactly two active in "
           "[191.3, 450) (see notes: triple overlap in [382.6, 450))");
}

TEST_CASE("criterion 10: stream bit-exactness and truncation reporting") {
    std::mt19937 rng(2024);
    bool ok = true;

    StreamServer server("127.0.0.1", 0);
    for (int i = 0; i < 10; ++i) {
        const Cue cue{kAllDirections[rng() % 5], kAllGradients[rng() % 3]};
        const Scheme scheme = kAllSchemes[rng() % 3];
        const Timeline tl = encode(cue, scheme, kConstants, kScale);
        const RenderConfig config;

        auto session = std::async(std::launch::async, [&] {
            return server.serve_once(tl, config, true);
        });
        const std::string received = test::capture_all(server.port());
        const SessionSummary summary = session.get();
        ok = ok && received == render_text(tl, config) && !summary.truncated &&
             summary.frames_sent == render(tl, config).size();
    }

    {
        const Timeline tl =
            encode({Direction::Forward, Gradient::Flat}, Scheme::RabbitSingle,
                   kConstants, kScale);
        const RenderConfig config{20000, 6};
        auto session = std::async(std::launch::async, [&] {
            return server.serve_once(tl, config, true);
        });
        const std::string received =
            test::capture_then_disconnect(server.port(), 512);
        const SessionSummary summary = session.get();
        ok = ok && summary.truncated &&
             summary.frames_sent < render(tl, config).size() &&
             summary.bytes_sent >= received.size();
    }
    report(10, ok, "10 captured streams byte-equal; truncation reported");
}
