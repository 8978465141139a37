// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "haptix/types.hpp"

namespace haptix {

struct Trial {
    int block; // 1 or 2
    Cue cue;
};

struct ConditionTrials {
    Scheme condition;
    std::vector<Trial> trials; // 30: two blocks of the 15 cues
};

struct TrialPlan {
    int participant;
    std::array<Scheme, 3> condition_order; // a balanced Latin square row
    std::array<ConditionTrials, 3> conditions;
};

struct Response {
    int participant;
    Scheme condition;
    int block;
    int trial; // 1-based within (condition, block)
    Direction chosen_direction;
    Gradient chosen_gradient;
};

struct AccuracyRow {
    int participant;
    Scheme condition;
    double direction_pct;
    double gradient_pct;
};

struct RtlxScore {
    std::array<double, 6> subscales; // mental, physical, temporal,
                                     // performance, effort, frustration
    double score;                    // unweighted mean
};

/// Balanced Latin square over 0..k-1. Row i, position j follows the
/// 0, 1, k-1, 2, k-2, ... interleave offset by i; for odd k the mirrored
/// rows are appended, giving 2k rows.
std::vector<std::vector<int>> balanced_latin_square(int k);

/// Deterministic plan: condition order = Latin-square row
/// (participant mod rows); each condition gets two independently
/// shuffled blocks of the 15 cues. The shuffle is Fisher-Yates driven by
/// a 64-bit LCG (Knuth MMIX multiplier 6364136223846793005, increment
/// 1442695040888963407, top 32 bits used) seeded per
/// (seed, participant, condition position, block) via splitmix64.
TrialPlan generate_trials(int participant, std::uint64_t seed);

/// CSV "participant,condition,block,trial,direction,gradient" for
/// participants 0..n-1.
std::string trials_csv(int participants, std::uint64_t seed);

std::vector<TrialPlan> plans_from_csv(const std::string& csv);
std::vector<Response> responses_from_csv(const std::string& csv);

/// Direction and gradient scored independently per trial, summarized as
/// percentages per participant x condition. Requires exactly one
/// response per trial.
std::vector<AccuracyRow> score(const std::vector<TrialPlan>& plans,
                               const std::vector<Response>& responses);

/// CSV-to-CSV convenience wrapper; output header
/// "participant,condition,direction_pct,gradient_pct".
std::string score_csv(const std::string& plan_csv,
                      const std::string& responses_csv);

/// Raw-TLX: unweighted mean of the six subscale ratings, each in [0,100].
RtlxScore rtlx(const std::array<double, 6>& subscales);

} // namespace haptix
