// SPDX-License-Identifier: Apache-2.0

#include "haptix/experiment.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <tuple>
#include <sstream>
#include <stdexcept>

namespace haptix {

namespace {

// Deterministic shuffle driver: 64-bit LCG (Knuth MMIX constants),
// draws taken from the top 32 bits.
struct Lcg {
    std::uint64_t state;

    std::uint32_t next(std::uint32_t bound) {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return static_cast<std::uint32_t>(state >> 33) % bound;
    }
};

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t stream_seed(std::uint64_t seed, int participant, int condition_pos,
                          int block) {
    std::uint64_t s = splitmix64(seed);
    s = splitmix64(s ^ static_cast<std::uint64_t>(participant));
    s = splitmix64(s ^ (static_cast<std::uint64_t>(condition_pos) << 8));
    s = splitmix64(s ^ (static_cast<std::uint64_t>(block) << 16));
    return s;
}

template <typename T>
void fisher_yates(std::vector<T>& items, Lcg& rng) {
    for (std::size_t i = items.size() - 1; i > 0; --i)
        std::swap(items[i], items[rng.next(static_cast<std::uint32_t>(i + 1))]);
}

std::vector<Cue> canonical_cues() {
    std::vector<Cue> cues;
    for (Direction d : kAllDirections)
        for (Gradient g : kAllGradients) cues.push_back({d, g});
    return cues;
}

std::vector<std::vector<std::string>> parse_csv(const std::string& csv,
                                                const std::string& expected_header) {
    std::istringstream in(csv);
    std::string line;
    if (!std::getline(in, line) || line != expected_header)
        throw std::runtime_error("bad CSV header, expected: " + expected_header);

    std::vector<std::vector<std::string>> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::istringstream ls(line);
        std::string field;
        while (std::getline(ls, field, ',')) fields.push_back(field);
        rows.push_back(std::move(fields));
    }
    return rows;
}

constexpr const char* kTrialsHeader =
    "participant,condition,block,trial,direction,gradient";
constexpr const char* kResponsesHeader =
    "participant,condition,block,trial,chosen_direction,chosen_gradient";

} // namespace

std::vector<std::vector<int>> balanced_latin_square(int k) {
    if (k < 2) throw std::invalid_argument("latin square needs k >= 2");

    // Offset sequence 0, 1, k-1, 2, k-2, ...
    std::vector<int> offsets;
    offsets.push_back(0);
    for (int step = 1; static_cast<int>(offsets.size()) < k; ++step) {
        offsets.push_back(step);
        if (static_cast<int>(offsets.size()) < k) offsets.push_back(k - step);
    }

    std::vector<std::vector<int>> rows;
    for (int i = 0; i < k; ++i) {
        std::vector<int> row;
        for (int j = 0; j < k; ++j) row.push_back((offsets[j] + i) % k);
        rows.push_back(std::move(row));
    }
    if (k % 2 == 1) {
        const int base = static_cast<int>(rows.size());
        for (int i = 0; i < base; ++i)
            rows.emplace_back(rows[i].rbegin(), rows[i].rend());
    }
    return rows;
}

TrialPlan generate_trials(int participant, std::uint64_t seed) {
    const auto square = balanced_latin_square(3);
    const auto& row = square[participant % square.size()];

    TrialPlan plan{participant,
                   {kAllSchemes[row[0]], kAllSchemes[row[1]], kAllSchemes[row[2]]},
                   {}};
    for (int pos = 0; pos < 3; ++pos) {
        ConditionTrials ct{plan.condition_order[pos], {}};
        for (int block = 1; block <= 2; ++block) {
            std::vector<Cue> cues = canonical_cues();
            Lcg rng{stream_seed(seed, participant, pos, block)};
            fisher_yates(cues, rng);
            for (const Cue& cue : cues) ct.trials.push_back({block, cue});
        }
        plan.conditions[pos] = std::move(ct);
    }
    return plan;
}

std::string trials_csv(int participants, std::uint64_t seed) {
    std::string out = std::string(kTrialsHeader) + "\n";
    for (int p = 0; p < participants; ++p) {
        const TrialPlan plan = generate_trials(p, seed);
        for (const ConditionTrials& ct : plan.conditions) {
            int in_block = 0;
            int last_block = 1;
            for (const Trial& trial : ct.trials) {
                if (trial.block != last_block) {
                    in_block = 0;
                    last_block = trial.block;
                }
                ++in_block;
                out += std::to_string(p) + ',' + std::string(to_token(ct.condition)) +
                       ',' + std::to_string(trial.block) + ',' +
                       std::to_string(in_block) + ',' +
                       std::string(to_token(trial.cue.direction)) + ',' +
                       std::string(to_token(trial.cue.gradient)) + '\n';
            }
        }
    }
    return out;
}

std::vector<TrialPlan> plans_from_csv(const std::string& csv) {
    // participant -> condition (in order of appearance) -> trials
    std::map<int, std::vector<ConditionTrials>> by_participant;
    for (const auto& row : parse_csv(csv, kTrialsHeader)) {
        if (row.size() != 6) throw std::runtime_error("bad trials row");
        const int participant = std::stoi(row[0]);
        const Scheme condition = scheme_from_token(row[1]);
        auto& conditions = by_participant[participant];
        auto it = std::find_if(conditions.begin(), conditions.end(),
                               [&](const ConditionTrials& ct) {
                                   return ct.condition == condition;
                               });
        if (it == conditions.end()) {
            conditions.push_back({condition, {}});
            it = std::prev(conditions.end());
        }
        it->trials.push_back({std::stoi(row[2]),
                              {direction_from_token(row[4]),
                               gradient_from_token(row[5])}});
    }

    std::vector<TrialPlan> plans;
    for (auto& [participant, conditions] : by_participant) {
        if (conditions.size() != 3)
            throw std::runtime_error("plan must carry exactly 3 conditions");
        TrialPlan plan{participant,
                       {conditions[0].condition, conditions[1].condition,
                        conditions[2].condition},
                       {conditions[0], conditions[1], conditions[2]}};
        plans.push_back(std::move(plan));
    }
    return plans;
}

std::vector<Response> responses_from_csv(const std::string& csv) {
    std::vector<Response> responses;
    for (const auto& row : parse_csv(csv, kResponsesHeader)) {
        if (row.size() != 6) throw std::runtime_error("bad responses row");
        responses.push_back({std::stoi(row[0]), scheme_from_token(row[1]),
                             std::stoi(row[2]), std::stoi(row[3]),
                             direction_from_token(row[4]),
                             gradient_from_token(row[5])});
    }
    return responses;
}

std::vector<AccuracyRow> score(const std::vector<TrialPlan>& plans,
                               const std::vector<Response>& responses) {
    using Key = std::tuple<int, Scheme, int, int>;
    std::map<Key, Response> by_trial;
    for (const Response& r : responses) {
        const Key key{r.participant, r.condition, r.block, r.trial};
        if (!by_trial.emplace(key, r).second)
            throw std::runtime_error("duplicate response for one trial");
    }

    std::vector<AccuracyRow> rows;
    std::size_t used = 0;
    for (const TrialPlan& plan : plans) {
        for (const ConditionTrials& ct : plan.conditions) {
            int direction_correct = 0;
            int gradient_correct = 0;
            int in_block = 0;
            int last_block = 1;
            for (const Trial& trial : ct.trials) {
                if (trial.block != last_block) {
                    in_block = 0;
                    last_block = trial.block;
                }
                ++in_block;
                const auto it = by_trial.find(
                    {plan.participant, ct.condition, trial.block, in_block});
                if (it == by_trial.end())
                    throw std::runtime_error("missing response for a trial");
                ++used;
                if (it->second.chosen_direction == trial.cue.direction)
                    ++direction_correct;
                if (it->second.chosen_gradient == trial.cue.gradient)
                    ++gradient_correct;
            }
            const double n = static_cast<double>(ct.trials.size());
            rows.push_back({plan.participant, ct.condition,
                            100.0 * direction_correct / n,
                            100.0 * gradient_correct / n});
        }
    }
    if (used != by_trial.size())
        throw std::runtime_error("response references no trial in the plan");
    return rows;
}

std::string score_csv(const std::string& plan_csv,
                      const std::string& responses_csv) {
    const auto rows = score(plans_from_csv(plan_csv), responses_from_csv(responses_csv));
    std::string out = "participant,condition,direction_pct,gradient_pct\n";
    for (const AccuracyRow& row : rows) {
        char buf[32];
        out += std::to_string(row.participant) + ',' +
               std::string(to_token(row.condition));
        std::snprintf(buf, sizeof buf, ",%.2f,%.2f\n", row.direction_pct,
                      row.gradient_pct);
        out += buf;
    }
    return out;
}

RtlxScore rtlx(const std::array<double, 6>& subscales) {
    double sum = 0.0;
    for (double v : subscales) {
        if (v < 0.0 || v > 100.0)
            throw std::invalid_argument("RTLX subscale out of range [0,100]");
        sum += v;
    }
    return {subscales, sum / 6.0};
}

} // namespace haptix
