// SPDX-License-Identifier: Apache-2.0

#include "haptix/stats.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "haptix/types.hpp"

namespace haptix::stats {

namespace {

double median_sorted(const double* v, std::size_t n) {
    return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

// Mid-ranks (1-based, ties averaged) of a value vector.
std::vector<double> mid_ranks(const std::vector<double>& values) {
    const std::size_t n = values.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });

    std::vector<double> ranks(n);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
        const double rank = 0.5 * (i + j) + 1.0;
        for (std::size_t t = i; t <= j; ++t) ranks[order[t]] = rank;
        i = j + 1;
    }
    return ranks;
}

// Regularized incomplete gamma, upper tail Q(a, x). Series for
// x < a + 1, modified Lentz continued fraction otherwise.
double regularized_gamma_q(double a, double x) {
    constexpr int kMaxIter = 500;
    constexpr double kEps = 1e-15;
    constexpr double kTiny = 1e-300;

    if (x < 0.0 || a <= 0.0) throw std::invalid_argument("bad gamma arguments");
    if (x == 0.0) return 1.0;

    const double log_prefix = a * std::log(x) - x - std::lgamma(a);
    if (x < a + 1.0) {
        // P(a,x) by series, Q = 1 - P.
        double term = 1.0 / a;
        double sum = term;
        double ap = a;
        for (int i = 0; i < kMaxIter; ++i) {
            ap += 1.0;
            term *= x / ap;
            sum += term;
            if (std::fabs(term) < std::fabs(sum) * kEps) break;
        }
        return 1.0 - sum * std::exp(log_prefix);
    }

    double b = x + 1.0 - a;
    double c = 1.0 / kTiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= kMaxIter; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = b + an / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::fabs(delta - 1.0) < kEps) break;
    }
    return std::exp(log_prefix) * h;
}

std::string format_p(double p) {
    if (p < 0.001) return "p<0.001";
    char buf[32];
    std::snprintf(buf, sizeof buf, "p=%.3f", p);
    return buf;
}

} // namespace

MedianIqr median_iqr(std::vector<double> values) {
    if (values.empty()) throw std::invalid_argument("empty sample");
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    const double median = median_sorted(values.data(), n);
    if (n < 2) return {median, 0.0};

    // Quartiles are medians of the halves, the overall median excluded
    // for odd n.
    const std::size_t half = n / 2;
    const double q1 = median_sorted(values.data(), half);
    const double q3 = median_sorted(values.data() + (n - half), half);
    return {median, q3 - q1};
}

FriedmanResult friedman(const std::vector<std::vector<double>>& matrix) {
    const int n = static_cast<int>(matrix.size());
    if (n < 2) throw std::invalid_argument("friedman needs >= 2 subjects");
    const int k = static_cast<int>(matrix.front().size());
    if (k < 2) throw std::invalid_argument("friedman needs >= 2 conditions");

    std::vector<double> rank_sum(k, 0.0);
    for (const auto& row : matrix) {
        if (static_cast<int>(row.size()) != k)
            throw std::invalid_argument("ragged friedman matrix");
        const auto ranks = mid_ranks(row);
        for (int j = 0; j < k; ++j) rank_sum[j] += ranks[j];
    }

    double sum_sq = 0.0;
    for (double r : rank_sum) sum_sq += r * r;
    const double chi2 =
        12.0 / (static_cast<double>(n) * k * (k + 1)) * sum_sq - 3.0 * n * (k + 1);
    const int df = k - 1;
    return {chi2, df, chi_square_sf(std::max(chi2, 0.0), df), n, k};
}

WilcoxonResult wilcoxon_signed_rank(std::span<const double> x,
                                    std::span<const double> y) {
    if (x.size() != y.size() || x.empty())
        throw std::invalid_argument("paired samples of equal nonzero length required");

    std::vector<double> diffs;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] != y[i]) diffs.push_back(x[i] - y[i]);
    if (diffs.empty()) throw std::invalid_argument("degenerate comparison");

    std::vector<double> abs_diffs(diffs.size());
    std::transform(diffs.begin(), diffs.end(), abs_diffs.begin(),
                   [](double d) { return std::fabs(d); });
    const auto ranks = mid_ranks(abs_diffs);

    const int m = static_cast<int>(diffs.size());
    double w = 0.0;
    for (int i = 0; i < m; ++i)
        if (diffs[i] > 0.0) w += ranks[i];

    const double mu = m * (m + 1) / 4.0;
    double var = m * (m + 1) * (2.0 * m + 1) / 24.0;
    // Tie correction: subtract sum(t^3 - t) / 48 per tied group.
    std::vector<double> sorted = abs_diffs;
    std::sort(sorted.begin(), sorted.end());
    std::size_t i = 0;
    while (i < sorted.size()) {
        std::size_t j = i;
        while (j + 1 < sorted.size() && sorted[j + 1] == sorted[i]) ++j;
        const double t = static_cast<double>(j - i + 1);
        var -= (t * t * t - t) / 48.0;
        i = j + 1;
    }
    if (var <= 0.0) throw std::invalid_argument("degenerate comparison");

    const double z = (w - mu) / std::sqrt(var); // no continuity correction
    const double p = std::min(1.0, 2.0 * normal_sf(std::fabs(z)));
    return {w, z, p, m};
}

std::vector<double> bonferroni(const std::vector<double>& p_values, int m) {
    if (p_values.empty() || m < static_cast<int>(p_values.size()))
        throw std::invalid_argument("m must cover the p-value family");
    std::vector<double> adjusted;
    for (double p : p_values) {
        if (p < 0.0 || p > 1.0) throw std::invalid_argument("p outside [0,1]");
        adjusted.push_back(std::min(1.0, p * m));
    }
    return adjusted;
}

EffectSize effect_size_r(double z, int n_subjects) {
    if (n_subjects < 1) throw std::invalid_argument("need >= 1 subject");
    return {std::fabs(z) / std::sqrt(2.0 * n_subjects)};
}

double chi_square_sf(double x, int df) {
    if (df < 1) throw std::invalid_argument("df must be >= 1");
    if (x <= 0.0) return 1.0;
    return regularized_gamma_q(df / 2.0, x / 2.0);
}

double normal_sf(double z) { return 0.5 * std::erfc(z / std::sqrt(2.0)); }

std::string stats_report(const std::string& summaries_csv,
                         const std::string& column) {
    std::istringstream in(summaries_csv);
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("empty summaries CSV");

    std::vector<std::string> header;
    {
        std::istringstream ls(line);
        std::string field;
        while (std::getline(ls, field, ',')) header.push_back(field);
    }
    const auto col_it = std::find(header.begin(), header.end(), column);
    if (header.size() < 3 || header[0] != "participant" ||
        header[1] != "condition" || col_it == header.end())
        throw std::runtime_error("summaries CSV needs participant,condition," +
                                 column + " columns");
    const std::size_t col = col_it - header.begin();

    std::map<int, std::map<Scheme, double>> table;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::istringstream ls(line);
        std::string field;
        while (std::getline(ls, field, ',')) fields.push_back(field);
        if (fields.size() <= col) throw std::runtime_error("short summaries row");
        table[std::stoi(fields[0])][scheme_from_token(fields[1])] =
            std::stod(fields[col]);
    }

    std::vector<std::vector<double>> matrix;
    std::map<Scheme, std::vector<double>> per_condition;
    for (const auto& [participant, values] : table) {
        std::vector<double> row;
        for (Scheme s : kAllSchemes) {
            const auto it = values.find(s);
            if (it == values.end())
                throw std::runtime_error("participant missing a condition value");
            row.push_back(it->second);
            per_condition[s].push_back(it->second);
        }
        matrix.push_back(std::move(row));
    }

    std::string out;
    char buf[160];
    for (Scheme s : kAllSchemes) {
        const MedianIqr mi = median_iqr(per_condition[s]);
        std::snprintf(buf, sizeof buf, "%s: median %.1f (IQR %.1f)\n",
                      std::string(to_token(s)).c_str(), mi.median, mi.iqr);
        out += buf;
    }

    const FriedmanResult fr = friedman(matrix);
    std::snprintf(buf, sizeof buf, "Friedman: \xCF\x87\xC2\xB2(%d)=%.2f, %s, N=%d\n",
                  fr.df, fr.chi2, format_p(fr.p).c_str(), fr.n);
    out += buf;

    out += "post-hoc (Wilcoxon signed-rank, Bonferroni m=3):\n";
    const std::array<std::pair<int, int>, 3> pairs = {{{0, 1}, {0, 2}, {1, 2}}};
    for (const auto& [a, b] : pairs) {
        std::vector<double> xa, xb;
        for (const auto& row : matrix) {
            xa.push_back(row[a]);
            xb.push_back(row[b]);
        }
        std::string cell;
        try {
            const WilcoxonResult wr = wilcoxon_signed_rank(xa, xb);
            const double adj = bonferroni({wr.p}, 3).front();
            const double r = effect_size_r(wr.z, fr.n).r;
            std::snprintf(buf, sizeof buf, "W=%.1f, Z=%.2f, %s, r=%.2f",
                          wr.w, wr.z, format_p(adj).c_str(), r);
            cell = buf;
        } catch (const std::invalid_argument&) {
            cell = "degenerate comparison";
        }
        out += "  " + std::string(to_token(kAllSchemes[a])) + " vs " +
               std::string(to_token(kAllSchemes[b])) + ": " + cell + "\n";
    }
    return out;
}

} // namespace haptix::stats
