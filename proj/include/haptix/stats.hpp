// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <string>
#include <vector>

namespace haptix::stats {

struct MedianIqr {
    double median;
    double iqr;
};

struct FriedmanResult {
    double chi2;
    int df;
    double p;
    int n; // subjects
    int k; // conditions
};

struct WilcoxonResult {
    double w; // sum of positive ranks
    double z;
    double p; // two-sided, normal approximation
    int n_effective; // pairs remaining after zero removal
};

struct EffectSize {
    double r;
};

/// Median and Q3-Q1. Quartiles are the medians of the lower and upper
/// halves of the sorted data, the overall median excluded when the
/// length is odd (Tukey hinge / median-exclusive convention).
MedianIqr median_iqr(std::vector<double> values);

/// Friedman omnibus over an n x k matrix (rows = subjects). Within-row
/// mid-ranks; chi2 = 12 / (n k (k+1)) * sum Rj^2 - 3 n (k+1); p from
/// the chi-square upper tail with df = k-1.
FriedmanResult friedman(const std::vector<std::vector<double>>& matrix);

/// Wilcoxon signed-rank on paired samples. Zero differences dropped,
/// |differences| mid-ranked, w = sum of ranks of positive differences,
/// z = (w - m(m+1)/4) / sigma with the standard tie-corrected variance
/// and no continuity correction.
WilcoxonResult wilcoxon_signed_rank(std::span<const double> x,
                                    std::span<const double> y);

/// min(1, p * m) per value, order preserved.
std::vector<double> bonferroni(const std::vector<double>& p_values, int m);

/// r = |z| / sqrt(2 * n_subjects).
EffectSize effect_size_r(double z, int n_subjects);

/// Upper-tail probability P(X >= x) of chi-square with df degrees of
/// freedom, via the regularized upper incomplete gamma function
/// (series for x < a+1, Lentz continued fraction otherwise).
double chi_square_sf(double x, int df);

/// Standard normal upper tail P(Z >= z).
double normal_sf(double z);

/// Full pipeline over a long-format CSV "participant,condition,<column>":
/// per-condition median (IQR), Friedman line, and the pairwise Wilcoxon
/// post-hoc table with Bonferroni-adjusted p and effect size r.
std::string stats_report(const std::string& summaries_csv,
                         const std::string& column = "value");

} // namespace haptix::stats
