#pragma once

#include <cstdint>
#include <vector>

#include "ddmoea/core.hpp"
#include "ddmoea/problems.hpp"

namespace ddmoea {

// Inverted generational distance: mean over reference points of the distance
// to the closest attained point. Parallelized over the reference set with a
// serial reference implementation kept for testing.
double igd(const ReferenceFront& ref, const std::vector<ObjectiveVector>& attained);
double igd_serial(const ReferenceFront& ref, const std::vector<ObjectiveVector>& attained);
double igd(const ReferenceFront& ref, const Population& pop);

// Exact hypervolume dominated by `pts` relative to reference point r, for 2 or
// 3 objectives (minimization). Points with any objective >= r are ignored.
double hv(const std::vector<ObjectiveVector>& pts, const ObjectiveVector& r);

// Unbiased Monte-Carlo hypervolume estimate; standard error written to
// `stderr_out` when non-null.
double hv_monte_carlo(const std::vector<ObjectiveVector>& pts, const ObjectiveVector& r,
                      std::size_t samples, RandomSource& rng, double* stderr_out = nullptr);
double hv_monte_carlo_serial(const std::vector<ObjectiveVector>& pts, const ObjectiveVector& r,
                             std::size_t samples, RandomSource& rng,
                             double* stderr_out = nullptr);

struct SeriesSummary {
  double mean = 0.0;
  double stddev = 0.0;  // sample standard deviation, 0 for a single value
};
SeriesSummary summarize(const std::vector<double>& values);

// Two-sided Mann-Whitney / Wilcoxon rank-sum test with normal approximation and
// tie-corrected variance, at significance level 0.05. direction is '+' when `a`
// is significantly smaller than `b` (better under minimization), '-' when
// significantly larger, '=' otherwise.
struct RankSumResult {
  double u = 0.0;  // U statistic of sample a
  double z = 0.0;
  bool significant = false;
  char direction = '=';
};
RankSumResult wilcoxon_rank_sum(const std::vector<double>& a, const std::vector<double>& b);

}  // namespace ddmoea
