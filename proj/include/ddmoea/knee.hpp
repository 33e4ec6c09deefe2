#pragma once

#include <cstddef>
#include <vector>

#include "ddmoea/core.hpp"

namespace ddmoea {

// Equal-width partition of a population along one objective (f1 by default).
// The last subspace is closed so the f-max member lands in it. If the range is
// zero every member goes to subspace 0 and `degenerate` is set.
struct SubspacePartition {
  int count = 0;
  double f_min = 0.0;
  double f_max = 0.0;
  double width = 0.0;
  bool degenerate = false;
  std::vector<int> assignment;                      // per member: subspace index
  std::vector<std::vector<std::size_t>> members;    // per subspace: member indices
};

SubspacePartition partition(const Population& pop, int n_s, int objective_index = 0);

// Index of the member farthest (perpendicular distance) from the hyperplane
// through the per-objective extreme points; ties and degenerate geometry fall
// back to the lowest index.
std::size_t extract_knee(const Population& pop, const std::vector<std::size_t>& member_idx);

// Polar decomposition of the movement vector v = prev - prev2: magnitude r and
// n-1 angular coordinates. `zero` flags r == 0, where the angles are unusable.
struct PolarDirection {
  DecisionVector v;
  double r = 0.0;
  std::vector<double> beta;
  bool zero = false;
};

PolarDirection direction_polar(const DecisionVector& prev, const DecisionVector& prev2);

// Draw from the truncated Laplace deflection density on [-pi, pi],
// proportional to exp(-|theta| / r). r == 0 returns exactly 0.
double sample_deflection(double r, RandomSource& rng);

// Unit direction from angles beta deflected by theta (n-spherical coordinates).
std::vector<double> direction_components(const std::vector<double>& beta,
                                         const std::vector<double>& theta);

// Knee-trend prediction: previous knee moved by the previous step length along
// the deflected direction, clamped to bounds. deterministic_theta forces all
// deflections to zero, collapsing to linear extrapolation.
DecisionVector akp_predict(const DecisionVector& knee_prev, const DecisionVector& knee_prev2,
                           const Bounds& bounds, RandomSource& rng,
                           bool deterministic_theta = false);

// Classical linear extrapolation 2*prev - prev2, clamped to bounds.
DecisionVector linear_predict(const DecisionVector& knee_prev, const DecisionVector& knee_prev2,
                              const Bounds& bounds);

}  // namespace ddmoea
