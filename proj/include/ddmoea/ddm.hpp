#pragma once

#include <vector>

#include "ddmoea/core.hpp"

namespace ddmoea {

// Monotone noise schedule alpha_0 = 1 > alpha_1 > ... > alpha_K = 0.
struct NoiseSchedule {
  std::vector<double> alpha;  // K+1 values, index k in [0, K]
  int steps() const { return static_cast<int>(alpha.size()) - 1; }
};

enum class ScheduleKind { cosine, linear };

NoiseSchedule cosine_schedule(int K);  // alpha_k = (cos(k pi / K) + 1) / 2
NoiseSchedule linear_schedule(int K);  // alpha_k = 1 - k / K
NoiseSchedule make_schedule(ScheduleKind kind, int K);

// DDIM step noise scale sigma_k from consecutive alphas
// sqrt((1 - a_prev) / (1 - a_cur) * (1 - a_cur / a_prev)).
double ddim_sigma(double alpha_prev, double alpha_cur);

// Log density of the isotropic Gaussian guidance prior N(knee, psi^2 I).
double knee_prior_log_density(const DecisionVector& x, const DecisionVector& knee, double psi);

struct Posterior {
  DecisionVector x0;            // prior-weighted clean estimate
  std::vector<double> weights;  // per-sample posterior weights, summing to 1
};

// Clean-sample estimate: weighted average of candidate samples, each weighted
// by prior density times the likelihood N(x_k; sqrt(a_k) * sample, (1-a_k) I).
// Weights are combined in log space.
Posterior posterior_x0(const std::vector<DecisionVector>& samples, const DecisionVector& x_k,
                       double alpha_k, const DecisionVector& knee, double psi);
Posterior posterior_x0_logprior(const std::vector<DecisionVector>& samples,
                                const std::vector<double>& log_prior,
                                const DecisionVector& x_k, double alpha_k);

// Noise implied by x_k and the clean estimate: (x_k - sqrt(a_k) x0) / sqrt(1 - a_k).
DecisionVector implied_noise(const DecisionVector& x_k, const DecisionVector& x0,
                             double alpha_k);

// One reverse step sqrt(a_prev) x0 + sqrt(1 - a_prev - sigma^2) eps + sigma xi,
// clamped to bounds. xi is the injected standard normal vector.
DecisionVector denoise_step(const DecisionVector& x0, const DecisionVector& eps,
                            double alpha_prev, double sigma, const DecisionVector& xi,
                            const Bounds& bounds);

enum class PriorKind { knee, kde };

// Full reverse pass over a subspace sub-population. The historical members are
// both the starting states and the candidate set of the posterior at every
// step; the pass runs k = K..2 and returns the step-1 states (one per input,
// clamped). Parallelized over members with noise pre-drawn serially, so the
// serial variant is bit-identical.
std::vector<DecisionVector> denoise_population(const std::vector<DecisionVector>& subpop,
                                               const DecisionVector& knee, double psi,
                                               const NoiseSchedule& schedule,
                                               const Bounds& bounds, RandomSource& rng,
                                               PriorKind prior = PriorKind::knee);
std::vector<DecisionVector> denoise_population_serial(const std::vector<DecisionVector>& subpop,
                                                      const DecisionVector& knee, double psi,
                                                      const NoiseSchedule& schedule,
                                                      const Bounds& bounds, RandomSource& rng,
                                                      PriorKind prior = PriorKind::knee);

// Uncertainty-aware guidance width: psi_min + lambda * E clamped to
// [psi_min, psi_max], where E is the previous knee prediction error.
struct GuidanceConfig {
  double psi_min = 0.1;
  double psi_max = 0.5;
  double lambda = 2.0;
};

double adaptive_psi(double prediction_error, const GuidanceConfig& cfg = {});
double adaptive_psi(const DecisionVector& predicted, const DecisionVector& actual,
                    const GuidanceConfig& cfg = {});

}  // namespace ddmoea
