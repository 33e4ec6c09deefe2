#include "ddmoea/ddm.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace ddmoea {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

NoiseSchedule cosine_schedule(int K) {
  if (K < 2) throw std::invalid_argument("cosine_schedule: need K >= 2");
  NoiseSchedule s;
  s.alpha.resize(K + 1);
  for (int k = 0; k <= K; ++k)
    s.alpha[k] = 0.5 * (std::cos(static_cast<double>(k) * kPi / K) + 1.0);
  s.alpha[0] = 1.0;
  s.alpha[K] = 0.0;
  return s;
}

NoiseSchedule linear_schedule(int K) {
  if (K < 2) throw std::invalid_argument("linear_schedule: need K >= 2");
  NoiseSchedule s;
  s.alpha.resize(K + 1);
  for (int k = 0; k <= K; ++k) s.alpha[k] = 1.0 - static_cast<double>(k) / K;
  s.alpha[K] = 0.0;
  return s;
}

NoiseSchedule make_schedule(ScheduleKind kind, int K) {
  return kind == ScheduleKind::cosine ? cosine_schedule(K) : linear_schedule(K);
}

double ddim_sigma(double alpha_prev, double alpha_cur) {
  if (!(alpha_prev > 0.0 && alpha_prev <= 1.0) || alpha_cur < 0.0 || alpha_cur >= alpha_prev)
    throw std::invalid_argument("ddim_sigma: need 0 <= alpha_cur < alpha_prev <= 1");
  const double s2 = (1.0 - alpha_prev) / (1.0 - alpha_cur) * (1.0 - alpha_cur / alpha_prev);
  return std::sqrt(std::max(s2, 0.0));
}

double knee_prior_log_density(const DecisionVector& x, const DecisionVector& knee, double psi) {
  if (x.size() != knee.size())
    throw std::invalid_argument("knee_prior_log_density: dimension mismatch");
  if (psi <= 0.0) throw std::invalid_argument("knee_prior_log_density: psi must be > 0");
  const double n = static_cast<double>(x.size());
  return -0.5 * squared_distance(x, knee) / (psi * psi) -
         n * std::log(psi) - 0.5 * n * std::log(2.0 * kPi);
}

Posterior posterior_x0_logprior(const std::vector<DecisionVector>& samples,
                                const std::vector<double>& log_prior,
                                const DecisionVector& x_k, double alpha_k) {
  if (samples.empty()) throw std::invalid_argument("posterior_x0: no samples");
  if (samples.size() != log_prior.size())
    throw std::invalid_argument("posterior_x0: prior/sample count mismatch");
  if (!(alpha_k >= 0.0 && alpha_k < 1.0))
    throw std::invalid_argument("posterior_x0: need 0 <= alpha_k < 1");
  const std::size_t n = x_k.size();
  const double var = 1.0 - alpha_k;
  const double sqrt_a = std::sqrt(alpha_k);

  std::vector<double> lw(samples.size());
  double lw_max = -std::numeric_limits<double>::infinity();
  for (std::size_t l = 0; l < samples.size(); ++l) {
    double d2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double d = x_k[i] - sqrt_a * samples[l][i];
      d2 += d * d;
    }
    lw[l] = log_prior[l] - 0.5 * d2 / var;  // shared Gaussian normalizer cancels
    lw_max = std::max(lw_max, lw[l]);
  }

  Posterior post;
  post.weights.resize(samples.size());
  if (!std::isfinite(lw_max)) {
    std::fprintf(stderr, "posterior_x0: degenerate weights, falling back to uniform\n");
    std::fill(post.weights.begin(), post.weights.end(), 1.0 / samples.size());
  } else {
    double z = 0.0;
    for (std::size_t l = 0; l < samples.size(); ++l) {
      post.weights[l] = std::exp(lw[l] - lw_max);
      z += post.weights[l];
    }
    for (double& w : post.weights) w /= z;
  }

  post.x0.assign(n, 0.0);
  for (std::size_t l = 0; l < samples.size(); ++l)
    for (std::size_t i = 0; i < n; ++i) post.x0[i] += post.weights[l] * samples[l][i];
  return post;
}

Posterior posterior_x0(const std::vector<DecisionVector>& samples, const DecisionVector& x_k,
                       double alpha_k, const DecisionVector& knee, double psi) {
  std::vector<double> lp(samples.size());
  for (std::size_t l = 0; l < samples.size(); ++l)
    lp[l] = knee_prior_log_density(samples[l], knee, psi);
  return posterior_x0_logprior(samples, lp, x_k, alpha_k);
}

DecisionVector implied_noise(const DecisionVector& x_k, const DecisionVector& x0,
                             double alpha_k) {
  if (x_k.size() != x0.size()) throw std::invalid_argument("implied_noise: dimension mismatch");
  if (!(alpha_k >= 0.0 && alpha_k < 1.0))
    throw std::invalid_argument("implied_noise: need 0 <= alpha_k < 1");
  const double sqrt_a = std::sqrt(alpha_k);
  const double inv = 1.0 / std::sqrt(1.0 - alpha_k);
  DecisionVector eps(x_k.size());
  for (std::size_t i = 0; i < eps.size(); ++i) eps[i] = (x_k[i] - sqrt_a * x0[i]) * inv;
  return eps;
}

DecisionVector denoise_step(const DecisionVector& x0, const DecisionVector& eps,
                            double alpha_prev, double sigma, const DecisionVector& xi,
                            const Bounds& bounds) {
  if (x0.size() != eps.size() || x0.size() != xi.size() || x0.size() != bounds.dim())
    throw std::invalid_argument("denoise_step: dimension mismatch");
  double rad = 1.0 - alpha_prev - sigma * sigma;
  if (rad < 0.0) {
    if (rad < -1e-9) throw std::invalid_argument("denoise_step: sigma too large for alpha_prev");
    rad = 0.0;
  }
  const double c0 = std::sqrt(alpha_prev);
  const double ce = std::sqrt(rad);
  DecisionVector next(x0.size());
  for (std::size_t i = 0; i < next.size(); ++i)
    next[i] = c0 * x0[i] + ce * eps[i] + sigma * xi[i];
  clamp_in_place(next, bounds);
  return next;
}

namespace {

// Silverman-style bandwidth for an isotropic Gaussian KDE over the candidates.
double kde_bandwidth(const std::vector<DecisionVector>& pts) {
  const std::size_t M = pts.size();
  const std::size_t n = pts.front().size();
  double avg_sd = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double mean = 0.0;
    for (const auto& p : pts) mean += p[i];
    mean /= static_cast<double>(M);
    double ss = 0.0;
    for (const auto& p : pts) ss += (p[i] - mean) * (p[i] - mean);
    avg_sd += M > 1 ? std::sqrt(ss / static_cast<double>(M - 1)) : 0.0;
  }
  avg_sd /= static_cast<double>(n);
  const double nd = static_cast<double>(n);
  double h = avg_sd * std::pow(4.0 / ((nd + 2.0) * static_cast<double>(M)), 1.0 / (nd + 4.0));
  return h > 1e-12 ? h : 1e-12;
}

std::vector<double> kde_log_density(const std::vector<DecisionVector>& pts) {
  const double h = kde_bandwidth(pts);
  const double inv2h2 = 0.5 / (h * h);
  std::vector<double> out(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    // log of the kernel sum via log-sum-exp; constants shared by all points
    // are dropped since the posterior normalizes them away.
    double best = -std::numeric_limits<double>::infinity();
    std::vector<double> terms(pts.size());
    for (std::size_t j = 0; j < pts.size(); ++j) {
      terms[j] = -squared_distance(pts[i], pts[j]) * inv2h2;
      best = std::max(best, terms[j]);
    }
    double z = 0.0;
    for (double t : terms) z += std::exp(t - best);
    out[i] = best + std::log(z);
  }
  return out;
}

std::vector<DecisionVector> denoise_impl(const std::vector<DecisionVector>& subpop,
                                         const DecisionVector& knee, double psi,
                                         const NoiseSchedule& schedule, const Bounds& bounds,
                                         RandomSource& rng, PriorKind prior, bool parallel) {
  if (subpop.empty()) return {};
  const int K = schedule.steps();
  if (K < 2) throw std::invalid_argument("denoise_population: schedule too short");
  const std::size_t n = bounds.dim();
  for (const auto& s : subpop)
    if (s.size() != n) throw std::invalid_argument("denoise_population: dimension mismatch");

  std::vector<double> log_prior(subpop.size());
  if (prior == PriorKind::knee) {
    for (std::size_t l = 0; l < subpop.size(); ++l)
      log_prior[l] = knee_prior_log_density(subpop[l], knee, psi);
  } else {
    log_prior = kde_log_density(subpop);
  }

  std::vector<DecisionVector> states = subpop;
  std::vector<DecisionVector> next(states.size(), DecisionVector(n));
  std::vector<double> xi(states.size() * n);
  const std::int64_t M = static_cast<std::int64_t>(states.size());

  for (int k = K; k >= 2; --k) {
    const double a_cur = schedule.alpha[k];
    const double a_prev = schedule.alpha[k - 1];
    const double sigma = ddim_sigma(a_prev, a_cur);
    for (double& v : xi) v = rng.normal();  // pre-drawn so thread count cannot matter

#pragma omp parallel for schedule(static) if (parallel)
    for (std::int64_t j = 0; j < M; ++j) {
      const Posterior post = posterior_x0_logprior(subpop, log_prior, states[j], a_cur);
      const DecisionVector eps = implied_noise(states[j], post.x0, a_cur);
      const DecisionVector noise(xi.begin() + j * static_cast<std::int64_t>(n),
                                 xi.begin() + (j + 1) * static_cast<std::int64_t>(n));
      next[j] = denoise_step(post.x0, eps, a_prev, sigma, noise, bounds);
    }
    states.swap(next);
  }
  return states;
}

}  // namespace

std::vector<DecisionVector> denoise_population(const std::vector<DecisionVector>& subpop,
                                               const DecisionVector& knee, double psi,
                                               const NoiseSchedule& schedule,
                                               const Bounds& bounds, RandomSource& rng,
                                               PriorKind prior) {
  return denoise_impl(subpop, knee, psi, schedule, bounds, rng, prior, true);
}

std::vector<DecisionVector> denoise_population_serial(const std::vector<DecisionVector>& subpop,
                                                      const DecisionVector& knee, double psi,
                                                      const NoiseSchedule& schedule,
                                                      const Bounds& bounds, RandomSource& rng,
                                                      PriorKind prior) {
  return denoise_impl(subpop, knee, psi, schedule, bounds, rng, prior, false);
}

double adaptive_psi(double prediction_error, const GuidanceConfig& cfg) {
  if (prediction_error < 0.0) throw std::invalid_argument("adaptive_psi: negative error");
  return std::min(cfg.psi_max, std::max(cfg.psi_min, cfg.psi_min + cfg.lambda * prediction_error));
}

double adaptive_psi(const DecisionVector& predicted, const DecisionVector& actual,
                    const GuidanceConfig& cfg) {
  if (predicted.size() != actual.size())
    throw std::invalid_argument("adaptive_psi: dimension mismatch");
  return adaptive_psi(euclidean(predicted, actual), cfg);
}

}  // namespace ddmoea
