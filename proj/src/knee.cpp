#include "ddmoea/knee.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace ddmoea {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

SubspacePartition partition(const Population& pop, int n_s, int objective_index) {
  if (n_s < 1) throw std::invalid_argument("partition: need at least one subspace");
  if (pop.empty()) throw std::invalid_argument("partition: empty population");
  SubspacePartition part;
  part.count = n_s;
  part.members.resize(n_s);
  part.assignment.resize(pop.size());

  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (const auto& ind : pop.members) {
    if (objective_index >= static_cast<int>(ind.f.size()))
      throw std::invalid_argument("partition: objective index out of range");
    lo = std::min(lo, ind.f[objective_index]);
    hi = std::max(hi, ind.f[objective_index]);
  }
  part.f_min = lo;
  part.f_max = hi;
  part.width = (hi - lo) / n_s;
  if (part.width <= 0.0) {
    part.degenerate = true;
    for (std::size_t i = 0; i < pop.size(); ++i) {
      part.assignment[i] = 0;
      part.members[0].push_back(i);
    }
    return part;
  }
  for (std::size_t i = 0; i < pop.size(); ++i) {
    const double v = pop.members[i].f[objective_index];
    int s = static_cast<int>((v - lo) / part.width);
    if (s >= n_s) s = n_s - 1;  // close the last interval so f_max belongs to it
    part.assignment[i] = s;
    part.members[s].push_back(i);
  }
  return part;
}

std::size_t extract_knee(const Population& pop, const std::vector<std::size_t>& member_idx) {
  if (member_idx.empty()) throw std::invalid_argument("extract_knee: empty member set");
  const std::size_t m = pop.members[member_idx.front()].f.size();
  if (member_idx.size() == 1) return member_idx.front();

  // Extreme point per objective: the member worst in f_j (lowest index on
  // ties). For a mutually non-dominated set these are the boundary points that
  // span the front; maximizing keeps them distinct even on a simplex corner
  // set, where per-objective minima collide.
  std::vector<std::size_t> extreme(m, member_idx.front());
  for (std::size_t j = 0; j < m; ++j) {
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t idx : member_idx) {
      const double v = pop.members[idx].f[j];
      if (v > best) {
        best = v;
        extreme[j] = idx;
      }
    }
  }

  std::vector<double> dist(member_idx.size(), 0.0);
  if (m == 2) {
    const auto& a = pop.members[extreme[0]].f;
    const auto& b = pop.members[extreme[1]].f;
    const double dx = b[0] - a[0], dy = b[1] - a[1];
    const double len = std::hypot(dx, dy);
    if (len > 0.0) {
      for (std::size_t k = 0; k < member_idx.size(); ++k) {
        const auto& f = pop.members[member_idx[k]].f;
        dist[k] = std::fabs(dx * (f[1] - a[1]) - dy * (f[0] - a[0])) / len;
      }
    }
  } else if (m == 3) {
    const auto& a = pop.members[extreme[0]].f;
    const auto& b = pop.members[extreme[1]].f;
    const auto& c = pop.members[extreme[2]].f;
    const double u[3] = {b[0] - a[0], b[1] - a[1], b[2] - a[2]};
    const double v[3] = {c[0] - a[0], c[1] - a[1], c[2] - a[2]};
    const double nrm[3] = {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2],
                           u[0] * v[1] - u[1] * v[0]};
    const double len = std::sqrt(nrm[0] * nrm[0] + nrm[1] * nrm[1] + nrm[2] * nrm[2]);
    if (len > 0.0) {
      for (std::size_t k = 0; k < member_idx.size(); ++k) {
        const auto& f = pop.members[member_idx[k]].f;
        dist[k] = std::fabs(nrm[0] * (f[0] - a[0]) + nrm[1] * (f[1] - a[1]) +
                            nrm[2] * (f[2] - a[2])) /
                  len;
      }
    }
  } else {
    throw std::invalid_argument("extract_knee: implemented for 2 or 3 objectives");
  }

  std::size_t best_k = 0;
  for (std::size_t k = 1; k < dist.size(); ++k)
    if (dist[k] > dist[best_k]) best_k = k;
  return member_idx[best_k];
}

PolarDirection direction_polar(const DecisionVector& prev, const DecisionVector& prev2) {
  if (prev.size() != prev2.size())
    throw std::invalid_argument("direction_polar: dimension mismatch");
  const std::size_t n = prev.size();
  if (n < 2) throw std::invalid_argument("direction_polar: need n >= 2");
  PolarDirection out;
  out.v.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.v[i] = prev[i] - prev2[i];
  out.r = norm2(out.v);
  out.beta.assign(n - 1, 0.0);
  if (out.r == 0.0) {
    out.zero = true;
    return out;
  }
  // beta_j = atan2(|tail after j|, v_j); the last angle keeps the sign of v_n
  // so the decomposition round-trips.
  double tail_sq = out.v[n - 1] * out.v[n - 1];
  out.beta[n - 2] = std::atan2(out.v[n - 1], out.v[n - 2]);
  for (std::size_t j = n - 2; j-- > 0;) {
    tail_sq += out.v[j + 1] * out.v[j + 1];
    out.beta[j] = std::atan2(std::sqrt(tail_sq), out.v[j]);
  }
  return out;
}

double sample_deflection(double r, RandomSource& rng) {
  if (r < 0.0) throw std::invalid_argument("sample_deflection: negative step length");
  if (r == 0.0) return 0.0;
  // Inverse CDF of |theta| under density ~ exp(-|theta|/r) truncated to [0, pi],
  // with a fair sign flip.
  const double u = rng.uniform01();
  const double mag = -r * std::log(1.0 - u * (1.0 - std::exp(-kPi / r)));
  const double sign = rng.uniform01() < 0.5 ? -1.0 : 1.0;
  return sign * std::min(mag, kPi);
}

std::vector<double> direction_components(const std::vector<double>& beta,
                                         const std::vector<double>& theta) {
  if (beta.size() != theta.size())
    throw std::invalid_argument("direction_components: angle count mismatch");
  const std::size_t n = beta.size() + 1;
  std::vector<double> comp(n);
  double sin_prod = 1.0;
  for (std::size_t j = 0; j + 1 < n; ++j) {
    const double a = beta[j] + theta[j];
    comp[j] = sin_prod * std::cos(a);
    sin_prod *= std::sin(a);
  }
  comp[n - 1] = sin_prod;
  return comp;
}

DecisionVector akp_predict(const DecisionVector& knee_prev, const DecisionVector& knee_prev2,
                           const Bounds& bounds, RandomSource& rng, bool deterministic_theta) {
  PolarDirection dir = direction_polar(knee_prev, knee_prev2);
  if (dir.zero) return clamp_to_bounds(knee_prev, bounds);
  std::vector<double> theta(dir.beta.size(), 0.0);
  if (!deterministic_theta)
    for (double& th : theta) th = sample_deflection(dir.r, rng);
  const std::vector<double> comp = direction_components(dir.beta, theta);
  DecisionVector next(knee_prev.size());
  for (std::size_t i = 0; i < next.size(); ++i) next[i] = knee_prev[i] + dir.r * comp[i];
  clamp_in_place(next, bounds);
  return next;
}

DecisionVector linear_predict(const DecisionVector& knee_prev, const DecisionVector& knee_prev2,
                              const Bounds& bounds) {
  if (knee_prev.size() != knee_prev2.size())
    throw std::invalid_argument("linear_predict: dimension mismatch");
  DecisionVector next(knee_prev.size());
  for (std::size_t i = 0; i < next.size(); ++i) next[i] = 2.0 * knee_prev[i] - knee_prev2[i];
  clamp_in_place(next, bounds);
  return next;
}

}  // namespace ddmoea
