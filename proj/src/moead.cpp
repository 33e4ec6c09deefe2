#include "ddmoea/moead.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace ddmoea {

namespace {

// Fixed seed for lattice padding so weight sets are identical across runs.
constexpr std::uint64_t kWeightPadSeed = 0x5eedfeedULL;

// All compositions of H into m non-negative parts, scaled to the unit simplex.
std::vector<std::vector<double>> simplex_lattice(int H, int m) {
  std::vector<std::vector<double>> out;
  std::vector<double> w(m);
  std::vector<int> comp(m);
  std::function<void(int, int)> rec = [&](int level, int remaining) {
    if (level == m - 1) {
      comp[level] = remaining;
      for (int j = 0; j < m; ++j) w[j] = static_cast<double>(comp[j]) / H;
      out.push_back(w);
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      comp[level] = v;
      rec(level + 1, remaining - v);
    }
  };
  rec(0, H);
  return out;
}

}  // namespace

WeightSet weight_vectors(int N, int m, int T) {
  if (N < 1 || m < 2) throw std::invalid_argument("weight_vectors: need N >= 1, m >= 2");
  WeightSet ws;
  if (m == 2) {
    // H = N-1 fills exactly N points.
    ws.weights.reserve(N);
    if (N == 1) {
      ws.weights.push_back({0.5, 0.5});
    } else {
      for (int i = 0; i < N; ++i) {
        const double w1 = static_cast<double>(i) / (N - 1);
        ws.weights.push_back({w1, 1.0 - w1});
      }
    }
  } else {
    // largest lattice that fits within N
    int H = 1;
    auto lattice_size = [&](int h) {
      long long size = 1;
      for (int j = 1; j < m; ++j) size = size * (h + j) / j;  // C(h+m-1, m-1)
      return size;
    };
    while (lattice_size(H + 1) <= N) ++H;
    ws.weights = simplex_lattice(H, m);
    RandomSource pad_rng(kWeightPadSeed);
    while (static_cast<int>(ws.weights.size()) < N) {
      std::vector<double> w(m);
      double sum = 0.0;
      for (int j = 0; j < m; ++j) {
        w[j] = -std::log(1.0 - pad_rng.uniform01());
        sum += w[j];
      }
      for (int j = 0; j < m; ++j) w[j] /= sum;
      ws.weights.push_back(w);
    }
  }

  const int n = static_cast<int>(ws.weights.size());
  const int t = std::min(T, n);
  ws.neighbors.resize(n);
  std::vector<std::pair<double, int>> d(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      d[j] = {squared_distance(ws.weights[i], ws.weights[j]), j};
    std::sort(d.begin(), d.end());
    ws.neighbors[i].reserve(t);
    for (int j = 0; j < t; ++j) ws.neighbors[i].push_back(d[j].second);
  }
  return ws;
}

double tchebycheff(const ObjectiveVector& f, const std::vector<double>& w,
                   const ObjectiveVector& z) {
  if (f.size() != w.size() || f.size() != z.size())
    throw std::invalid_argument("tchebycheff: dimension mismatch");
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < f.size(); ++j) {
    const double wj = std::max(w[j], 1e-6);
    best = std::max(best, wj * std::fabs(f[j] - z[j]));
  }
  return best;
}

DecisionVector sbx_crossover(const DecisionVector& a, const DecisionVector& b,
                             const Bounds& bounds, RandomSource& rng, double eta_c, double pc) {
  if (a.size() != b.size() || a.size() != bounds.dim())
    throw std::invalid_argument("sbx_crossover: dimension mismatch");
  DecisionVector child = a;
  if (rng.uniform01() > pc) return child;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (rng.uniform01() > 0.5) continue;
    const double y1 = std::min(a[i], b[i]);
    const double y2 = std::max(a[i], b[i]);
    if (y2 - y1 < 1e-14) continue;
    const double lo = bounds.lower[i], hi = bounds.upper[i];
    const double u = rng.uniform01();

    auto spread = [&](double beta) {
      const double alpha = 2.0 - std::pow(beta, -(eta_c + 1.0));
      if (u <= 1.0 / alpha) return std::pow(u * alpha, 1.0 / (eta_c + 1.0));
      return std::pow(1.0 / (2.0 - u * alpha), 1.0 / (eta_c + 1.0));
    };
    const double beta_l = 1.0 + 2.0 * (y1 - lo) / (y2 - y1);
    const double beta_u = 1.0 + 2.0 * (hi - y2) / (y2 - y1);
    double c1 = 0.5 * ((y1 + y2) - spread(beta_l) * (y2 - y1));
    double c2 = 0.5 * ((y1 + y2) + spread(beta_u) * (y2 - y1));
    c1 = std::min(std::max(c1, lo), hi);
    c2 = std::min(std::max(c2, lo), hi);
    child[i] = rng.uniform01() <= 0.5 ? c1 : c2;
  }
  return child;
}

DecisionVector poly_mutation(const DecisionVector& x, const Bounds& bounds, RandomSource& rng,
                             double eta_m, double pm) {
  if (x.size() != bounds.dim())
    throw std::invalid_argument("poly_mutation: dimension mismatch");
  const double rate = pm < 0.0 ? 1.0 / static_cast<double>(x.size()) : pm;
  DecisionVector y = x;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (rng.uniform01() > rate) continue;
    const double lo = bounds.lower[i], hi = bounds.upper[i];
    const double span = hi - lo;
    if (span <= 0.0) continue;
    const double d1 = (y[i] - lo) / span;
    const double d2 = (hi - y[i]) / span;
    const double u = rng.uniform01();
    const double mut_pow = 1.0 / (eta_m + 1.0);
    double deltaq;
    if (u < 0.5) {
      const double xy = 1.0 - d1;
      const double val = 2.0 * u + (1.0 - 2.0 * u) * std::pow(xy, eta_m + 1.0);
      deltaq = std::pow(val, mut_pow) - 1.0;
    } else {
      const double xy = 1.0 - d2;
      const double val = 2.0 * (1.0 - u) + 2.0 * (u - 0.5) * std::pow(xy, eta_m + 1.0);
      deltaq = 1.0 - std::pow(val, mut_pow);
    }
    y[i] = std::min(std::max(y[i] + deltaq * span, lo), hi);
  }
  return y;
}

Population optimize(const Population& init, const DmopInstance& p, double t, int generations,
                    const MoeadParams& params, RandomSource& rng,
                    std::uint64_t* eval_counter, MoeadTrace* trace) {
  if (generations < 1) throw std::invalid_argument("optimize: generations must be >= 1");
  if (init.empty()) throw std::invalid_argument("optimize: empty initial population");
  const int N = init.capacity > 0 ? static_cast<int>(init.capacity)
                                  : static_cast<int>(init.size());
  for (const auto& ind : init.members) {
    if (static_cast<int>(ind.f.size()) != p.m || ind.t_eval != t)
      throw std::logic_error("optimize: initial population not evaluated at t");
  }

  WeightSet ws = weight_vectors(N, p.m, params.T);

  // ideal point from the pool
  ObjectiveVector z(p.m, std::numeric_limits<double>::infinity());
  for (const auto& ind : init.members)
    for (int j = 0; j < p.m; ++j) z[j] = std::min(z[j], ind.f[j]);

  // One individual per subproblem: pool member with the best Tchebycheff value
  // for that weight, chosen with replacement. This also truncates an over-full
  // pool and is a no-op fixed point when variation is disabled.
  std::vector<Individual> pop(N);
  for (int i = 0; i < N; ++i) {
    std::size_t best = 0;
    double best_v = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < init.size(); ++k) {
      const double v = tchebycheff(init.members[k].f, ws.weights[i], z);
      if (v < best_v) {
        best_v = v;
        best = k;
      }
    }
    pop[i] = init.members[best];
  }

  const double rate = params.pm;
  std::vector<int> whole(N);
  std::iota(whole.begin(), whole.end(), 0);

  for (int gen = 0; gen < generations; ++gen) {
    for (int i = 0; i < N; ++i) {
      const bool local = rng.uniform01() <= params.neighbor_prob;
      const std::vector<int>& scope = local ? ws.neighbors[i] : whole;
      const int sz = static_cast<int>(scope.size());
      const int k = scope[rng.uniform_int(0, sz - 1)];
      int l = scope[rng.uniform_int(0, sz - 1)];
      while (sz > 1 && l == k) l = scope[rng.uniform_int(0, sz - 1)];

      Individual child;
      child.x = sbx_crossover(pop[k].x, pop[l].x, p.bounds, rng, params.eta_c, params.pc);
      child.x = poly_mutation(child.x, p.bounds, rng, params.eta_m, rate);
      child.f = evaluate(p, child.x, t);
      child.t_eval = t;
      child.origin = Origin::offspring;
      if (eval_counter) ++*eval_counter;

      for (int j = 0; j < p.m; ++j) z[j] = std::min(z[j], child.f[j]);

      // replace at most nr members of the scope, visited in random order
      std::vector<int> order = scope;
      for (int a = static_cast<int>(order.size()) - 1; a > 0; --a)
        std::swap(order[a], order[rng.uniform_int(0, a)]);
      int replaced = 0;
      for (int idx : order) {
        if (replaced >= params.nr) break;
        if (tchebycheff(child.f, ws.weights[idx], z) <
            tchebycheff(pop[idx].f, ws.weights[idx], z)) {
          pop[idx] = child;
          ++replaced;
        }
      }
    }
    if (trace) trace->ideal_per_generation.push_back(z);
  }

  Population result;
  result.capacity = N;
  result.members = std::move(pop);
  return pareto_filter(result);
}

}  // namespace ddmoea
