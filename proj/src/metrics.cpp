#include "ddmoea/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace ddmoea {

namespace {

double min_distance_to(const ObjectiveVector& ref, const std::vector<ObjectiveVector>& pts) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& p : pts) best = std::min(best, squared_distance(ref, p));
  return std::sqrt(best);
}

void check_igd_args(const ReferenceFront& ref, const std::vector<ObjectiveVector>& attained) {
  if (ref.points.empty()) throw std::invalid_argument("igd: empty reference front");
  if (attained.empty()) throw std::invalid_argument("igd: empty attained set");
  if (ref.points.front().size() != attained.front().size())
    throw std::invalid_argument("igd: objective dimension mismatch");
}

}  // namespace

double igd(const ReferenceFront& ref, const std::vector<ObjectiveVector>& attained) {
  check_igd_args(ref, attained);
  const std::int64_t R = static_cast<std::int64_t>(ref.points.size());
  std::vector<double> dist(R);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < R; ++i)
    dist[i] = min_distance_to(ref.points[i], attained);
  // Sum serially in index order so the result does not depend on thread count.
  double total = 0.0;
  for (double d : dist) total += d;
  return total / static_cast<double>(R);
}

double igd_serial(const ReferenceFront& ref, const std::vector<ObjectiveVector>& attained) {
  check_igd_args(ref, attained);
  double total = 0.0;
  for (const auto& r : ref.points) total += min_distance_to(r, attained);
  return total / static_cast<double>(ref.points.size());
}

double igd(const ReferenceFront& ref, const Population& pop) {
  std::vector<ObjectiveVector> objs;
  objs.reserve(pop.size());
  for (const auto& ind : pop.members) objs.push_back(ind.f);
  return igd(ref, objs);
}

namespace {

std::vector<ObjectiveVector> hv_filter(const std::vector<ObjectiveVector>& pts,
                                       const ObjectiveVector& r) {
  std::vector<ObjectiveVector> in;
  for (const auto& p : pts) {
    if (p.size() != r.size())
      throw std::invalid_argument("hv: objective dimension mismatch");
    bool ok = true;
    for (std::size_t j = 0; j < r.size(); ++j)
      if (p[j] >= r[j]) {
        ok = false;
        break;
      }
    if (ok) in.push_back(p);
  }
  return in;
}

double hv2d(std::vector<ObjectiveVector> pts, double r1, double r2) {
  std::sort(pts.begin(), pts.end(), [](const ObjectiveVector& a, const ObjectiveVector& b) {
    if (a[0] != b[0]) return a[0] < b[0];
    return a[1] < b[1];
  });
  double area = 0.0;
  double best_f2 = r2;
  for (const auto& p : pts) {
    if (p[1] < best_f2) {
      area += (r1 - p[0]) * (best_f2 - p[1]);
      best_f2 = p[1];
    }
  }
  return area;
}

// Sweep along f3: between consecutive f3 levels the dominated region is a
// constant 2-D staircase, so the volume is the 2-D area times the slab height.
double hv3d(const std::vector<ObjectiveVector>& pts, const ObjectiveVector& r) {
  std::vector<double> levels;
  levels.reserve(pts.size());
  for (const auto& p : pts) levels.push_back(p[2]);
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  double volume = 0.0;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    const double z0 = levels[i];
    const double z1 = i + 1 < levels.size() ? levels[i + 1] : r[2];
    std::vector<ObjectiveVector> active;
    for (const auto& p : pts)
      if (p[2] <= z0) active.push_back({p[0], p[1]});
    volume += hv2d(std::move(active), r[0], r[1]) * (z1 - z0);
  }
  return volume;
}

}  // namespace

double hv(const std::vector<ObjectiveVector>& pts, const ObjectiveVector& r) {
  if (r.size() != 2 && r.size() != 3)
    throw std::invalid_argument("hv: exact hypervolume implemented for 2 or 3 objectives");
  auto in = hv_filter(pts, r);
  if (in.empty()) return 0.0;
  return r.size() == 2 ? hv2d(std::move(in), r[0], r[1]) : hv3d(in, r);
}

namespace {

double hv_mc_impl(const std::vector<ObjectiveVector>& pts, const ObjectiveVector& r,
                  std::size_t samples, RandomSource& rng, double* stderr_out, bool parallel) {
  if (samples == 0) throw std::invalid_argument("hv_monte_carlo: samples must be > 0");
  auto in = hv_filter(pts, r);
  const std::size_t m = r.size();
  if (in.empty()) {
    if (stderr_out) *stderr_out = 0.0;
    return 0.0;
  }
  ObjectiveVector lo(m, std::numeric_limits<double>::infinity());
  for (const auto& p : in)
    for (std::size_t j = 0; j < m; ++j) lo[j] = std::min(lo[j], p[j]);
  double box = 1.0;
  for (std::size_t j = 0; j < m; ++j) box *= r[j] - lo[j];

  // Draw all sample coordinates up front so parallel and serial versions count
  // the same points.
  std::vector<double> draws(samples * m);
  for (double& d : draws) d = rng.uniform01();

  const std::int64_t S = static_cast<std::int64_t>(samples);
  std::int64_t hits = 0;
#pragma omp parallel for schedule(static) reduction(+ : hits) if (parallel)
  for (std::int64_t s = 0; s < S; ++s) {
    double q[3];
    for (std::size_t j = 0; j < m; ++j)
      q[j] = lo[j] + draws[static_cast<std::size_t>(s) * m + j] * (r[j] - lo[j]);
    for (const auto& p : in) {
      bool dom = true;
      for (std::size_t j = 0; j < m; ++j)
        if (p[j] > q[j]) {
          dom = false;
          break;
        }
      if (dom) {
        ++hits;
        break;
      }
    }
  }
  const double frac = static_cast<double>(hits) / static_cast<double>(samples);
  if (stderr_out)
    *stderr_out = box * std::sqrt(frac * (1.0 - frac) / static_cast<double>(samples));
  return box * frac;
}

}  // namespace

double hv_monte_carlo(const std::vector<ObjectiveVector>& pts, const ObjectiveVector& r,
                      std::size_t samples, RandomSource& rng, double* stderr_out) {
  return hv_mc_impl(pts, r, samples, rng, stderr_out, true);
}

double hv_monte_carlo_serial(const std::vector<ObjectiveVector>& pts, const ObjectiveVector& r,
                             std::size_t samples, RandomSource& rng, double* stderr_out) {
  return hv_mc_impl(pts, r, samples, rng, stderr_out, false);
}

SeriesSummary summarize(const std::vector<double>& values) {
  if (values.empty()) throw std::invalid_argument("summarize: empty series");
  SeriesSummary s;
  for (double v : values) s.mean += v;
  s.mean /= static_cast<double>(values.size());
  if (values.size() > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - s.mean) * (v - s.mean);
    s.stddev = std::sqrt(ss / static_cast<double>(values.size() - 1));
  }
  return s;
}

RankSumResult wilcoxon_rank_sum(const std::vector<double>& a, const std::vector<double>& b) {
  const std::size_t na = a.size(), nb = b.size();
  if (na < 5 || nb < 5)
    throw std::invalid_argument("wilcoxon_rank_sum: need at least 5 samples per side");
  struct Tagged {
    double v;
    bool from_a;
  };
  std::vector<Tagged> all;
  all.reserve(na + nb);
  for (double v : a) all.push_back({v, true});
  for (double v : b) all.push_back({v, false});
  std::sort(all.begin(), all.end(), [](const Tagged& x, const Tagged& y) { return x.v < y.v; });

  const std::size_t n = na + nb;
  double rank_sum_a = 0.0;
  double tie_term = 0.0;  // sum of t^3 - t over tie groups
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && all[j + 1].v == all[i].v) ++j;
    const double t = static_cast<double>(j - i + 1);
    const double avg_rank = 0.5 * (static_cast<double>(i + 1) + static_cast<double>(j + 1));
    for (std::size_t k = i; k <= j; ++k)
      if (all[k].from_a) rank_sum_a += avg_rank;
    if (t > 1.0) tie_term += t * t * t - t;
    i = j + 1;
  }

  RankSumResult res;
  res.u = rank_sum_a - static_cast<double>(na) * (na + 1) / 2.0;
  const double mu = static_cast<double>(na) * static_cast<double>(nb) / 2.0;
  const double dn = static_cast<double>(n);
  const double var = static_cast<double>(na) * static_cast<double>(nb) / 12.0 *
                     (dn + 1.0 - tie_term / (dn * (dn - 1.0)));
  if (var <= 0.0) return res;  // all observations tied

  double num = res.u - mu;
  // continuity correction toward zero
  if (num > 0.0)
    num -= 0.5;
  else if (num < 0.0)
    num += 0.5;
  res.z = num / std::sqrt(var);
  const double z_crit = 1.959963984540054;  // two-sided, alpha = 0.05
  if (res.z <= -z_crit) {
    res.significant = true;
    res.direction = '+';
  } else if (res.z >= z_crit) {
    res.significant = true;
    res.direction = '-';
  }
  return res;
}

}  // namespace ddmoea
