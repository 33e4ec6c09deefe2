// DF benchmark suite (CEC 2018 competition on dynamic multiobjective
// optimization, Jiang et al., "Benchmark Problems for CEC2018 Competition on
// Dynamic Multiobjective Optimisation"). Objective bodies below follow the
// official problem definitions.

#include "ddmoea/problems.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace ddmoea {

namespace {

constexpr double kPi = 3.14159265358979323846;

Bounds df_bounds(int index, int n) {
  Bounds b;
  b.lower.assign(n, 0.0);
  b.upper.assign(n, 1.0);
  switch (index) {
    case 1:
    case 2:
      break;  // [0,1]^n
    case 3:
      for (int i = 1; i < n; ++i) {
        b.lower[i] = -1.0;
        b.upper[i] = 2.0;
      }
      break;
    case 4:
      for (int i = 0; i < n; ++i) {
        b.lower[i] = -2.0;
        b.upper[i] = 2.0;
      }
      break;
    case 5:
    case 6:
    case 8:
    case 9:
      for (int i = 1; i < n; ++i) {
        b.lower[i] = -1.0;
        b.upper[i] = 1.0;
      }
      break;
    case 7:
      b.lower[0] = 1.0;
      b.upper[0] = 4.0;
      break;
    case 10:
    case 11:
    case 12:
    case 13:
    case 14:
      for (int i = 2; i < n; ++i) {
        b.lower[i] = -1.0;
        b.upper[i] = 1.0;
      }
      break;
    default:
      throw std::invalid_argument("df_bounds: bad instance index");
  }
  return b;
}

int df_objectives(int index) { return index <= 9 ? 2 : 3; }

double sqr(double v) { return v * v; }

}  // namespace

double time_of(const TimeContext& ctx) {
  if (ctx.severity <= 0 || ctx.frequency <= 0 || ctx.generation < 0)
    throw std::invalid_argument("time_of: n_t, tau_t must be positive and tau >= 0");
  return static_cast<double>(ctx.generation / ctx.frequency) / ctx.severity;
}

const std::vector<DmopInstance>& catalog() {
  static const std::vector<DmopInstance> instances = [] {
    std::vector<DmopInstance> v;
    for (int i = 1; i <= 14; ++i) v.push_back(make_instance("DF" + std::to_string(i)));
    return v;
  }();
  return instances;
}

DmopInstance make_instance(const std::string& id, int n) {
  if (id.size() < 3 || id.compare(0, 2, "DF") != 0)
    throw std::invalid_argument("unknown problem id: " + id);
  int index = 0;
  try {
    index = std::stoi(id.substr(2));
  } catch (...) {
    throw std::invalid_argument("unknown problem id: " + id);
  }
  if (index < 1 || index > 14) throw std::invalid_argument("unknown problem id: " + id);
  const int min_n = index <= 9 ? 2 : 3;
  if (n < min_n) throw std::invalid_argument("dimension too small for " + id);
  DmopInstance p;
  p.id = "DF" + std::to_string(index);
  p.index = index;
  p.n = n;
  p.m = df_objectives(index);
  p.bounds = df_bounds(index, n);
  return p;
}

ObjectiveVector evaluate(const DmopInstance& p, const DecisionVector& x, double t) {
  if (static_cast<int>(x.size()) != p.n)
    throw std::invalid_argument("evaluate: decision vector has wrong dimension");
  const int n = p.n;
  ObjectiveVector f(p.m, 0.0);

  switch (p.index) {
    case 1: {
      const double G = std::fabs(std::sin(0.5 * kPi * t));
      const double H = 0.75 * std::sin(0.5 * kPi * t) + 1.25;
      double g = 1.0;
      for (int i = 1; i < n; ++i) g += sqr(x[i] - G);
      f[0] = x[0];
      f[1] = g * (1.0 - std::pow(x[0] / g, H));
      break;
    }
    case 2: {
      const double G = std::fabs(std::sin(0.5 * kPi * t));
      const int r = 1 + static_cast<int>(std::floor((n - 1) * G));  // 1-based position index
      double g = 1.0;
      for (int i = 0; i < n; ++i)
        if (i != r - 1) g += sqr(x[i] - G);
      f[0] = x[r - 1];
      f[1] = g * (1.0 - std::pow(x[r - 1] / g, 0.5));
      break;
    }
    case 3: {
      const double G = std::sin(0.5 * kPi * t);
      const double H = G + 1.5;
      double g = 1.0;
      for (int i = 1; i < n; ++i) g += sqr(x[i] - G - std::pow(x[0], H));
      f[0] = x[0];
      f[1] = g * (1.0 - std::pow(x[0] / g, H));
      break;
    }
    case 4: {
      const double a = std::sin(0.5 * kPi * t);
      const double b = 1.0 + std::fabs(std::cos(0.5 * kPi * t));
      const double c = std::max(std::fabs(a), a + b);
      const double H = 1.5 + a;
      double g = 1.0;
      for (int i = 1; i < n; ++i) g += sqr(x[i] - a * sqr(x[0] / c));
      f[0] = g * std::pow(std::fabs(x[0] - a), H);
      f[1] = g * std::pow(std::fabs(x[0] - a - b), H);
      break;
    }
    case 5: {
      const double G = std::sin(0.5 * kPi * t);
      const int w = static_cast<int>(std::floor(10.0 * G));
      double g = 1.0;
      for (int i = 1; i < n; ++i) g += sqr(x[i] - G);
      f[0] = g * (x[0] + 0.02 * std::sin(w * kPi * x[0]));
      f[1] = g * (1.0 - x[0] + 0.02 * std::sin(w * kPi * x[0]));
      break;
    }
    case 6: {
      const double G = std::sin(0.5 * kPi * t);
      const double a = 0.2 + 2.8 * std::fabs(G);
      double g = 1.0;
      for (int i = 1; i < n; ++i) {
        const double y = x[i] - G;
        g += std::fabs(G) * y * y - 10.0 * std::cos(2.0 * kPi * y) + 10.0;
      }
      f[0] = g * std::pow(x[0] + 0.1 * std::sin(3.0 * kPi * x[0]), a);
      f[1] = g * std::pow(1.0 - x[0] + 0.1 * std::sin(3.0 * kPi * x[0]), a);
      break;
    }
    case 7: {
      const double a = 5.0 * std::cos(0.5 * kPi * t);
      const double tmp = 1.0 / (1.0 + std::exp(a * (x[0] - 2.5)));
      double g = 1.0;
      for (int i = 1; i < n; ++i) g += sqr(x[i] - tmp);
      f[0] = g * (1.0 + t) / x[0];
      f[1] = g * x[0] / (1.0 + t);
      break;
    }
    case 8: {
      const double G = std::sin(0.5 * kPi * t);
      const double a = 2.25 + 2.0 * std::cos(2.0 * kPi * t);
      const double tmp = G * std::sin(4.0 * kPi * x[0]) / (1.0 + std::fabs(G));
      double g = 1.0;
      for (int i = 1; i < n; ++i) g += sqr(x[i] - tmp);
      f[0] = g * (x[0] + 0.1 * std::sin(3.0 * kPi * x[0]));
      f[1] = g * std::pow(1.0 - x[0] + 0.1 * std::sin(3.0 * kPi * x[0]), a);
      break;
    }
    case 9: {
      const double N = 1.0 + std::floor(10.0 * std::fabs(std::sin(0.5 * kPi * t)));
      double g = 1.0;
      for (int i = 1; i < n; ++i) {
        const double tmp = x[i] - std::cos(4.0 * t + x[0] + x[i - 1]);
        g += tmp * tmp;
      }
      const double pen = std::max(0.0, (0.1 + 0.5 / N) * std::sin(2.0 * N * kPi * x[0]));
      f[0] = g * (x[0] + pen);
      f[1] = g * (1.0 - x[0] + pen);
      break;
    }
    case 10: {
      const double G = std::sin(0.5 * kPi * t);
      const double H = 2.25 + 2.0 * std::cos(0.5 * kPi * t);
      const double tmp = std::sin(4.0 * kPi * (x[0] + x[1])) / (1.0 + std::fabs(G));
      double g = 1.0;
      for (int i = 2; i < n; ++i) g += sqr(x[i] - tmp);
      f[0] = g * std::pow(std::sin(0.5 * kPi * x[0]), H);
      f[1] = g * std::pow(std::sin(0.5 * kPi * x[1]), H) * std::pow(std::cos(0.5 * kPi * x[0]), H);
      f[2] = g * std::pow(std::cos(0.5 * kPi * x[1]), H) * std::pow(std::cos(0.5 * kPi * x[0]), H);
      break;
    }
    case 11: {
      const double G = std::fabs(std::sin(0.5 * kPi * t));
      double g = 1.0 + G;
      for (int i = 2; i < n; ++i) g += sqr(x[i] - 0.5 * G * x[0]);
      const double y1 = kPi * G / 6.0 + (kPi / 2.0 - kPi * G / 3.0) * x[0];
      const double y2 = kPi * G / 6.0 + (kPi / 2.0 - kPi * G / 3.0) * x[1];
      f[0] = g * std::sin(y1);
      f[1] = g * std::sin(y2) * std::cos(y1);
      f[2] = g * std::cos(y2) * std::cos(y1);
      break;
    }
    case 12: {
      const double k = 10.0 * std::sin(kPi * t);
      double g = 1.0;
      for (int i = 2; i < n; ++i) g += sqr(x[i] - std::sin(t * x[0]));
      g += std::fabs(std::sin(std::floor(k * (2.0 * x[0] - 1.0)) * kPi / 2.0) *
                     std::sin(std::floor(k * (2.0 * x[1] - 1.0)) * kPi / 2.0));
      f[0] = g * std::cos(0.5 * kPi * x[1]) * std::cos(0.5 * kPi * x[0]);
      f[1] = g * std::sin(0.5 * kPi * x[1]) * std::cos(0.5 * kPi * x[0]);
      f[2] = g * std::sin(0.5 * kPi * x[0]);
      break;
    }
    case 13: {
      const double G = std::sin(0.5 * kPi * t);
      const int P = static_cast<int>(std::floor(6.0 * G));
      double g = 1.0;
      for (int i = 2; i < n; ++i) g += sqr(x[i] - G);
      f[0] = g * sqr(std::cos(0.5 * kPi * x[0]));
      f[1] = g * sqr(std::cos(0.5 * kPi * x[1]));
      f[2] = g * (sqr(std::sin(0.5 * kPi * x[0])) +
                  std::sin(0.5 * kPi * x[0]) * sqr(std::cos(P * kPi * x[0])) +
                  sqr(std::sin(0.5 * kPi * x[1])) +
                  std::sin(0.5 * kPi * x[1]) * sqr(std::cos(P * kPi * x[1])));
      break;
    }
    case 14: {
      const double G = std::sin(0.5 * kPi * t);
      double g = 1.0;
      for (int i = 2; i < n; ++i) g += sqr(x[i] - G);
      const double y = 0.5 + G * (x[0] - 0.5);
      f[0] = g * (1.0 - y + 0.05 * std::sin(6.0 * kPi * y));
      f[1] = g * (1.0 - x[1] + 0.05 * std::sin(6.0 * kPi * x[1])) *
             (y + 0.05 * std::sin(6.0 * kPi * y));
      f[2] = g * (x[1] + 0.05 * std::sin(6.0 * kPi * x[1])) *
             (y + 0.05 * std::sin(6.0 * kPi * y));
      break;
    }
    default:
      throw std::invalid_argument("evaluate: bad instance index");
  }
  return f;
}

Individual evaluate_individual(const DmopInstance& p, DecisionVector x, double t,
                               std::uint64_t* eval_counter) {
  Individual ind;
  ind.f = evaluate(p, x, t);
  ind.x = std::move(x);
  ind.t_eval = t;
  if (eval_counter) ++*eval_counter;
  return ind;
}

Individual random_individual(const DmopInstance& p, double t, RandomSource& rng,
                             std::uint64_t* eval_counter) {
  DecisionVector x(p.n);
  for (int i = 0; i < p.n; ++i) x[i] = rng.uniform(p.bounds.lower[i], p.bounds.upper[i]);
  Individual ind = evaluate_individual(p, std::move(x), t, eval_counter);
  ind.origin = Origin::random;
  return ind;
}

Population random_population(const DmopInstance& p, double t, std::size_t count,
                             RandomSource& rng, std::uint64_t* eval_counter) {
  Population pop;
  pop.capacity = count;
  pop.members.reserve(count);
  for (std::size_t i = 0; i < count; ++i)
    pop.members.push_back(random_individual(p, t, rng, eval_counter));
  return pop;
}

DecisionVector true_pos_point(const DmopInstance& p, double t, double u1, double u2) {
  const int n = p.n;
  DecisionVector x(n, 0.0);
  switch (p.index) {
    case 1: {
      const double G = std::fabs(std::sin(0.5 * kPi * t));
      x[0] = u1;
      for (int i = 1; i < n; ++i) x[i] = G;
      break;
    }
    case 2: {
      const double G = std::fabs(std::sin(0.5 * kPi * t));
      const int r = 1 + static_cast<int>(std::floor((n - 1) * G));
      for (int i = 0; i < n; ++i) x[i] = G;
      x[r - 1] = u1;
      break;
    }
    case 3: {
      const double G = std::sin(0.5 * kPi * t);
      const double H = G + 1.5;
      x[0] = u1;
      for (int i = 1; i < n; ++i) x[i] = G + std::pow(u1, H);
      break;
    }
    case 4: {
      const double a = std::sin(0.5 * kPi * t);
      const double b = 1.0 + std::fabs(std::cos(0.5 * kPi * t));
      const double c = std::max(std::fabs(a), a + b);
      const double hi = std::min(a + b, p.bounds.upper[0]);
      x[0] = a + u1 * (hi - a);
      for (int i = 1; i < n; ++i) x[i] = a * sqr(x[0] / c);
      break;
    }
    case 5:
    case 6: {
      const double G = std::sin(0.5 * kPi * t);
      x[0] = u1;
      for (int i = 1; i < n; ++i) x[i] = G;
      break;
    }
    case 7: {
      x[0] = 1.0 + 3.0 * u1;
      const double a = 5.0 * std::cos(0.5 * kPi * t);
      const double tmp = 1.0 / (1.0 + std::exp(a * (x[0] - 2.5)));
      for (int i = 1; i < n; ++i) x[i] = tmp;
      break;
    }
    case 8: {
      const double G = std::sin(0.5 * kPi * t);
      x[0] = u1;
      const double tmp = G * std::sin(4.0 * kPi * x[0]) / (1.0 + std::fabs(G));
      for (int i = 1; i < n; ++i) x[i] = tmp;
      break;
    }
    case 9: {
      x[0] = u1;
      for (int i = 1; i < n; ++i) x[i] = std::cos(4.0 * t + x[0] + x[i - 1]);
      break;
    }
    case 10: {
      x[0] = u1;
      x[1] = u2;
      const double tmp = std::sin(4.0 * kPi * (x[0] + x[1])) /
                         (1.0 + std::fabs(std::sin(0.5 * kPi * t)));
      for (int i = 2; i < n; ++i) x[i] = tmp;
      break;
    }
    case 11: {
      const double G = std::fabs(std::sin(0.5 * kPi * t));
      x[0] = u1;
      x[1] = u2;
      for (int i = 2; i < n; ++i) x[i] = 0.5 * G * x[0];
      break;
    }
    case 12: {
      x[0] = u1;
      x[1] = u2;
      for (int i = 2; i < n; ++i) x[i] = std::sin(t * x[0]);
      break;
    }
    case 13:
    case 14: {
      const double G = std::sin(0.5 * kPi * t);
      x[0] = u1;
      x[1] = u2;
      for (int i = 2; i < n; ++i) x[i] = G;
      break;
    }
    default:
      throw std::invalid_argument("true_pos_point: bad instance index");
  }
  clamp_in_place(x, p.bounds);
  return x;
}

namespace {

// Keep the non-dominated subset of a bi-objective front sampled in f1 order;
// exact duplicates are dropped. Survivor order follows ascending f1.
std::vector<ObjectiveVector> filter_front_2d(std::vector<ObjectiveVector> pts) {
  std::vector<std::size_t> order(pts.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (pts[a][0] != pts[b][0]) return pts[a][0] < pts[b][0];
    return pts[a][1] < pts[b][1];
  });
  std::vector<ObjectiveVector> out;
  double best_f2 = std::numeric_limits<double>::infinity();
  double last_f1 = std::numeric_limits<double>::quiet_NaN();
  for (std::size_t idx : order) {
    const auto& pt = pts[idx];
    if (pt[0] == last_f1) continue;  // same f1, larger f2 -> dominated or duplicate
    if (pt[1] < best_f2) {
      out.push_back(pt);
      best_f2 = pt[1];
      last_f1 = pt[0];
    }
  }
  return out;
}

}  // namespace

ReferenceFront sample_true_pof(const DmopInstance& p, double t, int count) {
  if (count < 2) throw std::invalid_argument("sample_true_pof: count must be >= 2");
  ReferenceFront front;
  front.t = t;

  if (p.m == 2) {
    // Increase sweep density until the non-dominated survivors can supply
    // `count` points; DF1..DF8 survive in full on the first pass.
    int sweep = count;
    for (int round = 0; round < 8; ++round) {
      std::vector<ObjectiveVector> pts;
      pts.reserve(sweep);
      for (int i = 0; i < sweep; ++i) {
        const double u = static_cast<double>(i) / (sweep - 1);
        pts.push_back(evaluate(p, true_pos_point(p, t, u), t));
      }
      auto nd = filter_front_2d(std::move(pts));
      if (static_cast<int>(nd.size()) >= count) {
        front.points.reserve(count);
        for (int i = 0; i < count; ++i) {
          const std::size_t pick =
              static_cast<std::size_t>(std::llround(static_cast<double>(i) *
                                                    (nd.size() - 1) / (count - 1)));
          front.points.push_back(nd[pick]);
        }
        return front;
      }
      sweep *= 4;
    }
    throw std::runtime_error("sample_true_pof: front too degenerate for " + p.id);
  }

  // m == 3: the position parameters live on the unit square, so sample a grid
  // and keep the non-dominated objective vectors.
  const int side = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(count))));
  std::vector<ObjectiveVector> pts;
  pts.reserve(static_cast<std::size_t>(side) * side);
  for (int i = 0; i < side; ++i) {
    for (int j = 0; j < side; ++j) {
      const double u1 = static_cast<double>(i) / (side - 1);
      const double u2 = static_cast<double>(j) / (side - 1);
      pts.push_back(evaluate(p, true_pos_point(p, t, u1, u2), t));
    }
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const auto keep = pareto_filter_indices(pts);
  front.points.reserve(keep.size());
  for (std::size_t i : keep) front.points.push_back(pts[i]);
  return front;
}

}  // namespace ddmoea
