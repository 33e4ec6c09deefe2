#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace ddmoea {

using DecisionVector = std::vector<double>;
using ObjectiveVector = std::vector<double>;

struct Bounds {
  std::vector<double> lower;
  std::vector<double> upper;
  std::size_t dim() const { return lower.size(); }
};

// Where an individual came from; lets tests check how init populations are composed.
enum class Origin : std::uint8_t { unknown, random, predicted, carried, offspring };

struct Individual {
  DecisionVector x;
  ObjectiveVector f;
  double t_eval = -1.0;  // discrete time the objectives were evaluated at, -1 = never
  Origin origin = Origin::unknown;
};

struct Population {
  std::vector<Individual> members;
  std::size_t capacity = 0;

  std::size_t size() const { return members.size(); }
  bool empty() const { return members.empty(); }
};

std::uint64_t splitmix64(std::uint64_t x);

// Seeded RNG wrapper. All stochastic code draws through this so runs are
// reproducible; spawn() derives an independent child stream from the original
// seed, which keeps parallel sections deterministic.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  double uniform01() {
    return std::uniform_real_distribution<double>(0.0, 1.0)(engine_);
  }
  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
  }
  double normal() { return std::normal_distribution<double>(0.0, 1.0)(engine_); }
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(engine_);
  }
  std::uint64_t next_u64() { return engine_(); }

  std::uint64_t seed() const { return seed_; }
  RandomSource spawn(std::uint64_t stream) const {
    return RandomSource(splitmix64(seed_ + stream));
  }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

// Pareto dominance for minimization: a <= b in every objective, < in at least one.
bool dominates(const ObjectiveVector& a, const ObjectiveVector& b);

// Indices of mutually non-dominated rows, input order preserved, duplicates kept.
std::vector<std::size_t> pareto_filter_indices(const std::vector<ObjectiveVector>& objs);
Population pareto_filter(const Population& pop);

DecisionVector clamp_to_bounds(const DecisionVector& x, const Bounds& b);
void clamp_in_place(DecisionVector& x, const Bounds& b);

inline double squared_distance(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

inline double euclidean(const std::vector<double>& a, const std::vector<double>& b) {
  return std::sqrt(squared_distance(a, b));
}

inline double norm2(const std::vector<double>& v) {
  double s = 0.0;
  for (double d : v) s += d * d;
  return std::sqrt(s);
}

}  // namespace ddmoea
