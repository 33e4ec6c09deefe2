#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "ddmoea/core.hpp"

using namespace ddmoea;

namespace {

// independent O(n^2) oracle for the non-dominated filter
std::vector<std::size_t> brute_force_nondominated(const std::vector<ObjectiveVector>& objs) {
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < objs.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < objs.size() && !dominated; ++j) {
      if (i == j) continue;
      bool all_le = true, any_lt = false;
      for (std::size_t k = 0; k < objs[i].size(); ++k) {
        if (objs[j][k] > objs[i][k]) all_le = false;
        if (objs[j][k] < objs[i][k]) any_lt = true;
      }
      dominated = all_le && any_lt;
    }
    if (!dominated) keep.push_back(i);
  }
  return keep;
}

Population make_pop(const std::vector<ObjectiveVector>& objs) {
  Population p;
  for (const auto& f : objs) {
    Individual ind;
    ind.f = f;
    p.members.push_back(ind);
  }
  return p;
}

}  // namespace

TEST_CASE("dominance basics") {
  CHECK(dominates({1.0, 2.0}, {2.0, 3.0}));
  CHECK(dominates({1.0, 2.0}, {1.0, 3.0}));
  CHECK_FALSE(dominates({1.0, 2.0}, {1.0, 2.0}));  // irreflexive on equals
  CHECK_FALSE(dominates({1.0, 3.0}, {2.0, 2.0}));
  CHECK_FALSE(dominates({2.0, 3.0}, {1.0, 2.0}));
  CHECK_THROWS_AS(dominates({1.0}, {1.0, 2.0}), std::invalid_argument);
}

TEST_CASE("dominance is irreflexive and antisymmetric on random vectors") {
  RandomSource rng(42);
  for (int trial = 0; trial < 500; ++trial) {
    ObjectiveVector a(3), b(3);
    for (int i = 0; i < 3; ++i) {
      a[i] = rng.uniform(-2.0, 2.0);
      b[i] = rng.uniform(-2.0, 2.0);
    }
    CHECK_FALSE(dominates(a, a));
    if (dominates(a, b)) CHECK_FALSE(dominates(b, a));
  }
}

TEST_CASE("pareto filter on empty population") {
  Population empty;
  CHECK(pareto_filter(empty).empty());
}

TEST_CASE("pareto filter keeps duplicates and preserves order") {
  Population p = make_pop({{1.0, 2.0}, {2.0, 1.0}, {1.0, 2.0}, {3.0, 3.0}});
  Population out = pareto_filter(p);
  REQUIRE(out.size() == 3);
  CHECK(out.members[0].f == ObjectiveVector{1.0, 2.0});
  CHECK(out.members[1].f == ObjectiveVector{2.0, 1.0});
  CHECK(out.members[2].f == ObjectiveVector{1.0, 2.0});
}

TEST_CASE("pareto filter is idempotent") {
  RandomSource rng(9);
  std::vector<ObjectiveVector> objs(60, ObjectiveVector(2));
  for (auto& f : objs)
    for (auto& v : f) v = rng.uniform01();
  Population once = pareto_filter(make_pop(objs));
  Population twice = pareto_filter(once);
  REQUIRE(once.size() == twice.size());
  for (std::size_t i = 0; i < once.size(); ++i) CHECK(once.members[i].f == twice.members[i].f);
}

TEST_CASE("pareto filter matches brute force up to 100 members") {
  RandomSource rng(123);
  for (int m : {2, 3}) {
    for (int trial = 0; trial < 20; ++trial) {
      const int count = 1 + static_cast<int>(rng.uniform_int(0, 99));
      std::vector<ObjectiveVector> objs(count, ObjectiveVector(m));
      for (auto& f : objs)
        for (auto& v : f) v = rng.uniform_int(0, 6);  // ints force ties/duplicates
      CHECK(pareto_filter_indices(objs) == brute_force_nondominated(objs));
    }
  }
}

TEST_CASE("clamp examples and idempotence") {
  Bounds b{{0.0, -1.0}, {1.0, 1.0}};
  CHECK(clamp_to_bounds({2.0, -3.0}, b) == DecisionVector{1.0, -1.0});
  CHECK(clamp_to_bounds({0.5, 0.5}, b) == DecisionVector{0.5, 0.5});
  RandomSource rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    DecisionVector x = {rng.uniform(-5.0, 5.0), rng.uniform(-5.0, 5.0)};
    DecisionVector once = clamp_to_bounds(x, b);
    CHECK(clamp_to_bounds(once, b) == once);
    for (std::size_t i = 0; i < once.size(); ++i) {
      CHECK(once[i] >= b.lower[i]);
      CHECK(once[i] <= b.upper[i]);
    }
  }
  CHECK_THROWS_AS(clamp_to_bounds({1.0}, b), std::invalid_argument);
}

TEST_CASE("equal seeds give bitwise-equal draw sequences") {
  RandomSource a(777), b(777);
  for (int i = 0; i < 10000; ++i) {
    CHECK(a.uniform01() == b.uniform01());
  }
  RandomSource c(777), d(778);
  int differing = 0;
  for (int i = 0; i < 100; ++i)
    if (c.uniform01() != d.uniform01()) ++differing;
  CHECK(differing > 90);  // different seeds actually diverge
}

TEST_CASE("spawned streams are deterministic and independent of parent draws") {
  RandomSource a(31);
  (void)a.uniform01();
  (void)a.normal();
  RandomSource b(31);
  RandomSource child_a = a.spawn(4);
  RandomSource child_b = b.spawn(4);
  for (int i = 0; i < 100; ++i) CHECK(child_a.uniform01() == child_b.uniform01());
}

TEST_CASE("uniform_int covers inclusive range") {
  RandomSource rng(2);
  bool lo_seen = false, hi_seen = false;
  for (int i = 0; i < 1000; ++i) {
    const auto v = rng.uniform_int(3, 5);
    CHECK(v >= 3);
    CHECK(v <= 5);
    lo_seen |= v == 3;
    hi_seen |= v == 5;
  }
  CHECK(lo_seen);
  CHECK(hi_seen);
}
