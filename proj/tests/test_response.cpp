#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstddef>
#include <vector>

#include "ddmoea/knee.hpp"
#include "ddmoea/response.hpp"

using namespace ddmoea;

namespace {

// A spread population sitting on the true optimal set at time t. The second
// position coordinate (three-objective problems) follows a low-discrepancy
// sweep so the points do not collapse onto a curve.
Population front_population(const DmopInstance& p, double t, int count) {
  Population pop;
  for (int i = 0; i < count; ++i) {
    const double u1 = count > 1 ? static_cast<double>(i) / (count - 1) : 0.5;
    const double u2 = std::fmod(i * 0.6180339887498949, 1.0);
    pop.members.push_back(evaluate_individual(p, true_pos_point(p, t, u1, u2), t));
  }
  return pop;
}

// History after two completed environments, ready for strategy responses.
History seeded_history(const DmopInstance& p, const ResponseConfig& cfg) {
  History hist;
  record_truth(hist, front_population(p, 0.0, 60), cfg);
  record_truth(hist, front_population(p, 0.1, 60), cfg);
  return hist;
}

struct OriginCounts {
  int predicted = 0, carried = 0, random = 0, other = 0;
};

OriginCounts count_origins(const Population& pop) {
  OriginCounts c;
  for (const auto& ind : pop.members) {
    switch (ind.origin) {
      case Origin::predicted: ++c.predicted; break;
      case Origin::carried: ++c.carried; break;
      case Origin::random: ++c.random; break;
      default: ++c.other; break;
    }
  }
  return c;
}

}  // namespace

TEST_CASE("strategy names round-trip and unknown names throw") {
  for (StrategyKind k : {StrategyKind::ddm, StrategyKind::v1, StrategyKind::v2, StrategyKind::v3,
                         StrategyKind::random_restart})
    CHECK(parse_strategy(to_string(k)) == k);
  CHECK(parse_strategy("random") == StrategyKind::random_restart);
  CHECK_THROWS_AS(parse_strategy("v4"), std::invalid_argument);
  CHECK_THROWS_AS(parse_strategy(""), std::invalid_argument);
}

TEST_CASE("farthest point subset: edges, extremes, determinism") {
  const std::vector<ObjectiveVector> objs{{0.0, 4.0}, {1.0, 3.0}, {2.0, 2.0}, {3.0, 1.0},
                                          {4.0, 0.0}};
  CHECK(farthest_point_subset(objs, 0).empty());
  CHECK(farthest_point_subset(objs, 5) == std::vector<std::size_t>{0, 1, 2, 3, 4});
  CHECK(farthest_point_subset(objs, 9) == std::vector<std::size_t>{0, 1, 2, 3, 4});

  // seeded at the lowest f1, then the farthest point = other extreme
  const auto two = farthest_point_subset(objs, 2);
  CHECK(two == std::vector<std::size_t>{0, 4});
  const auto three = farthest_point_subset(objs, 3);
  CHECK(three == std::vector<std::size_t>{0, 4, 2});  // midpoint maximizes min distance
  CHECK(farthest_point_subset(objs, 3) == three);

  // coincident points: fill in index order once spread is exhausted
  const std::vector<ObjectiveVector> dup{{1.0, 1.0}, {1.0, 1.0}, {1.0, 1.0}};
  CHECK(farthest_point_subset(dup, 2) == std::vector<std::size_t>{0, 1});
}

TEST_CASE("first two environments always restart at random") {
  const DmopInstance p = make_instance("DF1", 5);
  const ResponseConfig cfg;
  RandomSource rng(11);
  for (StrategyKind kind : {StrategyKind::ddm, StrategyKind::v2, StrategyKind::random_restart}) {
    History hist;  // zero completed environments
    std::uint64_t evals = 0;
    const Population pop = respond(kind, hist, p, 0.0, 24, cfg, rng, &evals);
    REQUIRE(pop.size() == 24);
    CHECK(evals == 24);
    for (const auto& ind : pop.members) {
      CHECK(ind.origin == Origin::random);
      CHECK(ind.t_eval == 0.0);
      for (int i = 0; i < p.n; ++i) {
        CHECK(ind.x[i] >= p.bounds.lower[i]);
        CHECK(ind.x[i] <= p.bounds.upper[i]);
      }
    }
  }

  // one completed environment is still not enough history
  History hist;
  record_truth(hist, front_population(p, 0.0, 30), cfg);
  const Population pop = respond(StrategyKind::ddm, hist, p, 0.1, 16, cfg, rng);
  CHECK(count_origins(pop).random == 16);

  RandomSource r2(1);
  History h2;
  CHECK_THROWS_AS(respond(StrategyKind::ddm, h2, p, 0.0, 0, cfg, r2), std::invalid_argument);
}

TEST_CASE("slot composition after two environments") {
  const DmopInstance p = make_instance("DF1", 5);
  ResponseConfig cfg;
  cfg.diffusion_steps = 20;  // keep the test quick
  History hist = seeded_history(p, cfg);
  RandomSource rng(21);
  std::uint64_t evals = 0;
  const Population pop = respond(StrategyKind::ddm, hist, p, 0.2, 50, cfg, rng, &evals);
  REQUIRE(pop.size() == 50);
  const OriginCounts c = count_origins(pop);
  CHECK(c.predicted == 20);  // floor(0.4 * 50)
  CHECK(c.carried == 20);
  CHECK(c.random == 10);
  CHECK(c.other == 0);
  CHECK(evals >= 50);  // every member evaluated; denoised candidates may exceed the slot
  for (const auto& ind : pop.members) {
    CHECK(ind.t_eval == 0.2);
    for (int i = 0; i < p.n; ++i) {
      CHECK(ind.x[i] >= p.bounds.lower[i]);
      CHECK(ind.x[i] <= p.bounds.upper[i]);
    }
  }
  // predictions were published for scoring
  int valid = 0;
  for (const auto& k : hist.predicted) valid += k.valid ? 1 : 0;
  CHECK(valid == cfg.subspaces);
}

TEST_CASE("carry-over strategy reuses the previous optimal set") {
  const DmopInstance p = make_instance("DF1", 5);
  const ResponseConfig cfg;
  History hist = seeded_history(p, cfg);

  SUBCASE("previous POS fits: all members carried, rest random") {
    RandomSource rng(31);
    const Population pop = respond(StrategyKind::v2, hist, p, 0.2, 80, cfg, rng);
    REQUIRE(pop.size() == 80);
    const OriginCounts c = count_origins(pop);
    CHECK(c.carried == 60);
    CHECK(c.random == 20);
    // carried members preserve the previous decision vectors, re-evaluated
    for (std::size_t i = 0; i < 60; ++i) {
      CHECK(pop.members[i].x == hist.pos_prev.members[i].x);
      CHECK(pop.members[i].t_eval == 0.2);
    }
  }

  SUBCASE("previous POS over-full: truncated to N carried members") {
    RandomSource rng(32);
    const Population pop = respond(StrategyKind::v2, hist, p, 0.2, 20, cfg, rng);
    REQUIRE(pop.size() == 20);
    CHECK(count_origins(pop).carried == 20);
    for (const auto& ind : pop.members) {
      bool found = false;
      for (const auto& prev : hist.pos_prev.members)
        if (prev.x == ind.x) found = true;
      CHECK(found);
    }
  }
}

TEST_CASE("prediction-slot ablation differs only in the prediction slot") {
  const DmopInstance p = make_instance("DF1", 5);
  ResponseConfig cfg;
  cfg.diffusion_steps = 20;
  History h_ddm = seeded_history(p, cfg);
  History h_v3 = seeded_history(p, cfg);
  RandomSource r_ddm(77), r_v3(77);
  const Population a = respond(StrategyKind::ddm, h_ddm, p, 0.2, 50, cfg, r_ddm);
  const Population b = respond(StrategyKind::v3, h_v3, p, 0.2, 50, cfg, r_v3);
  REQUIRE(a.size() == 50);
  REQUIRE(b.size() == 50);

  // same layout: 20 predicted, 20 carried, 10 random
  for (int i = 0; i < 50; ++i) CHECK(a.members[i].origin == b.members[i].origin);
  // carried and random blocks are identical member-for-member
  bool pred_identical = true;
  for (int i = 0; i < 50; ++i) {
    if (a.members[i].origin == Origin::predicted) {
      if (a.members[i].x != b.members[i].x) pred_identical = false;
    } else {
      CHECK(a.members[i].x == b.members[i].x);
    }
  }
  CHECK_FALSE(pred_identical);
}

TEST_CASE("linear-knee ablation equals the full pipeline with deflection disabled") {
  const DmopInstance p = make_instance("DF1", 5);
  ResponseConfig cfg;
  cfg.diffusion_steps = 20;
  ResponseConfig cfg_det = cfg;
  cfg_det.deterministic_theta = true;

  History h_v1 = seeded_history(p, cfg);
  History h_ddm = seeded_history(p, cfg_det);
  RandomSource r1(5), r2(5);
  const Population a = respond(StrategyKind::v1, h_v1, p, 0.2, 40, cfg, r1);
  const Population b = respond(StrategyKind::ddm, h_ddm, p, 0.2, 40, cfg_det, r2);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.members[i].origin == Origin::predicted) {
      // the zero-deflection polar round-trip reproduces linear extrapolation
      // to rounding error, which the denoising pass carries along
      REQUIRE(a.members[i].x.size() == b.members[i].x.size());
      for (std::size_t j = 0; j < a.members[i].x.size(); ++j)
        CHECK(a.members[i].x[j] == doctest::Approx(b.members[i].x[j]).epsilon(1e-6));
    } else {
      CHECK(a.members[i].x == b.members[i].x);  // shared streams: bitwise equal
    }
  }
}

TEST_CASE("same seed reproduces the response bitwise") {
  const DmopInstance p = make_instance("DF2", 5);
  ResponseConfig cfg;
  cfg.diffusion_steps = 20;
  History h1 = seeded_history(p, cfg);
  History h2 = seeded_history(p, cfg);
  RandomSource r1(123), r2(123);
  const Population a = respond(StrategyKind::ddm, h1, p, 0.2, 30, cfg, r1);
  const Population b = respond(StrategyKind::ddm, h2, p, 0.2, 30, cfg, r2);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a.members[i].x == b.members[i].x);
    CHECK(a.members[i].f == b.members[i].f);
  }
}

TEST_CASE("recording truth rolls the two-environment memory") {
  const DmopInstance p = make_instance("DF1", 5);
  const ResponseConfig cfg;
  History hist;
  const Population env0 = front_population(p, 0.0, 40);
  const Population env1 = front_population(p, 0.1, 40);

  record_truth(hist, env0, cfg);
  CHECK(hist.environments == 1);
  CHECK(hist.pos_prev.size() == 40);
  CHECK(hist.pos_prev2.empty());
  REQUIRE(hist.psi.size() == static_cast<std::size_t>(cfg.subspaces));
  for (double v : hist.psi) CHECK(v == cfg.guidance.psi_min);  // nothing to score yet
  for (const auto& k : hist.knee_prev) CHECK(k.valid);

  record_truth(hist, env1, cfg);
  CHECK(hist.environments == 2);
  REQUIRE(hist.pos_prev2.size() == 40);
  for (std::size_t i = 0; i < 40; ++i) CHECK(hist.pos_prev2.members[i].x == env0.members[i].x);
  for (std::size_t i = 0; i < 40; ++i) CHECK(hist.pos_prev.members[i].x == env1.members[i].x);

  CHECK_THROWS_AS(record_truth(hist, Population{}, cfg), std::invalid_argument);
}

TEST_CASE("guidance widths score the previous predictions") {
  const DmopInstance p = make_instance("DF1", 5);
  ResponseConfig cfg;
  cfg.diffusion_steps = 20;
  History hist = seeded_history(p, cfg);
  RandomSource rng(9);
  respond(StrategyKind::ddm, hist, p, 0.2, 40, cfg, rng);
  const std::vector<KneeRecord> published = hist.predicted;

  const Population env2 = front_population(p, 0.2, 40);
  record_truth(hist, env2, cfg);

  // recompute the expected knee of each subspace and the psi formula
  const SubspacePartition part = partition(env2, cfg.subspaces);
  for (int i = 0; i < cfg.subspaces; ++i) {
    if (part.members[i].empty() || !published[i].valid) {
      CHECK(hist.psi[i] == cfg.guidance.psi_min);
      continue;
    }
    const std::size_t idx = extract_knee(env2, part.members[i]);
    const double expect = adaptive_psi(published[i].x, env2.members[idx].x, cfg.guidance);
    CHECK(hist.psi[i] == doctest::Approx(expect));
    CHECK(hist.psi[i] >= cfg.guidance.psi_min);
    CHECK(hist.psi[i] <= cfg.guidance.psi_max);
  }

  // knees recorded this round become the t-1 history
  for (int i = 0; i < cfg.subspaces; ++i)
    if (!part.members[i].empty()) CHECK(hist.knee_prev[i].valid);
}

TEST_CASE("three-objective problems flow through the response path") {
  const DmopInstance p = make_instance("DF10", 5);
  ResponseConfig cfg;
  cfg.diffusion_steps = 10;
  History hist;
  record_truth(hist, front_population(p, 0.0, 50), cfg);
  record_truth(hist, front_population(p, 0.1, 50), cfg);
  RandomSource rng(2);
  const Population pop = respond(StrategyKind::ddm, hist, p, 0.2, 40, cfg, rng);
  REQUIRE(pop.size() == 40);
  for (const auto& ind : pop.members) {
    REQUIRE(ind.f.size() == 3);
    for (double v : ind.f) CHECK(std::isfinite(v));
  }
}
