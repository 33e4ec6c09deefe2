#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ddmoea/core.hpp"

namespace ddmoea {

// Discrete-time dynamics: t = floor(tau / tau_t) / n_t, so the landscape is a
// step function of the generation counter tau.
struct TimeContext {
  int severity = 10;    // n_t
  int frequency = 10;   // tau_t, generations per environment
  long generation = 0;  // tau
};

double time_of(const TimeContext& ctx);

struct DmopInstance {
  std::string id;  // "DF1".."DF14"
  int index = 0;   // 1..14
  int m = 2;       // objectives
  int n = 10;      // decision variables
  Bounds bounds;
};

// The 14 DF instances with default dimension n=10 (DF1..DF9 bi-objective,
// DF10..DF14 tri-objective).
const std::vector<DmopInstance>& catalog();
DmopInstance make_instance(const std::string& id, int n = 10);

ObjectiveVector evaluate(const DmopInstance& p, const DecisionVector& x, double t);

Individual evaluate_individual(const DmopInstance& p, DecisionVector x, double t,
                               std::uint64_t* eval_counter = nullptr);
Individual random_individual(const DmopInstance& p, double t, RandomSource& rng,
                             std::uint64_t* eval_counter = nullptr);
Population random_population(const DmopInstance& p, double t, std::size_t count,
                             RandomSource& rng, std::uint64_t* eval_counter = nullptr);

// Analytic point on the true Pareto set at time t. u1 (and u2 for m=3) are
// position parameters in [0,1].
DecisionVector true_pos_point(const DmopInstance& p, double t, double u1, double u2 = 0.0);

struct ReferenceFront {
  std::vector<ObjectiveVector> points;
  double t = 0.0;
};

// Densely sampled true Pareto front, used as the IGD reference set. For m=2 the
// result has exactly `count` points taken from a uniform parameter sweep; for
// m=3 a grid over the two position parameters is evaluated and non-dominance
// filtered, giving at least `count` points.
ReferenceFront sample_true_pof(const DmopInstance& p, double t, int count);

}  // namespace ddmoea
