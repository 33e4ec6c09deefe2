#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ddmoea/core.hpp"
#include "ddmoea/ddm.hpp"
#include "ddmoea/problems.hpp"

namespace ddmoea {

// Dynamic-response strategies: the full diffusion pipeline, three ablations,
// and a random restart baseline.
//   ddm            denoised predictions + previous POS + random immigrants
//   v1             as ddm but knees predicted by linear extrapolation
//   v2             previous POS reused, padded with random individuals
//   v3             prediction slots filled with random individuals
//   random_restart every member random
enum class StrategyKind { ddm, v1, v2, v3, random_restart };

StrategyKind parse_strategy(const std::string& name);
std::string to_string(StrategyKind kind);

struct KneeRecord {
  DecisionVector x;
  ObjectiveVector f;
  bool valid = false;
};

struct ResponseConfig {
  double frac_pred = 0.4;  // share of the init population from denoised predictions
  double frac_last = 0.4;  // share carried over from the previous POS
  int subspaces = 5;
  int diffusion_steps = 100;
  ScheduleKind schedule = ScheduleKind::cosine;
  PriorKind prior = PriorKind::knee;
  GuidanceConfig guidance;
  bool deterministic_theta = false;
};

// Rolling two-environment memory plus per-subspace knee prediction state.
struct History {
  Population pos_prev, pos_prev2;
  std::vector<KneeRecord> knee_prev, knee_prev2;  // extracted true knees
  std::vector<KneeRecord> predicted;              // predictions made by the last respond()
  std::vector<double> psi;                        // guidance width for the next response
  int environments = 0;                           // completed environments
};

// Build the initial population for the environment at time t. The first two
// environments (no usable history) always come out fully random; afterwards the
// composition follows the strategy. Every member is evaluated at t.
Population respond(StrategyKind kind, History& hist, const DmopInstance& p, double t, int N,
                   const ResponseConfig& cfg, RandomSource& rng,
                   std::uint64_t* eval_counter = nullptr);

// After optimization of an environment: extract per-subspace knees from the
// attained POS, score the previous predictions into per-subspace psi, and roll
// the t-1/t-2 history.
void record_truth(History& hist, const Population& pos_t, const ResponseConfig& cfg);

// Greedy max-min (farthest point) subset of k indices in objective space,
// seeded at the lowest-f1 point. Deterministic; ties break to the lowest index.
std::vector<std::size_t> farthest_point_subset(const std::vector<ObjectiveVector>& objs,
                                               std::size_t k);

}  // namespace ddmoea
