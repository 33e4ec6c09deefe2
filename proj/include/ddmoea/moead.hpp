#pragma once

#include <cstdint>
#include <vector>

#include "ddmoea/core.hpp"
#include "ddmoea/problems.hpp"

namespace ddmoea {

struct MoeadParams {
  int T = 20;                   // neighborhood size
  int nr = 2;                   // max replacements per child
  double neighbor_prob = 0.9;   // probability of mating/replacing within the neighborhood
  double eta_c = 20.0;          // SBX distribution index
  double eta_m = 20.0;          // polynomial mutation distribution index
  double pc = 1.0;              // crossover probability
  double pm = -1.0;             // mutation rate per variable; negative -> 1/n
};

struct WeightSet {
  std::vector<std::vector<double>> weights;     // N rows, each of length m, summing to 1
  std::vector<std::vector<int>> neighbors;      // per row: T nearest weight indices
};

// Simplex-lattice weight vectors. If the largest lattice with at most N points
// does not fill N, the set is padded with deterministic random simplex samples.
WeightSet weight_vectors(int N, int m, int T = 20);

// Tchebycheff aggregation max_j w_j * |f_j - z_j|; zero weights are lifted to
// 1e-6 so every objective keeps influence.
double tchebycheff(const ObjectiveVector& f, const std::vector<double>& w,
                   const ObjectiveVector& z);

DecisionVector sbx_crossover(const DecisionVector& a, const DecisionVector& b,
                             const Bounds& bounds, RandomSource& rng, double eta_c = 20.0,
                             double pc = 1.0);

DecisionVector poly_mutation(const DecisionVector& x, const Bounds& bounds, RandomSource& rng,
                             double eta_m = 20.0, double pm = -1.0);

// Optional per-generation trace used by tests to observe the ideal point.
struct MoeadTrace {
  std::vector<ObjectiveVector> ideal_per_generation;
};

// Static MOEA/D solve of problem p frozen at time t. The initial pool is
// reduced (or expanded by best-per-subproblem assignment, with replacement) to
// one individual per weight vector; returns the non-dominated archive of the
// final population. Population size is init.capacity when set, else init.size().
Population optimize(const Population& init, const DmopInstance& p, double t, int generations,
                    const MoeadParams& params, RandomSource& rng,
                    std::uint64_t* eval_counter = nullptr, MoeadTrace* trace = nullptr);

}  // namespace ddmoea
