// Timing comparison of the OpenMP kernels against their serial reference
// implementations, with an equality check on the outputs.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <vector>

#include "ddmoea/ddm.hpp"
#include "ddmoea/metrics.hpp"

using namespace ddmoea;

namespace {

double now_ms() {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

template <class F>
double time_best_of(int reps, F&& fn) {
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    const double t0 = now_ms();
    fn();
    best = std::min(best, now_ms() - t0);
  }
  return best;
}

}  // namespace

int main() {
  RandomSource rng(7);

  // --- IGD: 4000 reference points vs 300 attained points, m=3 ---
  ReferenceFront ref;
  ref.points.resize(4000, ObjectiveVector(3));
  for (auto& p : ref.points)
    for (auto& v : p) v = rng.uniform01();
  std::vector<ObjectiveVector> attained(300, ObjectiveVector(3));
  for (auto& p : attained)
    for (auto& v : p) v = rng.uniform01();

  double igd_par = 0.0, igd_ser = 0.0;
  const double t_igd_par = time_best_of(5, [&] { igd_par = igd(ref, attained); });
  const double t_igd_ser = time_best_of(5, [&] { igd_ser = igd_serial(ref, attained); });

  // --- hypervolume Monte Carlo: 20-point front, 2e6 samples, m=3 ---
  std::vector<ObjectiveVector> front(20, ObjectiveVector(3));
  for (auto& p : front)
    for (auto& v : p) v = rng.uniform01();
  const ObjectiveVector r = {1.2, 1.2, 1.2};
  double mc_par = 0.0, mc_ser = 0.0;
  const double t_mc_par = time_best_of(3, [&] {
    RandomSource local(11);
    mc_par = hv_monte_carlo(front, r, 2'000'000, local);
  });
  const double t_mc_ser = time_best_of(3, [&] {
    RandomSource local(11);
    mc_ser = hv_monte_carlo_serial(front, r, 2'000'000, local);
  });

  // --- diffusion denoising: 64 members, n=10, K=200 ---
  Bounds b;
  b.lower.assign(10, 0.0);
  b.upper.assign(10, 1.0);
  std::vector<DecisionVector> subpop(64, DecisionVector(10));
  for (auto& x : subpop)
    for (auto& v : x) v = rng.uniform01();
  DecisionVector knee(10, 0.5);
  const NoiseSchedule sched = cosine_schedule(200);
  std::vector<DecisionVector> dn_par, dn_ser;
  const double t_dn_par = time_best_of(3, [&] {
    RandomSource local(13);
    dn_par = denoise_population(subpop, knee, 0.2, sched, b, local);
  });
  const double t_dn_ser = time_best_of(3, [&] {
    RandomSource local(13);
    dn_ser = denoise_population_serial(subpop, knee, 0.2, sched, b, local);
  });
  double dn_diff = 0.0;
  for (std::size_t i = 0; i < dn_par.size(); ++i)
    dn_diff = std::max(dn_diff, euclidean(dn_par[i], dn_ser[i]));

  std::printf("kernel                parallel    serial   speedup   max |diff|\n");
  std::printf("igd                  %8.2f ms %8.2f ms  %6.2fx  %.3g\n", t_igd_par, t_igd_ser,
              t_igd_ser / t_igd_par, std::fabs(igd_par - igd_ser));
  std::printf("hv_monte_carlo       %8.2f ms %8.2f ms  %6.2fx  %.3g\n", t_mc_par, t_mc_ser,
              t_mc_ser / t_mc_par, std::fabs(mc_par - mc_ser));
  std::printf("denoise_population   %8.2f ms %8.2f ms  %6.2fx  %.3g\n", t_dn_par, t_dn_ser,
              t_dn_ser / t_dn_par, dn_diff);
  return 0;
}
