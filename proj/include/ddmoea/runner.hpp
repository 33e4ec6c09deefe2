#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ddmoea/core.hpp"
#include "ddmoea/metrics.hpp"
#include "ddmoea/moead.hpp"
#include "ddmoea/problems.hpp"
#include "ddmoea/response.hpp"

namespace ddmoea {

struct ExperimentConfig {
  std::string problem = "DF1";
  int nt = 10;    // change severity n_t
  int taut = 10;  // change frequency tau_t = generations per environment
  int changes = 30;
  int runs = 20;
  StrategyKind strategy = StrategyKind::ddm;
  std::uint64_t seed = 1;
  int jobs = 1;
  int population = 0;  // 0 -> 100 for m=2, 150 for m=3
  int dimension = 10;
  int ref_points = 0;  // 0 -> 1000 for m=2, 1035 for m=3
  MoeadParams moead;
  ResponseConfig response;
  std::string out = "experiment";
};

struct EnvRow {
  int env = 0;  // 1-based environment index
  double t = 0.0;
  double igd = 0.0;
  double hv = 0.0;
  double resp_ms = 0.0;  // wall time of respond(), excludes optimization
  double opt_ms = 0.0;   // wall time of optimize()
  ObjectiveVector ref_point;
};

struct RunRecord {
  int run = 0;  // 1-based
  std::uint64_t seed = 0;
  std::vector<EnvRow> rows;
  double migd = 0.0;
  double mhv = 0.0;
  std::uint64_t evals_respond = 0;
  std::uint64_t evals_optimize = 0;
};

int default_population(const DmopInstance& p);
int default_ref_points(const DmopInstance& p);

// Per-environment reference data shared by all runs of a config.
struct EnvReference {
  ReferenceFront front;
  ObjectiveVector r;  // hypervolume reference point, 1.1 * front nadir
};
std::vector<EnvReference> build_references(const DmopInstance& p, const ExperimentConfig& cfg);

// Execute cfg.runs independent runs (optionally across cfg.jobs threads).
// Results are deterministic for a given config and seed; run r uses the
// splitmix-mixed seed of (cfg.seed + r).
std::vector<RunRecord> run_experiment(const ExperimentConfig& cfg);

// Write <path>.rows.csv (one row per run x environment) and <path>.summary.csv
// (per-run MIGD/MHV plus an aggregate mean+-std row; the config is echoed as
// '#' comment lines).
void emit_csv(const std::vector<RunRecord>& records, const ExperimentConfig& cfg,
              const std::string& path);

struct CompareCell {
  StrategyKind strategy;
  SeriesSummary migd, mhv;
  char migd_mark = ' ';  // reference vs this strategy, '+'/'='/'-'
  char mhv_mark = ' ';
};

struct CompareRow {
  std::string problem;
  int nt = 0, taut = 0;
  std::vector<CompareCell> cells;  // cells[0] is the reference strategy
};

// Run every strategy on the same problem(s) with paired seeds and mark each
// against the first (reference) strategy by rank-sum tests on per-run MIGD and
// MHV. cfg.problem == "all" loops the whole catalog.
std::vector<CompareRow> compare(const std::vector<StrategyKind>& strategies,
                                const ExperimentConfig& cfg);

void emit_compare_csv(const std::vector<CompareRow>& rows, const std::string& path);

}  // namespace ddmoea
