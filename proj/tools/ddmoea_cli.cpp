// Command-line front end: run experiments, compare strategies, dump true
// fronts and knee trajectories.

#include <cstdio>
#include <exception>
#include <fstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ddmoea/knee.hpp"
#include "ddmoea/runner.hpp"

using namespace ddmoea;

namespace {

struct CliOptions {
  ExperimentConfig cfg;
  std::string strategy = "ddm";
  std::string schedule = "cosine";
  std::string prior = "knee";
};

void add_common_options(CLI::App* cmd, CliOptions& o) {
  cmd->add_option("--problem", o.cfg.problem, "problem id (DF1..DF14) or 'all'");
  cmd->add_option("--nt", o.cfg.nt, "change severity n_t");
  cmd->add_option("--taut", o.cfg.taut, "generations per environment tau_t");
  cmd->add_option("--changes", o.cfg.changes, "number of environment changes");
  cmd->add_option("--runs", o.cfg.runs, "independent runs");
  cmd->add_option("--strategy", o.strategy, "ddm|v1|v2|v3|random");
  cmd->add_option("--seed", o.cfg.seed, "base seed");
  cmd->add_option("--jobs", o.cfg.jobs, "worker threads across runs");
  cmd->add_option("--population", o.cfg.population, "population size (0 = default by m)");
  cmd->add_option("--dimension", o.cfg.dimension, "decision variables");
  cmd->add_option("--ref-points", o.cfg.ref_points, "reference front density (0 = default)");
  cmd->add_option("--out", o.cfg.out, "output path prefix");
  cmd->add_option("--moead.T", o.cfg.moead.T, "neighborhood size");
  cmd->add_option("--moead.nr", o.cfg.moead.nr, "max replacements per child");
  cmd->add_option("--moead.eta_c", o.cfg.moead.eta_c, "SBX distribution index");
  cmd->add_option("--moead.eta_m", o.cfg.moead.eta_m, "mutation distribution index");
  cmd->add_option("--moead.pc", o.cfg.moead.pc, "crossover probability");
  cmd->add_option("--moead.pm", o.cfg.moead.pm, "mutation rate (negative = 1/n)");
  cmd->add_option("--response.frac_pred", o.cfg.response.frac_pred,
                  "init share from predictions");
  cmd->add_option("--response.frac_last", o.cfg.response.frac_last,
                  "init share carried from previous POS");
  cmd->add_option("--knee.subspaces", o.cfg.response.subspaces, "objective-space subspaces");
  cmd->add_flag("--deterministic-theta", o.cfg.response.deterministic_theta,
                "force zero angular deflection in knee prediction");
  cmd->add_option("--ddm.K", o.cfg.response.diffusion_steps, "diffusion steps");
  cmd->add_option("--ddm.schedule", o.schedule, "cosine|linear");
  cmd->add_option("--ddm.prior", o.prior, "knee|kde");
  cmd->add_option("--ddm.psi_min", o.cfg.response.guidance.psi_min, "guidance width floor");
  cmd->add_option("--ddm.psi_max", o.cfg.response.guidance.psi_max, "guidance width cap");
  cmd->add_option("--ddm.lambda", o.cfg.response.guidance.lambda, "guidance width slope");
  cmd->set_config("--config", "", "INI config file ([section] key=value)");
}

void finalize(CliOptions& o) {
  o.cfg.strategy = parse_strategy(o.strategy);
  if (o.schedule == "cosine")
    o.cfg.response.schedule = ScheduleKind::cosine;
  else if (o.schedule == "linear")
    o.cfg.response.schedule = ScheduleKind::linear;
  else
    throw std::invalid_argument("--ddm.schedule must be cosine or linear");
  if (o.prior == "knee")
    o.cfg.response.prior = PriorKind::knee;
  else if (o.prior == "kde")
    o.cfg.response.prior = PriorKind::kde;
  else
    throw std::invalid_argument("--ddm.prior must be knee or kde");
  if (o.cfg.problem != "all") make_instance(o.cfg.problem, o.cfg.dimension);  // validate
}

int do_run(CliOptions& o) {
  finalize(o);
  std::vector<std::string> problems;
  if (o.cfg.problem == "all") {
    for (const auto& p : catalog()) problems.push_back(p.id);
  } else {
    problems.push_back(o.cfg.problem);
  }
  for (const auto& prob : problems) {
    ExperimentConfig cfg = o.cfg;
    cfg.problem = prob;
    const std::string path =
        problems.size() > 1 ? o.cfg.out + "_" + prob : o.cfg.out;
    const auto records = run_experiment(cfg);
    emit_csv(records, cfg, path);
    std::vector<double> migd, mhv;
    for (const auto& r : records) {
      migd.push_back(r.migd);
      mhv.push_back(r.mhv);
    }
    const auto si = summarize(migd), sh = summarize(mhv);
    std::printf("%s %s nt=%d taut=%d runs=%d  MIGD %.6g +- %.2g  MHV %.6g +- %.2g\n",
                prob.c_str(), to_string(cfg.strategy).c_str(), cfg.nt, cfg.taut, cfg.runs,
                si.mean, si.stddev, sh.mean, sh.stddev);
  }
  return 0;
}

int do_compare(CliOptions& o, const std::string& strategy_list) {
  finalize(o);
  std::vector<StrategyKind> strategies;
  std::string token;
  for (char c : strategy_list + ",") {
    if (c == ',') {
      if (!token.empty()) strategies.push_back(parse_strategy(token));
      token.clear();
    } else {
      token += c;
    }
  }
  const auto rows = compare(strategies, o.cfg);
  emit_compare_csv(rows, o.cfg.out + ".compare.csv");
  for (const auto& row : rows) {
    std::printf("%s nt=%d taut=%d:", row.problem.c_str(), row.nt, row.taut);
    for (const auto& cell : row.cells)
      std::printf("  %s migd=%.6g(%c) mhv=%.6g(%c)", to_string(cell.strategy).c_str(),
                  cell.migd.mean, cell.migd_mark, cell.mhv.mean, cell.mhv_mark);
    std::printf("\n");
  }
  return 0;
}

int do_pof(const std::string& problem, double t, int count, int dimension,
           const std::string& out) {
  const DmopInstance p = make_instance(problem, dimension);
  const ReferenceFront front = sample_true_pof(p, t, count);
  std::ofstream os(out);
  if (!os) throw std::runtime_error("cannot write " + out);
  for (int j = 1; j <= p.m; ++j) os << (j > 1 ? "," : "") << 'f' << j;
  os << "\n";
  char buf[40];
  for (const auto& pt : front.points) {
    for (int j = 0; j < p.m; ++j) {
      std::snprintf(buf, sizeof(buf), "%.17g", pt[j]);
      os << (j > 0 ? "," : "") << buf;
    }
    os << "\n";
  }
  std::printf("%s t=%g: %zu front points -> %s\n", problem.c_str(), t, front.points.size(),
              out.c_str());
  return 0;
}

// Single instrumented run dumping predicted vs. extracted knees per subspace.
int do_knees(CliOptions& o) {
  finalize(o);
  const DmopInstance p = make_instance(o.cfg.problem, o.cfg.dimension);
  const int N = o.cfg.population > 0 ? o.cfg.population : default_population(p);
  RandomSource rng(splitmix64(o.cfg.seed));
  History hist;
  std::ofstream os(o.cfg.out);
  if (!os) throw std::runtime_error("cannot write " + o.cfg.out);
  os << "env,t,subspace,psi,pred_valid,true_valid,err";
  for (int i = 1; i <= p.n; ++i) os << ",pred_x" << i;
  for (int i = 1; i <= p.n; ++i) os << ",true_x" << i;
  os << "\n";
  char buf[40];
  auto put = [&](double v) {
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    os << ',' << buf;
  };
  for (int e = 0; e < o.cfg.changes; ++e) {
    const double t = static_cast<double>(e) / o.cfg.nt;
    Population init = respond(o.cfg.strategy, hist, p, t, N, o.cfg.response, rng);
    const std::vector<KneeRecord> predicted = hist.predicted;
    const std::vector<double> psi = hist.psi;
    Population pos = optimize(init, p, t, o.cfg.taut, o.cfg.moead, rng);
    record_truth(hist, pos, o.cfg.response);
    for (int i = 0; i < o.cfg.response.subspaces; ++i) {
      const bool pv = i < static_cast<int>(predicted.size()) && predicted[i].valid;
      const bool tv = hist.knee_prev[i].valid;
      os << e + 1;
      put(t);
      os << ',' << i + 1;
      put(i < static_cast<int>(psi.size()) ? psi[i] : o.cfg.response.guidance.psi_min);
      os << ',' << (pv ? 1 : 0) << ',' << (tv ? 1 : 0);
      put(pv && tv ? euclidean(predicted[i].x, hist.knee_prev[i].x) : -1.0);
      for (int d = 0; d < p.n; ++d) put(pv ? predicted[i].x[d] : 0.0);
      for (int d = 0; d < p.n; ++d) put(tv ? hist.knee_prev[i].x[d] : 0.0);
      os << "\n";
    }
  }
  std::printf("knee trajectories -> %s\n", o.cfg.out.c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"diffusion-driven dynamic multiobjective optimization"};
  app.require_subcommand(1);

  CliOptions run_opts;
  CLI::App* run_cmd = app.add_subcommand("run", "run an experiment and emit CSV results");
  add_common_options(run_cmd, run_opts);

  CliOptions cmp_opts;
  std::string strategy_list = "ddm,v2,v3";
  CLI::App* cmp_cmd =
      app.add_subcommand("compare", "run several strategies with paired seeds");
  add_common_options(cmp_cmd, cmp_opts);
  cmp_cmd->add_option("--strategies", strategy_list, "comma-separated strategy list");

  std::string pof_problem = "DF1", pof_out = "pof.csv";
  double pof_t = 0.0;
  int pof_count = 1000, pof_dim = 10;
  CLI::App* pof_cmd = app.add_subcommand("pof", "dump the true Pareto front at time t");
  pof_cmd->add_option("--problem", pof_problem, "problem id");
  pof_cmd->add_option("--t", pof_t, "time value");
  pof_cmd->add_option("--count", pof_count, "number of points");
  pof_cmd->add_option("--dimension", pof_dim, "decision variables");
  pof_cmd->add_option("--out", pof_out, "output CSV path");

  CliOptions knee_opts;
  knee_opts.cfg.out = "knees.csv";
  CLI::App* knee_cmd =
      app.add_subcommand("knees", "dump predicted vs extracted knee trajectories");
  add_common_options(knee_cmd, knee_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (run_cmd->parsed()) return do_run(run_opts);
    if (cmp_cmd->parsed()) return do_compare(cmp_opts, strategy_list);
    if (pof_cmd->parsed()) return do_pof(pof_problem, pof_t, pof_count, pof_dim, pof_out);
    if (knee_cmd->parsed()) return do_knees(knee_opts);
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "configuration error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
