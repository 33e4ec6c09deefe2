#include "ddmoea/runner.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <limits>
#include <stdexcept>

namespace ddmoea {

namespace {

double now_ms() {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

// Shortest representation that parses back to the same double.
std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

int default_population(const DmopInstance& p) { return p.m == 2 ? 100 : 150; }
int default_ref_points(const DmopInstance& p) { return p.m == 2 ? 1000 : 1035; }

std::vector<EnvReference> build_references(const DmopInstance& p, const ExperimentConfig& cfg) {
  const int count = cfg.ref_points > 0 ? cfg.ref_points : default_ref_points(p);
  std::vector<EnvReference> refs(cfg.changes);
  for (int e = 0; e < cfg.changes; ++e) {
    const double t = static_cast<double>(e) / cfg.nt;
    refs[e].front = sample_true_pof(p, t, count);
    ObjectiveVector nadir(p.m, -std::numeric_limits<double>::infinity());
    for (const auto& pt : refs[e].front.points)
      for (int j = 0; j < p.m; ++j) nadir[j] = std::max(nadir[j], pt[j]);
    refs[e].r.resize(p.m);
    for (int j = 0; j < p.m; ++j) refs[e].r[j] = 1.1 * nadir[j];
  }
  return refs;
}

namespace {

RunRecord execute_run(const DmopInstance& p, const ExperimentConfig& cfg,
                      const std::vector<EnvReference>& refs, int run_index) {
  RunRecord rec;
  rec.run = run_index + 1;
  rec.seed = splitmix64(cfg.seed + static_cast<std::uint64_t>(run_index));
  RandomSource rng(rec.seed);
  History hist;
  const int N = cfg.population > 0 ? cfg.population : default_population(p);

  std::vector<double> igd_series, hv_series;
  for (int e = 0; e < cfg.changes; ++e) {
    const double t = static_cast<double>(e) / cfg.nt;
    EnvRow row;
    row.env = e + 1;
    row.t = t;

    double t0 = now_ms();
    Population init = respond(cfg.strategy, hist, p, t, N, cfg.response, rng,
                              &rec.evals_respond);
    row.resp_ms = now_ms() - t0;

    t0 = now_ms();
    Population pos = optimize(init, p, t, cfg.taut, cfg.moead, rng, &rec.evals_optimize);
    row.opt_ms = now_ms() - t0;

    std::vector<ObjectiveVector> objs;
    objs.reserve(pos.size());
    for (const auto& ind : pos.members) objs.push_back(ind.f);
    row.igd = igd(refs[e].front, objs);
    row.hv = hv(objs, refs[e].r);
    row.ref_point = refs[e].r;

    record_truth(hist, pos, cfg.response);
    igd_series.push_back(row.igd);
    hv_series.push_back(row.hv);
    rec.rows.push_back(std::move(row));
  }
  rec.migd = summarize(igd_series).mean;
  rec.mhv = summarize(hv_series).mean;
  return rec;
}

}  // namespace

std::vector<RunRecord> run_experiment(const ExperimentConfig& cfg) {
  if (cfg.runs < 1 || cfg.changes < 1 || cfg.nt < 1 || cfg.taut < 1)
    throw std::invalid_argument("run_experiment: runs, changes, nt, taut must be positive");
  const DmopInstance p = make_instance(cfg.problem, cfg.dimension);
  const std::vector<EnvReference> refs = build_references(p, cfg);

  std::vector<RunRecord> records(cfg.runs);
  const int jobs = std::max(1, cfg.jobs);
#pragma omp parallel for schedule(dynamic) num_threads(jobs) if (jobs > 1)
  for (int r = 0; r < cfg.runs; ++r) records[r] = execute_run(p, cfg, refs, r);
  return records;
}

namespace {

void echo_config(std::ostream& os, const ExperimentConfig& cfg) {
  const DmopInstance p = make_instance(cfg.problem, cfg.dimension);
  os << "# problem=" << cfg.problem << "\n";
  os << "# nt=" << cfg.nt << "\n";
  os << "# taut=" << cfg.taut << "\n";
  os << "# changes=" << cfg.changes << "\n";
  os << "# runs=" << cfg.runs << "\n";
  os << "# strategy=" << to_string(cfg.strategy) << "\n";
  os << "# seed=" << cfg.seed << "\n";
  os << "# population=" << (cfg.population > 0 ? cfg.population : default_population(p)) << "\n";
  os << "# dimension=" << cfg.dimension << "\n";
  os << "# ref_points=" << (cfg.ref_points > 0 ? cfg.ref_points : default_ref_points(p)) << "\n";
  os << "# moead.T=" << cfg.moead.T << "\n";
  os << "# moead.nr=" << cfg.moead.nr << "\n";
  os << "# moead.neighbor_prob=" << fmt(cfg.moead.neighbor_prob) << "\n";
  os << "# moead.eta_c=" << fmt(cfg.moead.eta_c) << "\n";
  os << "# moead.eta_m=" << fmt(cfg.moead.eta_m) << "\n";
  os << "# moead.pc=" << fmt(cfg.moead.pc) << "\n";
  os << "# moead.pm=" << fmt(cfg.moead.pm < 0 ? 1.0 / cfg.dimension : cfg.moead.pm) << "\n";
  os << "# response.frac_pred=" << fmt(cfg.response.frac_pred) << "\n";
  os << "# response.frac_last=" << fmt(cfg.response.frac_last) << "\n";
  os << "# knee.subspaces=" << cfg.response.subspaces << "\n";
  os << "# knee.deterministic_theta=" << (cfg.response.deterministic_theta ? 1 : 0) << "\n";
  os << "# ddm.K=" << cfg.response.diffusion_steps << "\n";
  os << "# ddm.schedule="
     << (cfg.response.schedule == ScheduleKind::cosine ? "cosine" : "linear") << "\n";
  os << "# ddm.prior=" << (cfg.response.prior == PriorKind::knee ? "knee" : "kde") << "\n";
  os << "# ddm.psi_min=" << fmt(cfg.response.guidance.psi_min) << "\n";
  os << "# ddm.psi_max=" << fmt(cfg.response.guidance.psi_max) << "\n";
  os << "# ddm.lambda=" << fmt(cfg.response.guidance.lambda) << "\n";
}

std::ofstream open_or_throw(const std::string& path) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot write " + path);
  return os;
}

}  // namespace

void emit_csv(const std::vector<RunRecord>& records, const ExperimentConfig& cfg,
              const std::string& path) {
  if (records.empty()) throw std::invalid_argument("emit_csv: no records");
  const int m = static_cast<int>(records.front().rows.front().ref_point.size());

  {
    auto os = open_or_throw(path + ".rows.csv");
    os << "run,env,t,igd,hv,resp_ms,opt_ms";
    for (int j = 1; j <= m; ++j) os << ",r" << j;
    os << "\n";
    for (const auto& rec : records) {
      for (const auto& row : rec.rows) {
        os << rec.run << ',' << row.env << ',' << fmt(row.t) << ',' << fmt(row.igd) << ','
           << fmt(row.hv) << ',' << fmt(row.resp_ms) << ',' << fmt(row.opt_ms);
        for (double r : row.ref_point) os << ',' << fmt(r);
        os << "\n";
      }
    }
  }

  {
    auto os = open_or_throw(path + ".summary.csv");
    echo_config(os, cfg);
    os << "run,migd,mhv\n";
    std::vector<double> migd, mhv;
    for (const auto& rec : records) {
      os << rec.run << ',' << fmt(rec.migd) << ',' << fmt(rec.mhv) << "\n";
      migd.push_back(rec.migd);
      mhv.push_back(rec.mhv);
    }
    const SeriesSummary si = summarize(migd), sh = summarize(mhv);
    os << "aggregate," << fmt(si.mean) << "±" << fmt(si.stddev) << ',' << fmt(sh.mean) << "±"
       << fmt(sh.stddev) << "\n";
  }
}

std::vector<CompareRow> compare(const std::vector<StrategyKind>& strategies,
                                const ExperimentConfig& cfg) {
  if (strategies.size() < 2)
    throw std::invalid_argument("compare: need at least two strategies");
  std::vector<std::string> problems;
  if (cfg.problem == "all") {
    for (const auto& p : catalog()) problems.push_back(p.id);
  } else {
    problems.push_back(cfg.problem);
  }

  std::vector<CompareRow> rows;
  for (const auto& prob : problems) {
    CompareRow row;
    row.problem = prob;
    row.nt = cfg.nt;
    row.taut = cfg.taut;

    std::vector<std::vector<double>> migd(strategies.size()), mhv(strategies.size());
    for (std::size_t s = 0; s < strategies.size(); ++s) {
      ExperimentConfig c = cfg;
      c.problem = prob;
      c.strategy = strategies[s];  // same seed for every strategy: paired runs
      for (const auto& rec : run_experiment(c)) {
        migd[s].push_back(rec.migd);
        mhv[s].push_back(rec.mhv);
      }
    }
    for (std::size_t s = 0; s < strategies.size(); ++s) {
      CompareCell cell;
      cell.strategy = strategies[s];
      cell.migd = summarize(migd[s]);
      cell.mhv = summarize(mhv[s]);
      // '+' means the reference strategy is significantly better; MHV is
      // negated so larger-is-better maps onto the minimization convention.
      cell.migd_mark = wilcoxon_rank_sum(migd[0], migd[s]).direction;
      std::vector<double> ref_neg, s_neg;
      for (double v : mhv[0]) ref_neg.push_back(-v);
      for (double v : mhv[s]) s_neg.push_back(-v);
      cell.mhv_mark = wilcoxon_rank_sum(ref_neg, s_neg).direction;
      row.cells.push_back(cell);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

void emit_compare_csv(const std::vector<CompareRow>& rows, const std::string& path) {
  if (rows.empty()) throw std::invalid_argument("emit_compare_csv: no rows");
  auto os = open_or_throw(path);
  os << "problem,nt,taut";
  for (const auto& cell : rows.front().cells) {
    const std::string name = to_string(cell.strategy);
    os << ',' << name << "_migd_mean," << name << "_migd_std," << name << "_migd_mark,"
       << name << "_mhv_mean," << name << "_mhv_std," << name << "_mhv_mark";
  }
  os << "\n";
  for (const auto& row : rows) {
    os << row.problem << ',' << row.nt << ',' << row.taut;
    for (const auto& cell : row.cells)
      os << ',' << fmt(cell.migd.mean) << ',' << fmt(cell.migd.stddev) << ','
         << cell.migd_mark << ',' << fmt(cell.mhv.mean) << ',' << fmt(cell.mhv.stddev) << ','
         << cell.mhv_mark;
    os << "\n";
  }
}

}  // namespace ddmoea
