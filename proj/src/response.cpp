#include "ddmoea/response.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "ddmoea/knee.hpp"
#include "ddmoea/moead.hpp"

namespace ddmoea {

StrategyKind parse_strategy(const std::string& name) {
  if (name == "ddm") return StrategyKind::ddm;
  if (name == "v1") return StrategyKind::v1;
  if (name == "v2") return StrategyKind::v2;
  if (name == "v3") return StrategyKind::v3;
  if (name == "random") return StrategyKind::random_restart;
  throw std::invalid_argument("unknown strategy: " + name);
}

std::string to_string(StrategyKind kind) {
  switch (kind) {
    case StrategyKind::ddm: return "ddm";
    case StrategyKind::v1: return "v1";
    case StrategyKind::v2: return "v2";
    case StrategyKind::v3: return "v3";
    case StrategyKind::random_restart: return "random";
  }
  return "?";
}

std::vector<std::size_t> farthest_point_subset(const std::vector<ObjectiveVector>& objs,
                                               std::size_t k) {
  if (k >= objs.size()) {
    std::vector<std::size_t> all(objs.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    return all;
  }
  std::vector<std::size_t> picked;
  picked.reserve(k);
  if (k == 0) return picked;

  std::size_t seed = 0;
  for (std::size_t i = 1; i < objs.size(); ++i)
    if (objs[i][0] < objs[seed][0]) seed = i;
  picked.push_back(seed);

  std::vector<double> dist(objs.size(), std::numeric_limits<double>::infinity());
  while (picked.size() < k) {
    const auto& last = objs[picked.back()];
    std::size_t best = objs.size();
    double best_d = -1.0;
    for (std::size_t i = 0; i < objs.size(); ++i) {
      dist[i] = std::min(dist[i], squared_distance(objs[i], last));
      if (dist[i] > best_d && dist[i] > 0.0) {
        // skip already-picked points (distance 0)
        best_d = dist[i];
        best = i;
      }
    }
    if (best == objs.size()) {
      // all remaining coincide with picked points; fill by index order
      for (std::size_t i = 0; i < objs.size() && picked.size() < k; ++i)
        if (std::find(picked.begin(), picked.end(), i) == picked.end()) picked.push_back(i);
      break;
    }
    picked.push_back(best);
  }
  return picked;
}

namespace {

struct SlotSizes {
  int pred, last, rand;
};

SlotSizes slot_sizes(int N, const ResponseConfig& cfg) {
  SlotSizes s;
  s.pred = static_cast<int>(std::floor(cfg.frac_pred * N));
  s.last = static_cast<int>(std::floor(cfg.frac_last * N));
  s.rand = N - s.pred - s.last;
  if (s.pred < 0 || s.last < 0 || s.rand < 0)
    throw std::invalid_argument("respond: invalid slot fractions");
  return s;
}

// Per-subspace knee predictions from history; stored in hist.predicted so the
// next record_truth can score them.
std::vector<KneeRecord> predict_knees(StrategyKind kind, History& hist,
                                      const DmopInstance& p, const ResponseConfig& cfg,
                                      std::uint64_t pred_seed) {
  std::vector<KneeRecord> pred(cfg.subspaces);
  for (int i = 0; i < cfg.subspaces; ++i) {
    const KneeRecord& k1 = i < static_cast<int>(hist.knee_prev.size()) ? hist.knee_prev[i]
                                                                       : KneeRecord{};
    const KneeRecord& k2 = i < static_cast<int>(hist.knee_prev2.size()) ? hist.knee_prev2[i]
                                                                        : KneeRecord{};
    if (k1.valid && k2.valid) {
      if (kind == StrategyKind::v1) {
        pred[i].x = linear_predict(k1.x, k2.x, p.bounds);
      } else {
        RandomSource theta_rng(splitmix64(pred_seed + 0x1000 + i));
        pred[i].x = akp_predict(k1.x, k2.x, p.bounds, theta_rng, cfg.deterministic_theta);
      }
      pred[i].valid = true;
    } else if (k1.valid) {
      pred[i].x = k1.x;  // no trend yet: carry the previous knee forward
      pred[i].valid = true;
    }
  }
  return pred;
}

}  // namespace

Population respond(StrategyKind kind, History& hist, const DmopInstance& p, double t, int N,
                   const ResponseConfig& cfg, RandomSource& rng,
                   std::uint64_t* eval_counter) {
  if (N < 1) throw std::invalid_argument("respond: N must be >= 1");
  // One draw from the caller stream seeds every internal stream. Strategies
  // that share a slot then produce identical members for it.
  const std::uint64_t r0 = rng.next_u64();
  RandomSource rand_rng(splitmix64(r0 + 1));
  const std::uint64_t pred_seed = splitmix64(r0 + 2);

  hist.predicted.assign(cfg.subspaces, KneeRecord{});

  if (hist.environments < 2 || kind == StrategyKind::random_restart)
    return random_population(p, t, N, rand_rng, eval_counter);

  Population out;
  out.capacity = N;
  out.members.reserve(N);

  if (kind == StrategyKind::v2) {
    // Reuse the whole previous POS (Tchebycheff-truncated if over-full), then
    // pad with random individuals.
    std::vector<Individual> carried;
    if (static_cast<int>(hist.pos_prev.size()) > N) {
      WeightSet ws = weight_vectors(N, p.m);
      ObjectiveVector z(p.m, std::numeric_limits<double>::infinity());
      for (const auto& ind : hist.pos_prev.members)
        for (int j = 0; j < p.m; ++j) z[j] = std::min(z[j], ind.f[j]);
      for (int i = 0; i < N; ++i) {
        std::size_t best = 0;
        double best_v = std::numeric_limits<double>::infinity();
        for (std::size_t l = 0; l < hist.pos_prev.size(); ++l) {
          const double v = tchebycheff(hist.pos_prev.members[l].f, ws.weights[i], z);
          if (v < best_v) {
            best_v = v;
            best = l;
          }
        }
        carried.push_back(hist.pos_prev.members[best]);
      }
    } else {
      carried = hist.pos_prev.members;
    }
    for (auto& ind : carried) {
      Individual re = evaluate_individual(p, ind.x, t, eval_counter);
      re.origin = Origin::carried;
      out.members.push_back(std::move(re));
    }
    while (static_cast<int>(out.size()) < N)
      out.members.push_back(random_individual(p, t, rand_rng, eval_counter));
    return out;
  }

  const SlotSizes slots = slot_sizes(N, cfg);

  // --- prediction slot ---
  std::vector<Individual> pred_members;
  if (kind == StrategyKind::v3) {
    RandomSource pred_rng(pred_seed);
    for (int i = 0; i < slots.pred; ++i) {
      Individual ind = random_individual(p, t, pred_rng, eval_counter);
      ind.origin = Origin::predicted;  // occupies the prediction slot
      pred_members.push_back(std::move(ind));
    }
  } else {
    hist.predicted = predict_knees(kind, hist, p, cfg, pred_seed);
    SubspacePartition part = partition(hist.pos_prev, cfg.subspaces);
    std::vector<Individual> candidates;
    const NoiseSchedule schedule = make_schedule(cfg.schedule, cfg.diffusion_steps);
    for (int i = 0; i < cfg.subspaces; ++i) {
      if (!hist.predicted[i].valid || part.members[i].empty()) continue;
      std::vector<DecisionVector> subpop;
      subpop.reserve(part.members[i].size());
      for (std::size_t idx : part.members[i]) subpop.push_back(hist.pos_prev.members[idx].x);
      const double psi = i < static_cast<int>(hist.psi.size()) ? hist.psi[i]
                                                               : cfg.guidance.psi_min;
      RandomSource sub_rng(splitmix64(pred_seed + 0x2000 + i));
      const auto denoised = denoise_population(subpop, hist.predicted[i].x, psi, schedule,
                                               p.bounds, sub_rng, cfg.prior);
      for (const auto& x : denoised) {
        Individual ind = evaluate_individual(p, x, t, eval_counter);
        ind.origin = Origin::predicted;
        candidates.push_back(std::move(ind));
      }
    }
    if (static_cast<int>(candidates.size()) > slots.pred) {
      std::vector<ObjectiveVector> objs;
      objs.reserve(candidates.size());
      for (const auto& c : candidates) objs.push_back(c.f);
      for (std::size_t idx : farthest_point_subset(objs, slots.pred))
        pred_members.push_back(candidates[idx]);
    } else {
      pred_members = std::move(candidates);
    }
  }

  // --- carry-over slot: previous POS, spread-preserving subset if over-full ---
  std::vector<Individual> last_members;
  {
    std::vector<ObjectiveVector> objs;
    objs.reserve(hist.pos_prev.size());
    for (const auto& ind : hist.pos_prev.members) objs.push_back(ind.f);
    for (std::size_t idx : farthest_point_subset(objs, slots.last)) {
      Individual re = evaluate_individual(p, hist.pos_prev.members[idx].x, t, eval_counter);
      re.origin = Origin::carried;
      last_members.push_back(std::move(re));
    }
  }

  for (auto& ind : pred_members) out.members.push_back(std::move(ind));
  for (auto& ind : last_members) out.members.push_back(std::move(ind));
  while (static_cast<int>(out.size()) < N)
    out.members.push_back(random_individual(p, t, rand_rng, eval_counter));
  return out;
}

void record_truth(History& hist, const Population& pos_t, const ResponseConfig& cfg) {
  if (pos_t.empty()) throw std::invalid_argument("record_truth: empty POS");
  SubspacePartition part = partition(pos_t, cfg.subspaces);

  std::vector<KneeRecord> truth(cfg.subspaces);
  for (int i = 0; i < cfg.subspaces; ++i) {
    if (part.members[i].empty()) continue;
    const std::size_t idx = extract_knee(pos_t, part.members[i]);
    truth[i].x = pos_t.members[idx].x;
    truth[i].f = pos_t.members[idx].f;
    truth[i].valid = true;
  }

  std::vector<double> psi_next(cfg.subspaces, cfg.guidance.psi_min);
  for (int i = 0; i < cfg.subspaces; ++i) {
    const bool scored = i < static_cast<int>(hist.predicted.size()) &&
                        hist.predicted[i].valid && truth[i].valid;
    if (scored)
      psi_next[i] = adaptive_psi(hist.predicted[i].x, truth[i].x, cfg.guidance);
  }

  hist.pos_prev2 = std::move(hist.pos_prev);
  hist.pos_prev = pos_t;
  hist.knee_prev2 = std::move(hist.knee_prev);
  hist.knee_prev = std::move(truth);
  hist.psi = std::move(psi_next);
  hist.predicted.assign(cfg.subspaces, KneeRecord{});
  ++hist.environments;
}

}  // namespace ddmoea
