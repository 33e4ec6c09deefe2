#include "ddmoea/core.hpp"

#include <algorithm>
#include <stdexcept>

namespace ddmoea {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

bool dominates(const ObjectiveVector& a, const ObjectiveVector& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("dominates: objective vectors of different length");
  bool strictly_better = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
    if (a[i] < b[i]) strictly_better = true;
  }
  return strictly_better;
}

std::vector<std::size_t> pareto_filter_indices(const std::vector<ObjectiveVector>& objs) {
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < objs.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < objs.size(); ++j) {
      if (j != i && dominates(objs[j], objs[i])) {
        dominated = true;
        break;
      }
    }
    if (!dominated) keep.push_back(i);
  }
  return keep;
}

Population pareto_filter(const Population& pop) {
  std::vector<ObjectiveVector> objs;
  objs.reserve(pop.size());
  for (const auto& ind : pop.members) objs.push_back(ind.f);
  Population out;
  out.capacity = pop.capacity;
  for (std::size_t i : pareto_filter_indices(objs)) out.members.push_back(pop.members[i]);
  return out;
}

DecisionVector clamp_to_bounds(const DecisionVector& x, const Bounds& b) {
  DecisionVector y = x;
  clamp_in_place(y, b);
  return y;
}

void clamp_in_place(DecisionVector& x, const Bounds& b) {
  if (x.size() != b.dim())
    throw std::invalid_argument("clamp: vector/bounds dimension mismatch");
  for (std::size_t i = 0; i < x.size(); ++i)
    x[i] = std::min(std::max(x[i], b.lower[i]), b.upper[i]);
}

}  // namespace ddmoea
