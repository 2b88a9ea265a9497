#include "dtwist/persistence.hpp"

#include <algorithm>
#include <iterator>
#include <tuple>


namespace dtwist {

namespace {

PersistencePair make_pair(const Filtration& f, Index birth, Index death) {
  return PersistencePair{birth, death, f.dim(birth), f.value(birth), f.value(death)};
}

void sort_by_death(std::vector<PersistencePair>& pairs) {
  std::sort(pairs.begin(), pairs.end(),
            [](const auto& a, const auto& b) { return a.death_index < b.death_index; });
}

}  // namespace

std::vector<PersistencePair> pairs_from_boundary(const ReducedMatrix& rm, const Filtration& f) {
  std::vector<PersistencePair> pairs;
  for (std::size_t j = 0; j < rm.matrix.size(); ++j)
    if (auto i = low(rm.matrix.column(j))) pairs.push_back(make_pair(f, *i, static_cast<Index>(j)));
  return pairs;  // already in death order
}

std::vector<PersistencePair> pairs_from_coboundary(const ReducedMatrix& rm, const Filtration& f) {
  const std::size_t n = rm.matrix.size();
  std::vector<PersistencePair> pairs;
  for (std::size_t dual = 0; dual < n; ++dual)
    if (auto lo = low(rm.matrix.column(dual)))
      pairs.push_back(make_pair(f, static_cast<Index>(n - 1 - dual), static_cast<Index>(n - 1 - *lo)));
  sort_by_death(pairs);
  return pairs;
}

std::vector<EssentialClass> essential_classes(const Filtration& f,
                                              const std::vector<PersistencePair>& pairs) {
  std::vector<bool> paired(f.size(), false);
  for (const auto& p : pairs) {
    paired[p.birth_index] = true;
    paired[p.death_index] = true;
  }
  std::vector<EssentialClass> out;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (!paired[i]) {
      const auto idx = static_cast<Index>(i);
      out.push_back(EssentialClass{idx, f.dim(idx), f.value(idx)});
    }
  return out;
}

std::vector<Representative> representatives(const ReducedMatrix& rm, const Filtration& f) {
  std::vector<Representative> out;
  for (std::size_t j = 0; j < rm.matrix.size(); ++j) {
    const auto col = rm.matrix.column(j);
    if (col.empty()) continue;
    out.push_back(Representative{make_pair(f, col.back(), static_cast<Index>(j)),
                                 std::vector<Index>(col.begin(), col.end())});
  }
  return out;
}

Diagram diagram(const Filtration& f, const std::vector<PersistencePair>& pairs,
                const std::vector<EssentialClass>& essentials, bool drop_zero_persistence,
                const std::vector<Representative>* reps) {
  Diagram d;
  d.dims = f.max_dim();
  std::vector<const std::vector<Index>*> chain_of(f.size(), nullptr);
  if (reps)
    for (const auto& r : *reps) chain_of[r.pair.death_index] = &r.chain;

  for (const auto& p : pairs) {
    PersistencePair valued = p;
    valued.dim = f.dim(p.birth_index);
    valued.birth_value = f.value(p.birth_index);
    valued.death_value = f.value(p.death_index);
    if (drop_zero_persistence && valued.birth_value == valued.death_value) continue;
    DiagramPoint point{valued, std::nullopt};
    if (reps && chain_of[p.death_index]) point.representative = *chain_of[p.death_index];
    d.points.push_back(std::move(point));
  }
  std::sort(d.points.begin(), d.points.end(), [](const auto& a, const auto& b) {
    return std::tie(a.pair.dim, a.pair.birth_index) < std::tie(b.pair.dim, b.pair.birth_index);
  });

  d.essentials = essentials;
  for (auto& e : d.essentials) {
    e.dim = f.dim(e.birth_index);
    e.birth_value = f.value(e.birth_index);
  }
  std::sort(d.essentials.begin(), d.essentials.end(), [](const auto& a, const auto& b) {
    return std::tie(a.dim, a.birth_index) < std::tie(b.dim, b.birth_index);
  });
  return d;
}

std::vector<Index> chain_boundary(const SparseBinaryMatrix& boundary, std::span<const Index> chain) {
  std::vector<Index> acc;
  std::vector<Index> next;
  for (Index s : chain) {
    const auto col = boundary.column(s);
    next.clear();
    std::set_symmetric_difference(acc.begin(), acc.end(), col.begin(), col.end(),
                                  std::back_inserter(next));
    acc.swap(next);
  }
  return acc;
}

}  // namespace dtwist
