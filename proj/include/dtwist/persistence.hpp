#pragma once

#include <optional>
#include <vector>

#include "dtwist/reduce.hpp"

namespace dtwist {

struct PersistencePair {
  Index birth_index = 0;
  Index death_index = 0;
  int dim = 0;
  Value birth_value = 0;
  Value death_value = 0;

  friend bool operator==(const PersistencePair&, const PersistencePair&) = default;
};

struct Representative {
  PersistencePair pair;
  std::vector<Index> chain;  // ascending indices of dim-simplices

  friend bool operator==(const Representative&, const Representative&) = default;
};

struct EssentialClass {
  Index birth_index = 0;
  int dim = 0;
  Value birth_value = 0;

  friend bool operator==(const EssentialClass&, const EssentialClass&) = default;
};

/// (low(R_j), j) for each nonzero column, sorted by death index.
std::vector<PersistencePair> pairs_from_boundary(const ReducedMatrix& rm, const Filtration& f);

/// (n-1-i*, n-1-low(R_i*)) for each nonzero dual column, in original
/// indices and sorted by death index.
std::vector<PersistencePair> pairs_from_coboundary(const ReducedMatrix& rm, const Filtration& f);

/// Indices that are neither a birth nor a death, ascending.
std::vector<EssentialClass> essential_classes(const Filtration& f,
                                              const std::vector<PersistencePair>& pairs);

/// One representative cycle per nonzero column of a reduced boundary.
std::vector<Representative> representatives(const ReducedMatrix& rm, const Filtration& f);

struct DiagramPoint {
  PersistencePair pair;
  std::optional<std::vector<Index>> representative;
};

struct Diagram {
  int dims = 0;
  std::vector<DiagramPoint> points;       // sorted by (dim, birth_index)
  std::vector<EssentialClass> essentials;  // sorted by (dim, birth_index)
};

/// Decorates index pairs with values and optional representatives. With
/// drop_zero_persistence, pairs whose birth and death values coincide are
/// left out. Essentials always stay.
Diagram diagram(const Filtration& f, const std::vector<PersistencePair>& pairs,
                const std::vector<EssentialClass>& essentials, bool drop_zero_persistence,
                const std::vector<Representative>* reps = nullptr);

/// Z2 sum of the boundaries of the chain's simplices, ascending.
std::vector<Index> chain_boundary(const SparseBinaryMatrix& boundary, std::span<const Index> chain);

}  // namespace dtwist
