#pragma once

#include <functional>
#include <string_view>
#include <vector>

#include "dtwist/reduce.hpp"

namespace dtwist {

/// saved[i] is true when simplex i was found negative by the coboundary pass.
class SavedMask {
 public:
  SavedMask() = default;
  explicit SavedMask(std::size_t n) : saved_(n, false) {}

  std::size_t size() const { return saved_.size(); }
  bool operator[](std::size_t i) const { return saved_[i]; }
  void save(std::size_t i) { saved_[i] = true; }
  std::size_t count() const;
  std::vector<Index> indices() const;

  friend bool operator==(const SavedMask&, const SavedMask&) = default;

 private:
  std::vector<bool> saved_;
};

/// Marks n-1-low(column) for every nonzero column of a reduced coboundary.
SavedMask save_from_reduced_coboundary(const ReducedMatrix& coboundary, std::size_t n);

/// Boundary columns for saved simplices only; every other column is zero.
SparseBinaryMatrix pruned_boundary_matrix(const Filtration& f, const SavedMask& mask);
SparseBinaryMatrix pruned_boundary_matrix(const Filtration& f, const PositionIndex& index,
                                          const SavedMask& mask);

enum class Stage {
  kCoboundaryBuilt,
  kCoboundaryReduced,
  kMaskExtracted,
  kCoboundaryReleased,
  kPrunedBoundaryBuilt,
  kPrunedBoundaryReduced,
};

std::string_view stage_name(Stage s);

struct StageEvent {
  Stage stage;
  std::size_t nonzeros = 0;        // of the matrix resident at this point
  std::size_t resident_bytes = 0;  // matrix storage alive at this point
  double seconds = 0.0;            // reduction stages only
};

/// Optional per-stage hook; never called when empty.
using StageTrace = std::function<void(const StageEvent&)>;

/// Coboundary twist pass, saving, then twist reduction of the pruned
/// boundary. Only one of the two matrices is alive at any time. The result
/// equals twist_reduce(boundary_matrix(f)) column for column.
ReducedMatrix double_twist(const Filtration& f, const StageTrace& trace = {});

}  // namespace dtwist
