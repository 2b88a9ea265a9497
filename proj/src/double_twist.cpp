#include "dtwist/double_twist.hpp"

#include <chrono>
#include <cstdint>

namespace dtwist {

std::size_t SavedMask::count() const {
  std::size_t c = 0;
  for (bool b : saved_) c += b;
  return c;
}

std::vector<Index> SavedMask::indices() const {
  std::vector<Index> out;
  for (std::size_t i = 0; i < saved_.size(); ++i)
    if (saved_[i]) out.push_back(static_cast<Index>(i));
  return out;
}

SavedMask save_from_reduced_coboundary(const ReducedMatrix& coboundary, std::size_t n) {
  SavedMask mask(n);
  for (std::size_t i = 0; i < coboundary.matrix.size(); ++i)
    if (auto j = low(coboundary.matrix.column(i))) mask.save(n - 1 - *j);
  return mask;
}

SparseBinaryMatrix pruned_boundary_matrix(const Filtration& f, const SavedMask& mask) {
  return pruned_boundary_matrix(f, PositionIndex(f), mask);
}

SparseBinaryMatrix pruned_boundary_matrix(const Filtration& f, const PositionIndex& index,
                                          const SavedMask& mask) {
  if (mask.size() != f.size())
    throw InvariantError("saved mask has size " + std::to_string(mask.size()) +
                         ", filtration has " + std::to_string(f.size()) + " simplices");
  const auto n = static_cast<std::int64_t>(f.size());
  std::vector<Column> columns(f.size());
  std::vector<int> dims(f.size());
  std::string error;
#pragma omp parallel for schedule(dynamic, 256)
  for (std::int64_t j = 0; j < n; ++j) {
    dims[j] = f.dim(static_cast<Index>(j));
    if (!mask[j]) continue;
    try {
      columns[j] = boundary_column(f, index, static_cast<Index>(j));
    } catch (const InvariantError& e) {
#pragma omp critical(dtwist_pruned_error)
      if (error.empty()) error = e.what();
    }
  }
  if (!error.empty()) throw InvariantError(error);
  return SparseBinaryMatrix(std::move(columns), std::move(dims));
}

std::string_view stage_name(Stage s) {
  switch (s) {
    case Stage::kCoboundaryBuilt: return "coboundary_built";
    case Stage::kCoboundaryReduced: return "coboundary_reduced";
    case Stage::kMaskExtracted: return "mask_extracted";
    case Stage::kCoboundaryReleased: return "coboundary_released";
    case Stage::kPrunedBoundaryBuilt: return "pruned_boundary_built";
    case Stage::kPrunedBoundaryReduced: return "pruned_boundary_reduced";
  }
  return "unknown";
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

ReducedMatrix double_twist(const Filtration& f, const StageTrace& trace) {
  auto emit = [&](Stage stage, const SparseBinaryMatrix* m, double secs = 0.0) {
    if (trace) trace(StageEvent{stage, m ? m->nonzeros() : 0, m ? m->memory_bytes() : 0, secs});
  };

  const std::size_t n = f.size();
  const PositionIndex index(f);
  SavedMask mask;
  {
    SparseBinaryMatrix coboundary = coboundary_matrix(f, index);
    emit(Stage::kCoboundaryBuilt, &coboundary);
    const auto start = Clock::now();
    ReducedMatrix reduced = cotwist_reduce(std::move(coboundary));
    const double secs = seconds_since(start);
    emit(Stage::kCoboundaryReduced, &reduced.matrix, secs);
    mask = save_from_reduced_coboundary(reduced, n);
    emit(Stage::kMaskExtracted, &reduced.matrix);
  }
  emit(Stage::kCoboundaryReleased, nullptr);

  SparseBinaryMatrix boundary = pruned_boundary_matrix(f, index, mask);
  emit(Stage::kPrunedBoundaryBuilt, &boundary);
  const auto start = Clock::now();
  ReducedMatrix result = twist_reduce(std::move(boundary));
  emit(Stage::kPrunedBoundaryReduced, &result.matrix, seconds_since(start));
  return result;
}

}  // namespace dtwist
