#pragma once

#include <vector>

#include "dtwist/matrix.hpp"

namespace dtwist {

/// pivots[r] = column whose lowest one is r, or kNoIndex.
class PivotTable {
 public:
  PivotTable() = default;
  explicit PivotTable(std::size_t n) : column_of_(n, kNoIndex) {}

  Index operator[](Index row) const { return column_of_[row]; }
  void set(Index row, Index column) { column_of_[row] = column; }
  std::size_t size() const { return column_of_.size(); }
  std::size_t count() const;

  friend bool operator==(const PivotTable&, const PivotTable&) = default;

 private:
  std::vector<Index> column_of_;
};

struct ReducedMatrix {
  SparseBinaryMatrix matrix;
  PivotTable pivots;

  friend bool operator==(const ReducedMatrix&, const ReducedMatrix&) = default;
};

// Every reduction has a copying overload and an in-place overload taking
// the matrix by rvalue.

/// Left-to-right column additions until all lows are distinct. Columns are
/// plain sorted vectors merged by symmetric difference.
ReducedMatrix standard_reduce(const SparseBinaryMatrix& m);
ReducedMatrix standard_reduce(SparseBinaryMatrix&& m);

/// Twist reduction of a boundary matrix: dimensions from high to low, each
/// pivot row r clears column r.
ReducedMatrix twist_reduce(const SparseBinaryMatrix& m);
ReducedMatrix twist_reduce(SparseBinaryMatrix&& m);

/// Twist reduction of a coboundary matrix: original dimensions from low to
/// high, each pivot clears the column at its dual index.
ReducedMatrix cotwist_reduce(const SparseBinaryMatrix& m);
ReducedMatrix cotwist_reduce(SparseBinaryMatrix&& m);

/// True when all nonzero columns have pairwise distinct lows and the pivot
/// table agrees with them.
bool is_reduced(const ReducedMatrix& rm);

}  // namespace dtwist
