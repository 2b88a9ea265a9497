#include "dtwist/reduce.hpp"

#include <algorithm>
#include <iterator>

#include "dtwist/reduction_column.hpp"

namespace dtwist {

std::size_t PivotTable::count() const {
  return static_cast<std::size_t>(
      std::count_if(column_of_.begin(), column_of_.end(), [](Index c) { return c != kNoIndex; }));
}

ReducedMatrix standard_reduce(const SparseBinaryMatrix& m) { return standard_reduce(SparseBinaryMatrix(m)); }

ReducedMatrix standard_reduce(SparseBinaryMatrix&& m) {
  const std::size_t n = m.size();
  PivotTable pivots(n);
  Column sum;
  for (std::size_t j = 0; j < n; ++j) {
    Column& col = m.mutable_column(j);
    while (!col.empty() && pivots[col.back()] != kNoIndex) {
      const auto other = m.column(pivots[col.back()]);
      sum.clear();
      std::set_symmetric_difference(col.begin(), col.end(), other.begin(), other.end(),
                                    std::back_inserter(sum));
      col.swap(sum);
    }
    if (!col.empty()) pivots.set(col.back(), static_cast<Index>(j));
  }
  return ReducedMatrix{std::move(m), std::move(pivots)};
}

namespace {

// One reduction run over the columns of each listed dimension, in the order
// given. A single working column is allocated up front and reused.
ReducedMatrix reduce_with_clearing(SparseBinaryMatrix m, const std::vector<int>& dim_order) {
  const std::size_t n = m.size();
  PivotTable pivots(n);
  ReductionColumn work(n);

  std::vector<std::vector<Index>> by_dim(static_cast<std::size_t>(m.max_dim()) + 1);
  for (std::size_t j = 0; j < n; ++j) by_dim[m.dim(j)].push_back(static_cast<Index>(j));

  Column drained;
  for (int delta : dim_order) {
    if (delta < 0 || delta >= static_cast<int>(by_dim.size())) continue;
    for (Index j : by_dim[delta]) {
      if (m.column_empty(j)) continue;  // zero, or cleared by a higher pass
      work.add(m.column(j));
      for (Index r = work.max_index(); r != kNoIndex && pivots[r] != kNoIndex; r = work.max_index())
        work.add(m.column(pivots[r]));
      const Index r = work.max_index();
      if (r != kNoIndex) {
        pivots.set(r, j);
        m.clear_column(r);
      }
      work.drain(drained);
      m.set_column(j, drained);
    }
  }
  return ReducedMatrix{std::move(m), std::move(pivots)};
}

}  // namespace

ReducedMatrix twist_reduce(const SparseBinaryMatrix& m) { return twist_reduce(SparseBinaryMatrix(m)); }

ReducedMatrix twist_reduce(SparseBinaryMatrix&& m) {
  std::vector<int> order;
  for (int d = m.max_dim(); d >= 1; --d) order.push_back(d);
  return reduce_with_clearing(std::move(m), order);
}

ReducedMatrix cotwist_reduce(const SparseBinaryMatrix& m) { return cotwist_reduce(SparseBinaryMatrix(m)); }

ReducedMatrix cotwist_reduce(SparseBinaryMatrix&& m) {
  // Top-dimensional simplices have no cofacets, so dims 0..d-1 suffice.
  std::vector<int> order;
  for (int d = 0; d < m.max_dim(); ++d) order.push_back(d);
  return reduce_with_clearing(std::move(m), order);
}

bool is_reduced(const ReducedMatrix& rm) {
  const std::size_t n = rm.matrix.size();
  if (rm.pivots.size() != n) return false;
  std::vector<Index> owner(n, kNoIndex);
  for (std::size_t j = 0; j < n; ++j) {
    auto l = low(rm.matrix.column(j));
    if (!l) continue;
    if (owner[*l] != kNoIndex) return false;
    owner[*l] = static_cast<Index>(j);
  }
  for (std::size_t r = 0; r < n; ++r)
    if (owner[r] != rm.pivots[static_cast<Index>(r)]) return false;
  return true;
}

}  // namespace dtwist
