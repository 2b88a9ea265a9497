#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dtwist/filtration.hpp"

namespace dtwist {

using Column = std::vector<Index>;

/// Square n x n matrix over Z2, stored column-major as ascending row lists.
/// dim(j) is the dimension of the simplex behind column j, always in
/// original (boundary-side) terms, also for coboundary matrices.
class SparseBinaryMatrix {
 public:
  SparseBinaryMatrix() = default;
  explicit SparseBinaryMatrix(std::size_t n) : columns_(n), dims_(n, 0) {}
  SparseBinaryMatrix(std::vector<Column> columns, std::vector<int> dims);

  std::size_t size() const { return columns_.size(); }

  std::span<const Index> column(std::size_t j) const { return columns_[j]; }
  bool column_empty(std::size_t j) const { return columns_[j].empty(); }
  void set_column(std::size_t j, Column col) { columns_[j] = std::move(col); }
  // Releases the column's storage, not just its contents.
  void clear_column(std::size_t j) { Column().swap(columns_[j]); }
  Column& mutable_column(std::size_t j) { return columns_[j]; }

  int dim(std::size_t j) const { return dims_[j]; }
  const std::vector<int>& dims() const { return dims_; }
  void set_dim(std::size_t j, int d) { dims_[j] = d; }
  int max_dim() const;

  std::size_t nonzeros() const;
  std::size_t memory_bytes() const;

  // Strictly ascending columns with entries < n.
  bool well_formed() const;

  friend bool operator==(const SparseBinaryMatrix&, const SparseBinaryMatrix&) = default;

 private:
  std::vector<Column> columns_;
  std::vector<int> dims_;
};

/// Lowest one: largest row index of the column, nullopt for the zero column.
inline std::optional<Index> low(std::span<const Index> col) {
  if (col.empty()) return std::nullopt;
  return col.back();
}

/// Filtration indices of the facets of simplex j, ascending. Throws
/// InvariantError when a facet is missing from the index.
Column boundary_column(const Filtration& f, const PositionIndex& index, Index j);

SparseBinaryMatrix boundary_matrix(const Filtration& f);
SparseBinaryMatrix boundary_matrix(const Filtration& f, const PositionIndex& index);

/// Coboundary generated from cofacets: column i* = n-1-i lists the dual
/// indices n-1-j of the cofacets j of simplex i, ascending.
SparseBinaryMatrix coboundary_matrix(const Filtration& f);
SparseBinaryMatrix coboundary_matrix(const Filtration& f, const PositionIndex& index);

/// out(i*, j*) = in(n-1-j*, n-1-i*); dims follow their columns.
SparseBinaryMatrix anti_transpose(const SparseBinaryMatrix& m);

// Debug dump: one line per column, "j: i1 i2 ..." ascending.
void write_dump(std::ostream& os, const SparseBinaryMatrix& m);
std::string to_dump(const SparseBinaryMatrix& m);
// Dims are not part of the dump and come back as 0. Throws ParseError.
SparseBinaryMatrix parse_dump(std::istream& is);

namespace serial {
SparseBinaryMatrix boundary_matrix(const Filtration& f, const PositionIndex& index);
SparseBinaryMatrix coboundary_matrix(const Filtration& f, const PositionIndex& index);
}  // namespace serial

}  // namespace dtwist
