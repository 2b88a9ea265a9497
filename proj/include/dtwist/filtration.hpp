#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "dtwist/types.hpp"

namespace dtwist {

/// A simplex given by its strictly ascending vertex ids.
class Simplex {
 public:
  Simplex() = default;
  explicit Simplex(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {}
  Simplex(std::initializer_list<Vertex> vertices) : vertices_(vertices) {}

  std::span<const Vertex> vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  int dim() const { return static_cast<int>(vertices_.size()) - 1; }

  // True when the vertex list is non-empty and strictly ascending.
  bool well_formed() const;

  // The dim()+1 codimension-one faces; face k drops vertex k.
  std::vector<Simplex> facets() const;

  // Returns this simplex with `v` inserted, or nullopt if already present.
  std::optional<Simplex> with_vertex(Vertex v) const;

  std::string to_string() const;

  friend bool operator==(const Simplex&, const Simplex&) = default;
  friend std::strong_ordering operator<=>(const Simplex&, const Simplex&) = default;

 private:
  std::vector<Vertex> vertices_;
};

struct SimplexHash {
  std::size_t operator()(const Simplex& s) const noexcept;
};

struct Cell {
  Simplex simplex;
  Value value = 0;
};

// Total order used for every filtration we build: value, then dimension,
// then lexicographic vertex tuple.
bool canonical_less(const Cell& a, const Cell& b);

/// An ordered sequence of simplices with filtration values. The class does
/// not enforce the filtration invariants itself; use validate_filtration.
class Filtration {
 public:
  Filtration() = default;
  // max_dim < 0 means "the largest simplex dimension present".
  explicit Filtration(std::vector<Cell> cells, int max_dim = -1);

  std::size_t size() const { return cells_.size(); }
  bool empty() const { return cells_.empty(); }
  int max_dim() const { return max_dim_; }

  const Cell& operator[](std::size_t i) const { return cells_[i]; }
  const std::vector<Cell>& cells() const { return cells_; }

  const Simplex& simplex(Index i) const { return cells_[i].simplex; }
  Value value(Index i) const { return cells_[i].value; }
  int dim(Index i) const { return cells_[i].simplex.dim(); }

  // Largest vertex id + 1 (0 when empty).
  std::size_t vertex_count() const;

 private:
  std::vector<Cell> cells_;
  int max_dim_ = 0;
};

enum class ViolationKind {
  kMalformedSimplex,
  kDimensionTooLarge,
  kDuplicateSimplex,
  kFaceAfterCoface,
  kValueDecrease,
};

struct Violation {
  ViolationKind kind;
  std::size_t index;
  std::string message;
};

/// Returns the first violated invariant, scanning in filtration order, or
/// nullopt when the filtration is valid.
std::optional<Violation> validate_filtration(const Filtration& f);

/// Simplex -> filtration index.
class PositionIndex {
 public:
  PositionIndex() = default;
  // Throws InvariantError on a duplicate simplex.
  explicit PositionIndex(const Filtration& f);

  std::optional<Index> find(const Simplex& s) const;
  std::size_t size() const { return map_.size(); }

 private:
  std::unordered_map<Simplex, Index, SimplexHash> map_;
};

PositionIndex position_index(const Filtration& f);

}  // namespace dtwist
