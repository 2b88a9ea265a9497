#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dtwist/types.hpp"

namespace dtwist {

/// Working column for reductions: a parity set over [0, capacity) kept as a
/// hierarchy of 64-bit words. Bit b of a word at level k+1 is set iff word b
/// of level k is nonzero, so the maximum is found by descending from the
/// single top word. Allocate once per reduction run; drain() leaves it
/// empty and ready for the next column.
class ReductionColumn {
 public:
  explicit ReductionColumn(std::size_t capacity);

  std::size_t capacity() const { return capacity_; }
  bool empty() const { return levels_.back()[0] == 0; }

  void toggle(Index i);
  void add(std::span<const Index> entries) {
    for (Index i : entries) toggle(i);
  }

  // Largest present index, kNoIndex when empty.
  Index max_index() const;

  // Moves the contents out in ascending order; the column is empty after.
  void drain(std::vector<Index>& out);
  std::vector<Index> drain() {
    std::vector<Index> out;
    drain(out);
    return out;
  }

 private:
  std::size_t capacity_;
  std::vector<std::vector<std::uint64_t>> levels_;  // [0] = leaves
};

}  // namespace dtwist
