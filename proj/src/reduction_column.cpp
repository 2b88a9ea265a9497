#include "dtwist/reduction_column.hpp"

#include <algorithm>
#include <bit>

namespace dtwist {

ReductionColumn::ReductionColumn(std::size_t capacity) : capacity_(capacity) {
  std::size_t words = std::max<std::size_t>(1, (capacity + 63) / 64);
  levels_.emplace_back(words, 0);
  while (words > 1) {
    words = (words + 63) / 64;
    levels_.emplace_back(words, 0);
  }
}

void ReductionColumn::toggle(Index i) {
  std::size_t pos = i;
  for (auto& level : levels_) {
    std::uint64_t& word = level[pos >> 6];
    const bool was_zero = word == 0;
    word ^= std::uint64_t{1} << (pos & 63);
    if (was_zero == (word == 0)) return;
    pos >>= 6;
  }
}

Index ReductionColumn::max_index() const {
  const std::uint64_t top = levels_.back()[0];
  if (top == 0) return kNoIndex;
  std::size_t pos = 63 - std::countl_zero(top);
  for (std::size_t k = levels_.size() - 1; k-- > 0;)
    pos = (pos << 6) + (63 - std::countl_zero(levels_[k][pos]));
  return static_cast<Index>(pos);
}

void ReductionColumn::drain(std::vector<Index>& out) {
  out.clear();
  for (Index i = max_index(); i != kNoIndex; i = max_index()) {
    out.push_back(i);
    toggle(i);
  }
  std::reverse(out.begin(), out.end());
}

}  // namespace dtwist
