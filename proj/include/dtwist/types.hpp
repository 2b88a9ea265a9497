#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace dtwist {

using Vertex = std::uint32_t;
using Index = std::uint32_t;  // filtration / column index
using Value = double;         // filtration scale

inline constexpr Index kNoIndex = std::numeric_limits<Index>::max();
inline constexpr Value kInfinity = std::numeric_limits<Value>::infinity();

// Malformed input text (point clouds, distance matrices, dumps).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A structural invariant of a filtration or matrix does not hold.
class InvariantError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dtwist
