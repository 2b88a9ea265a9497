#pragma once

// Shared test inputs and brute-force oracles. Nothing here calls the
// reduction code.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <vector>

#include "dtwist/filtration.hpp"
#include "dtwist/rips.hpp"

namespace dtwist::testing {

// v0 v1 v2 e01 e02 e12 t: vertices at 0, edges and triangle at 1.
inline Filtration triangle_filtration() {
  return Filtration({{{0}, 0.0}, {{1}, 0.0}, {{2}, 0.0},
                     {{0, 1}, 1.0}, {{0, 2}, 1.0}, {{1, 2}, 1.0},
                     {{0, 1, 2}, 1.0}});
}

// Hollow triangle: the three edges and no 2-simplex.
inline Filtration circle_filtration() {
  return Filtration({{{0}, 0.0}, {{1}, 0.0}, {{2}, 0.0},
                     {{0, 1}, 1.0}, {{0, 2}, 1.0}, {{1, 2}, 1.0}});
}

inline Filtration vertices_only(std::size_t n) {
  std::vector<Cell> cells;
  for (std::size_t v = 0; v < n; ++v) cells.push_back({Simplex{static_cast<Vertex>(v)}, 0.0});
  return Filtration(std::move(cells));
}

struct RandomRips {
  std::size_t points;
  std::size_t ambient_dim;
  int max_dim;
  double threshold;
  DistanceMatrix distances;
  Filtration filtration;
};

// Points uniform in a cube of random dimension, random threshold between
// 0 and the largest pairwise distance.
inline RandomRips random_rips(std::uint64_t seed, std::size_t min_points = 5,
                              std::size_t max_points = 12, int min_dim = 1, int max_dim = 3) {
  std::mt19937_64 rng(seed);
  auto pick = [&](std::uint64_t lo, std::uint64_t hi) { return lo + rng() % (hi - lo + 1); };
  RandomRips r;
  r.points = pick(min_points, max_points);
  r.ambient_dim = pick(3, 10);
  r.max_dim = static_cast<int>(pick(min_dim, max_dim));
  r.distances = pairwise_distances(sample_cube(r.points, r.ambient_dim, rng()));
  double top = 0;
  for (double d : r.distances.lower()) top = std::max(top, d);
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  r.threshold = top * u * 1.05;
  r.filtration = build_rips(r.distances, r.threshold, r.max_dim);
  return r;
}

// Simplex counts per dimension by testing every vertex subset.
inline std::vector<std::size_t> brute_force_clique_counts(const DistanceMatrix& dm, double threshold,
                                                          int max_dim) {
  const std::size_t n = dm.size();
  std::vector<std::size_t> counts(max_dim + 1, 0);
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    const int size = std::popcount(mask);
    if (size > max_dim + 1) continue;
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a)
      for (std::size_t b = a + 1; b < n && ok; ++b)
        if ((mask >> a & 1) && (mask >> b & 1) && dm(a, b) > threshold) ok = false;
    if (ok) ++counts[size - 1];
  }
  return counts;
}

}  // namespace dtwist::testing
