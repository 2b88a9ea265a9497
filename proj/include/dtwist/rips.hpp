#pragma once

#include <cstdint>
#include <vector>

#include "dtwist/filtration.hpp"

namespace dtwist {

class PointCloud {
 public:
  PointCloud() = default;
  // Throws InvariantError on mismatched lengths, zero dimension or
  // non-finite coordinates.
  explicit PointCloud(std::vector<std::vector<double>> points);

  std::size_t size() const { return points_.size(); }
  std::size_t ambient_dim() const { return points_.empty() ? 0 : points_.front().size(); }
  const std::vector<double>& operator[](std::size_t i) const { return points_[i]; }
  const std::vector<std::vector<double>>& points() const { return points_; }

 private:
  std::vector<std::vector<double>> points_;
};

/// Symmetric distance matrix with zero diagonal, stored as the strict lower
/// triangle in row order: d(1,0), d(2,0), d(2,1), d(3,0), ...
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t n) : n_(n), lower_(n * (n ? n - 1 : 0) / 2, 0.0) {}
  // Throws InvariantError unless lower.size() == n(n-1)/2 and entries are
  // finite and non-negative.
  DistanceMatrix(std::size_t n, std::vector<double> lower);

  std::size_t size() const { return n_; }
  double operator()(std::size_t i, std::size_t j) const {
    if (i == j) return 0.0;
    return i > j ? lower_[i * (i - 1) / 2 + j] : lower_[j * (j - 1) / 2 + i];
  }
  void set(std::size_t i, std::size_t j, double d) {
    if (i < j) std::swap(i, j);
    lower_[i * (i - 1) / 2 + j] = d;
  }
  const std::vector<double>& lower() const { return lower_; }

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<double> lower_;
};

DistanceMatrix pairwise_distances(const PointCloud& pc);

/// Vietoris-Rips max_dim-skeleton of the threshold graph, canonically ordered.
/// Each simplex carries its diameter; vertices carry 0.
Filtration build_rips(const DistanceMatrix& dm, double threshold, int max_dim);

/// `count` points on the unit (ambient_dim-1)-sphere. Each point is a vector
/// of standard normals, normalized. Normals come from std::mt19937_64 seeded
/// with `seed`: uniforms are (x >> 11) * 2^-53 mapped to (-1, 1), fed to the
/// Marsaglia polar method, both outputs used in order.
PointCloud sample_sphere(std::size_t count, std::size_t ambient_dim, std::uint64_t seed);

/// Points uniform in the unit cube, same generator as sample_sphere.
PointCloud sample_cube(std::size_t count, std::size_t ambient_dim, std::uint64_t seed);

// Single-threaded reference versions of the parallel kernels above. Output
// must be identical, element for element.
namespace serial {
DistanceMatrix pairwise_distances(const PointCloud& pc);
Filtration build_rips(const DistanceMatrix& dm, double threshold, int max_dim);
}  // namespace serial

}  // namespace dtwist
