#include "dtwist/rips.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace dtwist {

PointCloud::PointCloud(std::vector<std::vector<double>> points) : points_(std::move(points)) {
  if (points_.empty()) return;
  const std::size_t dim = points_.front().size();
  if (dim == 0) throw InvariantError("point cloud has zero-dimensional points");
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (points_[i].size() != dim)
      throw InvariantError("point " + std::to_string(i) + " has " +
                           std::to_string(points_[i].size()) + " coordinates, expected " +
                           std::to_string(dim));
    for (double x : points_[i])
      if (!std::isfinite(x))
        throw InvariantError("point " + std::to_string(i) + " has a non-finite coordinate");
  }
}

DistanceMatrix::DistanceMatrix(std::size_t n, std::vector<double> lower)
    : n_(n), lower_(std::move(lower)) {
  if (lower_.size() != n * (n ? n - 1 : 0) / 2)
    throw InvariantError("lower-triangular distance data has " + std::to_string(lower_.size()) +
                         " entries, expected " + std::to_string(n * (n ? n - 1 : 0) / 2));
  for (double d : lower_)
    if (!(d >= 0.0) || !std::isfinite(d))
      throw InvariantError("distance entries must be finite and non-negative");
}

namespace {

double euclidean(const std::vector<double>& a, const std::vector<double>& b) {
  double sum = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double diff = a[k] - b[k];
    sum += diff * diff;
  }
  return std::sqrt(sum);
}

void check_rips_args(double threshold, int max_dim) {
  if (!(threshold >= 0.0)) throw InvariantError("threshold must be >= 0");
  if (max_dim < 0) throw InvariantError("max_dim must be >= 0");
}

// up[v] = ascending neighbors w > v with d(v, w) <= threshold.
std::vector<Vertex> upper_neighbors(const DistanceMatrix& dm, double threshold, std::size_t v) {
  std::vector<Vertex> out;
  for (std::size_t w = v + 1; w < dm.size(); ++w)
    if (dm(v, w) <= threshold) out.push_back(static_cast<Vertex>(w));
  return out;
}

struct CliqueExpander {
  const DistanceMatrix& dm;
  const std::vector<std::vector<Vertex>>& up;
  int max_dim;

  void expand(std::vector<Vertex>& verts, double diam, const std::vector<Vertex>& cands,
              std::vector<Cell>& out) const {
    out.push_back(Cell{Simplex(verts), diam});
    if (static_cast<int>(verts.size()) - 1 >= max_dim) return;
    std::vector<Vertex> next;
    for (Vertex w : cands) {
      double d = diam;
      for (Vertex u : verts) d = std::max(d, dm(u, w));
      next.clear();
      std::set_intersection(cands.begin(), cands.end(), up[w].begin(), up[w].end(),
                            std::back_inserter(next));
      verts.push_back(w);
      expand(verts, d, next, out);
      verts.pop_back();
    }
  }

  std::vector<Cell> from_vertex(Vertex v) const {
    std::vector<Cell> out;
    std::vector<Vertex> verts{v};
    expand(verts, 0.0, up[v], out);
    return out;
  }
};

Filtration assemble(std::vector<std::vector<Cell>>& per_vertex, int max_dim) {
  std::size_t total = 0;
  for (const auto& part : per_vertex) total += part.size();
  std::vector<Cell> cells;
  cells.reserve(total);
  for (auto& part : per_vertex) {
    std::move(part.begin(), part.end(), std::back_inserter(cells));
    std::vector<Cell>().swap(part);
  }
  std::sort(cells.begin(), cells.end(), canonical_less);
  return Filtration(std::move(cells), max_dim);
}

}  // namespace

DistanceMatrix pairwise_distances(const PointCloud& pc) {
  const std::size_t n = pc.size();
  DistanceMatrix dm(n);
  const auto rows = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 1; i < rows; ++i)
    for (std::int64_t j = 0; j < i; ++j) dm.set(i, j, euclidean(pc[i], pc[j]));
  return dm;
}

Filtration build_rips(const DistanceMatrix& dm, double threshold, int max_dim) {
  check_rips_args(threshold, max_dim);
  const std::size_t n = dm.size();
  const auto count = static_cast<std::int64_t>(n);
  std::vector<std::vector<Vertex>> up(n);
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t v = 0; v < count; ++v) up[v] = upper_neighbors(dm, threshold, v);

  const CliqueExpander expander{dm, up, max_dim};
  std::vector<std::vector<Cell>> per_vertex(n);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t v = 0; v < count; ++v) per_vertex[v] = expander.from_vertex(static_cast<Vertex>(v));
  return assemble(per_vertex, max_dim);
}

namespace serial {

DistanceMatrix pairwise_distances(const PointCloud& pc) {
  DistanceMatrix dm(pc.size());
  for (std::size_t i = 1; i < pc.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) dm.set(i, j, euclidean(pc[i], pc[j]));
  return dm;
}

Filtration build_rips(const DistanceMatrix& dm, double threshold, int max_dim) {
  check_rips_args(threshold, max_dim);
  const std::size_t n = dm.size();
  std::vector<std::vector<Vertex>> up(n);
  for (std::size_t v = 0; v < n; ++v) up[v] = upper_neighbors(dm, threshold, v);
  const CliqueExpander expander{dm, up, max_dim};
  std::vector<std::vector<Cell>> per_vertex(n);
  for (std::size_t v = 0; v < n; ++v) per_vertex[v] = expander.from_vertex(static_cast<Vertex>(v));
  return assemble(per_vertex, max_dim);
}

}  // namespace serial

namespace {

class PortableNormal {
 public:
  explicit PortableNormal(std::uint64_t seed) : engine_(seed) {}

  // Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double operator()() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u, v, s;
    do {
      u = 2.0 * uniform() - 1.0;
      v = 2.0 * uniform() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double m = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * m;
    has_spare_ = true;
    return u * m;
  }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace

PointCloud sample_sphere(std::size_t count, std::size_t ambient_dim, std::uint64_t seed) {
  if (count < 1) throw InvariantError("sphere sample needs count >= 1");
  if (ambient_dim < 2) throw InvariantError("sphere sample needs ambient_dim >= 2");
  PortableNormal normal(seed);
  std::vector<std::vector<double>> points(count, std::vector<double>(ambient_dim));
  for (auto& p : points) {
    double norm = 0.0;
    while (norm == 0.0) {
      double sq = 0.0;
      for (double& x : p) {
        x = normal();
        sq += x * x;
      }
      norm = std::sqrt(sq);
    }
    for (double& x : p) x /= norm;
  }
  return PointCloud(std::move(points));
}

PointCloud sample_cube(std::size_t count, std::size_t ambient_dim, std::uint64_t seed) {
  if (ambient_dim < 1) throw InvariantError("cube sample needs ambient_dim >= 1");
  PortableNormal gen(seed);
  std::vector<std::vector<double>> points(count, std::vector<double>(ambient_dim));
  for (auto& p : points)
    for (double& x : p) x = gen.uniform();
  return PointCloud(std::move(points));
}

}  // namespace dtwist
