// Serial reference kernels vs their OpenMP versions, and the three
// reduction strategies, on one synthetic sphere sample.
//
//   bench_kernels [points=400] [ambient_dim=10] [threshold=1.0] [max_dim=2] [seed=1]

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "dtwist/double_twist.hpp"
#include "dtwist/rips.hpp"

using namespace dtwist;

namespace {

template <typename Fn>
double time_best(int runs, Fn&& fn) {
  double best = 1e300;
  for (int r = 0; r < runs; ++r) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
  }
  return best;
}

void report(const char* what, double serial, double parallel) {
  std::printf("%-22s serial %10.6f s   parallel %10.6f s   speedup %5.2fx\n", what, serial,
              parallel, parallel > 0 ? serial / parallel : 0.0);
}

}  // namespace

int main(int argc, char** argv) {
  const std::size_t points = argc > 1 ? std::stoul(argv[1]) : 400;
  const std::size_t ambient = argc > 2 ? std::stoul(argv[2]) : 10;
  const double threshold = argc > 3 ? std::stod(argv[3]) : 1.0;
  const int max_dim = argc > 4 ? std::stoi(argv[4]) : 2;
  const std::uint64_t seed = argc > 5 ? std::stoull(argv[5]) : 1;
  constexpr int kRuns = 3;

  std::printf("threads: %d, points: %zu, ambient dim: %zu, threshold: %g, max dim: %d\n",
              omp_get_max_threads(), points, ambient, threshold, max_dim);
  const PointCloud cloud = sample_sphere(points, ambient, seed);

  DistanceMatrix dm;
  const double dist_serial = time_best(kRuns, [&] { dm = serial::pairwise_distances(cloud); });
  const double dist_parallel = time_best(kRuns, [&] { dm = pairwise_distances(cloud); });
  report("pairwise distances", dist_serial, dist_parallel);

  Filtration f;
  const double rips_serial = time_best(kRuns, [&] { f = serial::build_rips(dm, threshold, max_dim); });
  const double rips_parallel = time_best(kRuns, [&] { f = build_rips(dm, threshold, max_dim); });
  report("rips enumeration", rips_serial, rips_parallel);
  std::printf("simplices: %zu\n", f.size());

  const PositionIndex index(f);
  SparseBinaryMatrix boundary, coboundary;
  report("boundary matrix",
         time_best(kRuns, [&] { boundary = serial::boundary_matrix(f, index); }),
         time_best(kRuns, [&] { boundary = boundary_matrix(f, index); }));
  report("coboundary matrix",
         time_best(kRuns, [&] { coboundary = serial::coboundary_matrix(f, index); }),
         time_best(kRuns, [&] { coboundary = coboundary_matrix(f, index); }));
  std::printf("boundary nonzeros: %zu\n\n", boundary.nonzeros());

  std::printf("%-22s %10.6f s\n", "standard reduce",
              time_best(1, [&] { standard_reduce(boundary); }));
  std::printf("%-22s %10.6f s\n", "twist reduce",
              time_best(kRuns, [&] { twist_reduce(boundary); }));
  std::printf("%-22s %10.6f s\n", "cotwist reduce",
              time_best(kRuns, [&] { cotwist_reduce(coboundary); }));
  std::printf("%-22s %10.6f s\n", "double twist (total)",
              time_best(kRuns, [&] { double_twist(f); }));
  return 0;
}
