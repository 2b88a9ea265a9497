#include <doctest.h>

#include <random>
#include <set>

#include "dtwist/verify.hpp"
#include "fixtures.hpp"

using namespace dtwist;

TEST_CASE("dense_z2_rank") {
  CHECK(dense_z2_rank({}) == 0);
  CHECK(dense_z2_rank({{true, false}, {false, true}}) == 2);
  CHECK(dense_z2_rank({{true, true}, {true, true}}) == 1);
  // Rows of a triangle boundary: e01, e02, e12 are dependent over Z2.
  CHECK(dense_z2_rank({{true, true, false}, {true, false, true}, {false, true, true}}) == 2);
}

TEST_CASE("dense_z2_rank matches brute-force span size") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 6;
    std::vector<std::vector<bool>> m(rows, std::vector<bool>(cols));
    for (auto& r : m)
      for (std::size_t c = 0; c < cols; ++c) r[c] = rng() & 1;
    // |span| = 2^rank.
    std::set<std::vector<bool>> span;
    for (std::uint32_t mask = 0; mask < (1u << rows); ++mask) {
      std::vector<bool> v(cols, false);
      for (std::size_t k = 0; k < rows; ++k)
        if (mask >> k & 1)
          for (std::size_t c = 0; c < cols; ++c) v[c] = v[c] != m[k][c];
      span.insert(v);
    }
    CHECK((std::size_t{1} << dense_z2_rank(m)) == span.size());
  }
}

TEST_CASE("betti_dense on small complexes") {
  CHECK(betti_dense(testing::triangle_filtration(), 7) == std::vector<int>{1, 0, 0});
  CHECK(betti_dense(testing::triangle_filtration(), 6) == std::vector<int>{1, 1, 0});
  CHECK(betti_dense(testing::triangle_filtration(), 3) == std::vector<int>{3, 0, 0});
  CHECK(betti_dense(testing::circle_filtration(), 6) == std::vector<int>{1, 1});
}

TEST_CASE("run_verify passes on valid inputs") {
  const auto report = run_verify(testing::triangle_filtration());
  CHECK(report.all_passed());
  CHECK(report.checks.size() == 8);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    CAPTURE(seed);
    CHECK(run_verify(testing::random_rips(seed).filtration).all_passed());
  }
}

TEST_CASE("run_verify catches a corrupted double-twist matrix") {
  VerifyOptions options;
  options.tamper = [](ReducedMatrix& rm) { rm.matrix.set_column(6, {3, 5}); };
  const auto report = run_verify(testing::triangle_filtration(), options);
  CHECK_FALSE(report.all_passed());
  bool saving_failed = false;
  for (const auto& c : report.checks)
    if (c.name == "saving_works") saving_failed = !c.passed;
  CHECK(saving_failed);
}

TEST_CASE("run_verify reports an invalid filtration") {
  const auto report = run_verify(Filtration({{{0, 1}, 0.0}, {{0}, 0.0}, {{1}, 0.0}}));
  REQUIRE(report.checks.size() == 1);
  CHECK_FALSE(report.checks[0].passed);
}

TEST_CASE("check_representatives rejects bad chains") {
  const auto f = testing::triangle_filtration();
  const auto b = boundary_matrix(f);
  PersistencePair p{5, 6, 1, 1.0, 1.0};
  CHECK(check_representatives(f, b, {{p, {3, 4, 5}}}).empty());
  CHECK_FALSE(check_representatives(f, b, {{p, {3, 5}}}).empty());      // not a cycle
  CHECK_FALSE(check_representatives(f, b, {{p, {3, 4}}}).empty());      // max != birth
  CHECK_FALSE(check_representatives(f, b, {{p, {0, 3, 4, 5}}}).empty());  // mixed dims
}
