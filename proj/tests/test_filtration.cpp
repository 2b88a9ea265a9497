#include <doctest.h>

#include <random>

#include "dtwist/filtration.hpp"
#include "fixtures.hpp"

using namespace dtwist;

TEST_CASE("simplex basics") {
  Simplex s{0, 2, 5};
  CHECK(s.dim() == 2);
  CHECK(s.well_formed());
  CHECK_FALSE(Simplex({2, 1}).well_formed());
  CHECK_FALSE(Simplex({1, 1}).well_formed());
  CHECK_FALSE(Simplex().well_formed());

  const auto faces = s.facets();
  REQUIRE(faces.size() == 3);
  CHECK(faces[0] == Simplex{2, 5});
  CHECK(faces[1] == Simplex{0, 5});
  CHECK(faces[2] == Simplex{0, 2});
  CHECK(Simplex{4}.facets().empty());

  CHECK(*s.with_vertex(3) == Simplex{0, 2, 3, 5});
  CHECK_FALSE(s.with_vertex(2).has_value());
}

TEST_CASE("validate_filtration accepts the minimal edge filtration") {
  Filtration f({{{0}, 0.0}, {{1}, 0.0}, {{0, 1}, 0.0}});
  CHECK_FALSE(validate_filtration(f).has_value());
  CHECK_FALSE(validate_filtration(Filtration()).has_value());
}

TEST_CASE("validate_filtration reports the first violation") {
  SUBCASE("face after coface") {
    Filtration f({{{0, 1}, 0.0}, {{0}, 0.0}, {{1}, 0.0}});
    auto v = validate_filtration(f);
    REQUIRE(v);
    CHECK(v->kind == ViolationKind::kFaceAfterCoface);
    CHECK(v->index == 0);
    CHECK(v->message == "face after coface at index 0");
  }
  SUBCASE("value decrease") {
    Filtration f({{{0}, 0.0}, {{1}, 0.5}, {{2}, 0.3}});
    auto v = validate_filtration(f);
    REQUIRE(v);
    CHECK(v->kind == ViolationKind::kValueDecrease);
    CHECK(v->message == "value decrease at index 2");
  }
  SUBCASE("duplicate") {
    Filtration f({{{0}, 0.0}, {{0}, 0.0}});
    auto v = validate_filtration(f);
    REQUIRE(v);
    CHECK(v->kind == ViolationKind::kDuplicateSimplex);
    CHECK(v->index == 1);
  }
  SUBCASE("dimension above max_dim") {
    Filtration f({{{0}, 0.0}, {{1}, 0.0}, {{0, 1}, 0.0}}, 0);
    auto v = validate_filtration(f);
    REQUIRE(v);
    CHECK(v->kind == ViolationKind::kDimensionTooLarge);
    CHECK(v->index == 2);
  }
  SUBCASE("unsorted vertices") {
    Filtration f({{{0}, 0.0}, {{1}, 0.0}, {Simplex({1, 0}), 0.0}});
    auto v = validate_filtration(f);
    REQUIRE(v);
    CHECK(v->kind == ViolationKind::kMalformedSimplex);
  }
}

// Checks face order directly: every facet of cell i sits at some j < i.
static bool faces_precede(const std::vector<Cell>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i)
    for (const auto& face : cells[i].simplex.facets()) {
      bool found = false;
      for (std::size_t j = 0; j < i && !found; ++j) found = cells[j].simplex == face;
      if (!found) return false;
    }
  return true;
}

TEST_CASE("validate_filtration on random permutations agrees with a direct face-order scan") {
  // All values equal, so only face order can be violated.
  std::vector<Cell> cells;
  const auto triangle = testing::triangle_filtration();
  for (const auto& c : triangle.cells()) cells.push_back({c.simplex, 0.0});
  cells.push_back({{3}, 0.0});
  cells.push_back({{0, 3}, 0.0});
  std::mt19937_64 rng(7);
  int accepted = 0, rejected = 0;
  for (int trial = 0; trial < 500; ++trial) {
    std::shuffle(cells.begin(), cells.end(), rng);
    const bool valid = !validate_filtration(Filtration(cells)).has_value();
    CHECK(valid == faces_precede(cells));
    (valid ? accepted : rejected)++;
  }
  CHECK(accepted > 0);
  CHECK(rejected > 0);
}

TEST_CASE("position_index") {
  const auto f = testing::triangle_filtration();
  const auto index = position_index(f);
  CHECK(index.size() == 7);
  for (std::size_t i = 0; i < f.size(); ++i) CHECK(*index.find(f.simplex(i)) == i);
  for (const auto& cell : f.cells())
    for (const auto& face : cell.simplex.facets()) CHECK(index.find(face).has_value());
  CHECK_FALSE(index.find(Simplex{0, 3}).has_value());
  CHECK(position_index(Filtration()).size() == 0);
  CHECK_THROWS_AS(position_index(Filtration({{{0}, 0.0}, {{0}, 0.0}})), InvariantError);
}

TEST_CASE("canonical order breaks ties by dimension then vertices") {
  Cell edge{{0, 1}, 1.0}, tri{{0, 1, 2}, 1.0}, edge2{{0, 2}, 1.0}, vert{{5}, 0.0};
  CHECK(canonical_less(edge, tri));
  CHECK(canonical_less(edge, edge2));
  CHECK(canonical_less(vert, edge));
  CHECK_FALSE(canonical_less(tri, edge));
}
