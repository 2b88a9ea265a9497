#include <doctest.h>
#include <json.hpp>

#include <sstream>

#include "dtwist/io.hpp"
#include "fixtures.hpp"

using namespace dtwist;

TEST_CASE("point cloud parsing") {
  std::istringstream in("# comment\n0 0\n\n3,4\n  1.5 , -2e-1\n");
  const auto pc = parse_point_cloud(in);
  REQUIRE(pc.size() == 3);
  CHECK(pc[1] == std::vector<double>{3, 4});
  CHECK(pc[2] == std::vector<double>{1.5, -0.2});

  std::istringstream ragged("0 0\n1 2 3\n");
  CHECK_THROWS_AS(parse_point_cloud(ragged), ParseError);
  std::istringstream junk("0 x\n");
  CHECK_THROWS_AS(parse_point_cloud(junk), ParseError);
  std::istringstream empty("# nothing\n");
  CHECK(parse_point_cloud(empty).size() == 0);
}

TEST_CASE("lower distance matrix parsing") {
  std::istringstream in("# 3 points\n1\n2, 3\n");
  const auto dm = parse_lower_distance_matrix(in);
  REQUIRE(dm.size() == 3);
  CHECK(dm(1, 0) == 1);
  CHECK(dm(2, 0) == 2);
  CHECK(dm(2, 1) == 3);
  CHECK(dm(0, 2) == 2);

  std::istringstream bad("1\n2\n");
  CHECK_THROWS_AS(parse_lower_distance_matrix(bad), ParseError);
  std::istringstream negative("-1\n");
  CHECK_THROWS_AS(parse_lower_distance_matrix(negative), ParseError);
  CHECK_THROWS_AS(read_lower_distance_matrix("/nonexistent/file"), ParseError);
}

TEST_CASE("diagram JSON schema") {
  const auto f = testing::triangle_filtration();
  Diagram d;
  d.dims = 2;
  d.points.push_back({PersistencePair{5, 6, 1, 1.0, 1.0}, std::vector<Index>{3, 4, 5}});
  d.points.push_back({PersistencePair{1, 3, 0, 0.0, 1.0}, std::nullopt});
  d.essentials.push_back(EssentialClass{0, 0, 0.0});

  const auto doc = nlohmann::json::parse(diagram_to_json(d, f, true));
  CHECK(doc["dims"] == 2);
  REQUIRE(doc["pairs"].size() == 2);
  const auto& p = doc["pairs"][0];
  CHECK(p["dim"] == 1);
  CHECK(p["birth_index"] == 5);
  CHECK(p["death_index"] == 6);
  CHECK(p["birth"] == 1.0);
  CHECK(p["death"] == 1.0);
  CHECK(p["representative"] == nlohmann::json::parse("[[0,1],[0,2],[1,2]]"));
  CHECK(doc["pairs"][1]["representative"].is_null());
  CHECK(doc["essentials"][0] == nlohmann::json::parse(R"({"dim":0,"birth_index":0,"birth":0.0})"));

  const auto without = nlohmann::json::parse(diagram_to_json(d, f, false));
  CHECK(without["pairs"][0]["representative"].is_null());
}
