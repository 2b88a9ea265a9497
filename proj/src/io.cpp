#include "dtwist/io.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <json.hpp>

namespace dtwist {

namespace {

// Numbers on one line, split on whitespace and commas.
std::vector<double> parse_numbers(const std::string& line, std::size_t line_no) {
  std::vector<double> out;
  std::size_t pos = 0;
  auto is_sep = [](char c) { return c == ',' || c == ' ' || c == '\t' || c == '\r'; };
  while (pos < line.size()) {
    while (pos < line.size() && is_sep(line[pos])) ++pos;
    if (pos >= line.size()) break;
    std::size_t end = pos;
    while (end < line.size() && !is_sep(line[end])) ++end;
    const std::string token = line.substr(pos, end - pos);
    double value = 0;
    std::size_t used = 0;
    try {
      value = std::stod(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size() || !std::isfinite(value))
      throw ParseError("line " + std::to_string(line_no) + ": bad number '" + token + "'");
    out.push_back(value);
    pos = end;
  }
  return out;
}

template <typename Fn>
void for_each_data_line(std::istream& is, Fn&& fn) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    fn(parse_numbers(line, line_no), line_no);
  }
}

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return in;
}

}  // namespace

PointCloud parse_point_cloud(std::istream& is) {
  std::vector<std::vector<double>> points;
  for_each_data_line(is, [&](std::vector<double> coords, std::size_t line_no) {
    if (!points.empty() && coords.size() != points.front().size())
      throw ParseError("line " + std::to_string(line_no) + ": expected " +
                       std::to_string(points.front().size()) + " coordinates, got " +
                       std::to_string(coords.size()));
    points.push_back(std::move(coords));
  });
  return PointCloud(std::move(points));
}

DistanceMatrix parse_lower_distance_matrix(std::istream& is) {
  std::vector<double> entries;
  for_each_data_line(is, [&](std::vector<double> row, std::size_t line_no) {
    for (double d : row)
      if (d < 0) throw ParseError("line " + std::to_string(line_no) + ": negative distance");
    entries.insert(entries.end(), row.begin(), row.end());
  });
  std::size_t n = 1;
  while (n * (n - 1) / 2 < entries.size()) ++n;
  if (n * (n - 1) / 2 != entries.size())
    throw ParseError(std::to_string(entries.size()) +
                     " distance entries do not form a lower-triangular matrix");
  if (entries.empty()) n = 0;
  return DistanceMatrix(n, std::move(entries));
}

PointCloud read_point_cloud(const std::string& path) {
  auto in = open(path);
  return parse_point_cloud(in);
}

DistanceMatrix read_lower_distance_matrix(const std::string& path) {
  auto in = open(path);
  return parse_lower_distance_matrix(in);
}

std::string diagram_to_json(const Diagram& d, const Filtration& f, bool with_representatives) {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["dims"] = d.dims;
  ordered_json pairs = ordered_json::array();
  for (const auto& point : d.points) {
    ordered_json p;
    p["dim"] = point.pair.dim;
    p["birth_index"] = point.pair.birth_index;
    p["death_index"] = point.pair.death_index;
    p["birth"] = point.pair.birth_value;
    p["death"] = point.pair.death_value;
    if (with_representatives && point.representative) {
      ordered_json chain = ordered_json::array();
      for (Index s : *point.representative) {
        const auto verts = f.simplex(s).vertices();
        chain.push_back(std::vector<Vertex>(verts.begin(), verts.end()));
      }
      p["representative"] = std::move(chain);
    } else {
      p["representative"] = nullptr;
    }
    pairs.push_back(std::move(p));
  }
  doc["pairs"] = std::move(pairs);
  ordered_json essentials = ordered_json::array();
  for (const auto& e : d.essentials) {
    ordered_json x;
    x["dim"] = e.dim;
    x["birth_index"] = e.birth_index;
    x["birth"] = e.birth_value;
    essentials.push_back(std::move(x));
  }
  doc["essentials"] = std::move(essentials);
  return doc.dump(2) + "\n";
}

}  // namespace dtwist
