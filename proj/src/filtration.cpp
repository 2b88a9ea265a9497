#include "dtwist/filtration.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace dtwist {

bool Simplex::well_formed() const {
  if (vertices_.empty()) return false;
  return std::adjacent_find(vertices_.begin(), vertices_.end(),
                            [](Vertex a, Vertex b) { return a >= b; }) == vertices_.end();
}

std::vector<Simplex> Simplex::facets() const {
  std::vector<Simplex> out;
  if (vertices_.size() < 2) return out;
  out.reserve(vertices_.size());
  for (std::size_t k = 0; k < vertices_.size(); ++k) {
    std::vector<Vertex> face;
    face.reserve(vertices_.size() - 1);
    for (std::size_t m = 0; m < vertices_.size(); ++m)
      if (m != k) face.push_back(vertices_[m]);
    out.emplace_back(std::move(face));
  }
  return out;
}

std::optional<Simplex> Simplex::with_vertex(Vertex v) const {
  auto pos = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (pos != vertices_.end() && *pos == v) return std::nullopt;
  std::vector<Vertex> out;
  out.reserve(vertices_.size() + 1);
  out.insert(out.end(), vertices_.begin(), pos);
  out.push_back(v);
  out.insert(out.end(), pos, vertices_.end());
  return Simplex(std::move(out));
}

std::string Simplex::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t k = 0; k < vertices_.size(); ++k) os << (k ? "," : "") << vertices_[k];
  os << ']';
  return os.str();
}

std::size_t SimplexHash::operator()(const Simplex& s) const noexcept {
  // 64-bit FNV-1a over the vertex ids.
  std::uint64_t h = 1469598103934665603ULL;
  for (Vertex v : s.vertices()) {
    h ^= v;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h ^ (h >> 29));
}

bool canonical_less(const Cell& a, const Cell& b) {
  if (a.value != b.value) return a.value < b.value;
  if (a.simplex.dim() != b.simplex.dim()) return a.simplex.dim() < b.simplex.dim();
  return a.simplex < b.simplex;
}

Filtration::Filtration(std::vector<Cell> cells, int max_dim) : cells_(std::move(cells)) {
  if (max_dim >= 0) {
    max_dim_ = max_dim;
  } else {
    max_dim_ = 0;
    for (const auto& c : cells_) max_dim_ = std::max(max_dim_, c.simplex.dim());
  }
}

std::size_t Filtration::vertex_count() const {
  std::size_t count = 0;
  for (const auto& c : cells_)
    for (Vertex v : c.simplex.vertices()) count = std::max<std::size_t>(count, std::size_t{v} + 1);
  return count;
}

std::optional<Violation> validate_filtration(const Filtration& f) {
  std::unordered_set<Simplex, SimplexHash> seen;
  seen.reserve(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    const Cell& cell = f[i];
    auto report = [&](ViolationKind kind, const std::string& what) {
      return Violation{kind, i, what + " at index " + std::to_string(i)};
    };
    if (!cell.simplex.well_formed())
      return report(ViolationKind::kMalformedSimplex, "malformed simplex");
    if (cell.simplex.dim() > f.max_dim())
      return report(ViolationKind::kDimensionTooLarge, "dimension exceeds max_dim");
    if (seen.contains(cell.simplex))
      return report(ViolationKind::kDuplicateSimplex, "duplicate simplex");
    // Facets suffice: each facet was itself checked against its own facets.
    for (const auto& face : cell.simplex.facets())
      if (!seen.contains(face)) return report(ViolationKind::kFaceAfterCoface, "face after coface");
    if (i > 0 && cell.value < f[i - 1].value)
      return report(ViolationKind::kValueDecrease, "value decrease");
    seen.insert(cell.simplex);
  }
  return std::nullopt;
}

PositionIndex::PositionIndex(const Filtration& f) {
  map_.reserve(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    auto [it, inserted] = map_.emplace(f.simplex(static_cast<Index>(i)), static_cast<Index>(i));
    if (!inserted)
      throw InvariantError("duplicate simplex " + it->first.to_string() + " at index " +
                           std::to_string(i));
  }
}

std::optional<Index> PositionIndex::find(const Simplex& s) const {
  auto it = map_.find(s);
  if (it == map_.end()) return std::nullopt;
  return it->second;
}

PositionIndex position_index(const Filtration& f) { return PositionIndex(f); }

}  // namespace dtwist
