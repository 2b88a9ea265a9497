#include "dtwist/matrix.hpp"

#include <algorithm>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>

namespace dtwist {

SparseBinaryMatrix::SparseBinaryMatrix(std::vector<Column> columns, std::vector<int> dims)
    : columns_(std::move(columns)), dims_(std::move(dims)) {
  if (dims_.size() != columns_.size())
    throw InvariantError("matrix has " + std::to_string(columns_.size()) + " columns but " +
                         std::to_string(dims_.size()) + " dims");
}

int SparseBinaryMatrix::max_dim() const {
  int d = 0;
  for (int x : dims_) d = std::max(d, x);
  return d;
}

std::size_t SparseBinaryMatrix::nonzeros() const {
  std::size_t count = 0;
  for (const auto& col : columns_) count += col.size();
  return count;
}

std::size_t SparseBinaryMatrix::memory_bytes() const {
  std::size_t bytes = columns_.capacity() * sizeof(Column) + dims_.capacity() * sizeof(int);
  for (const auto& col : columns_) bytes += col.capacity() * sizeof(Index);
  return bytes;
}

bool SparseBinaryMatrix::well_formed() const {
  const std::size_t n = columns_.size();
  for (const auto& col : columns_) {
    if (!col.empty() && col.back() >= n) return false;
    if (std::adjacent_find(col.begin(), col.end(), [](Index a, Index b) { return a >= b; }) !=
        col.end())
      return false;
  }
  return true;
}

namespace {

void check_capacity(const Filtration& f) {
  if (f.size() >= kNoIndex)
    throw std::length_error("filtration with " + std::to_string(f.size()) +
                            " simplices exceeds 32-bit column indexing");
}

std::vector<int> simplex_dims(const Filtration& f) {
  std::vector<int> dims(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) dims[i] = f.dim(static_cast<Index>(i));
  return dims;
}

std::vector<int> dual_dims(const Filtration& f) {
  const std::size_t n = f.size();
  std::vector<int> dims(n);
  for (std::size_t i = 0; i < n; ++i) dims[n - 1 - i] = f.dim(static_cast<Index>(i));
  return dims;
}

// Sorted ascending vertex adjacency from the edges of f.
std::vector<std::vector<Vertex>> edge_adjacency(const Filtration& f) {
  std::vector<std::vector<Vertex>> adj(f.vertex_count());
  for (const auto& cell : f.cells()) {
    if (cell.simplex.dim() != 1) continue;
    const auto v = cell.simplex.vertices();
    adj[v[0]].push_back(v[1]);
    adj[v[1]].push_back(v[0]);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());
  return adj;
}

Column coboundary_column(const Filtration& f, const PositionIndex& index,
                         const std::vector<std::vector<Vertex>>& adj, Index i) {
  const std::size_t n = f.size();
  const auto verts = f.simplex(i).vertices();
  // Every cofacet adds a vertex adjacent to all vertices of the simplex.
  std::vector<Vertex> common = adj[verts[0]];
  std::vector<Vertex> scratch;
  for (std::size_t k = 1; k < verts.size() && !common.empty(); ++k) {
    scratch.clear();
    std::set_intersection(common.begin(), common.end(), adj[verts[k]].begin(),
                          adj[verts[k]].end(), std::back_inserter(scratch));
    common.swap(scratch);
  }
  Column col;
  col.reserve(common.size());
  for (Vertex w : common) {
    auto coface = f.simplex(i).with_vertex(w);
    if (!coface) continue;
    if (auto j = index.find(*coface)) col.push_back(static_cast<Index>(n - 1 - *j));
  }
  std::sort(col.begin(), col.end());
  return col;
}

}  // namespace

Column boundary_column(const Filtration& f, const PositionIndex& index, Index j) {
  Column col;
  const Simplex& s = f.simplex(j);
  if (s.dim() < 1) return col;
  col.reserve(s.size());
  for (const auto& face : s.facets()) {
    auto i = index.find(face);
    if (!i)
      throw InvariantError("face " + face.to_string() + " of simplex " + s.to_string() +
                           " at index " + std::to_string(j) + " is not in the filtration");
    col.push_back(*i);
  }
  std::sort(col.begin(), col.end());
  return col;
}

SparseBinaryMatrix boundary_matrix(const Filtration& f) {
  return boundary_matrix(f, PositionIndex(f));
}

SparseBinaryMatrix boundary_matrix(const Filtration& f, const PositionIndex& index) {
  check_capacity(f);
  const auto n = static_cast<std::int64_t>(f.size());
  std::vector<Column> columns(f.size());
  // Exceptions may not cross the parallel region; collect the first message.
  std::string error;
#pragma omp parallel for schedule(dynamic, 256)
  for (std::int64_t j = 0; j < n; ++j) {
    try {
      columns[j] = boundary_column(f, index, static_cast<Index>(j));
    } catch (const InvariantError& e) {
#pragma omp critical(dtwist_boundary_error)
      if (error.empty()) error = e.what();
    }
  }
  if (!error.empty()) throw InvariantError(error);
  return SparseBinaryMatrix(std::move(columns), simplex_dims(f));
}

SparseBinaryMatrix coboundary_matrix(const Filtration& f) {
  return coboundary_matrix(f, PositionIndex(f));
}

SparseBinaryMatrix coboundary_matrix(const Filtration& f, const PositionIndex& index) {
  check_capacity(f);
  const auto n = static_cast<std::int64_t>(f.size());
  const auto adj = edge_adjacency(f);
  std::vector<Column> columns(f.size());
#pragma omp parallel for schedule(dynamic, 256)
  for (std::int64_t i = 0; i < n; ++i)
    columns[n - 1 - i] = coboundary_column(f, index, adj, static_cast<Index>(i));
  return SparseBinaryMatrix(std::move(columns), dual_dims(f));
}

SparseBinaryMatrix anti_transpose(const SparseBinaryMatrix& m) {
  const std::size_t n = m.size();
  std::vector<Column> columns(n);
  std::vector<int> dims(n);
  // Visiting input columns right to left emits output rows in ascending order.
  for (std::size_t c = n; c-- > 0;) {
    dims[n - 1 - c] = m.dim(c);
    for (Index r : m.column(c)) columns[n - 1 - r].push_back(static_cast<Index>(n - 1 - c));
  }
  return SparseBinaryMatrix(std::move(columns), std::move(dims));
}

void write_dump(std::ostream& os, const SparseBinaryMatrix& m) {
  for (std::size_t j = 0; j < m.size(); ++j) {
    os << j << ':';
    for (Index i : m.column(j)) os << ' ' << i;
    os << '\n';
  }
}

std::string to_dump(const SparseBinaryMatrix& m) {
  std::ostringstream os;
  write_dump(os, m);
  return os.str();
}

SparseBinaryMatrix parse_dump(std::istream& is) {
  std::vector<Column> columns;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto colon = line.find(':');
    auto fail = [&](const std::string& what) {
      return ParseError("dump line " + std::to_string(line_no) + ": " + what);
    };
    if (colon == std::string::npos) throw fail("missing ':'");
    std::size_t j = 0;
    try {
      j = std::stoul(line.substr(0, colon));
    } catch (const std::exception&) {
      throw fail("bad column index");
    }
    if (j != columns.size()) throw fail("columns out of order");
    std::istringstream rest(line.substr(colon + 1));
    Column col;
    long long i;
    while (rest >> i) {
      if (i < 0) throw fail("negative row index");
      col.push_back(static_cast<Index>(i));
    }
    if (!rest.eof()) throw fail("bad row index");
    columns.push_back(std::move(col));
  }
  std::vector<int> dims(columns.size(), 0);
  SparseBinaryMatrix m(std::move(columns), std::move(dims));
  if (!m.well_formed()) throw ParseError("dump columns must be ascending and in range");
  return m;
}

namespace serial {

SparseBinaryMatrix boundary_matrix(const Filtration& f, const PositionIndex& index) {
  check_capacity(f);
  std::vector<Column> columns(f.size());
  for (std::size_t j = 0; j < f.size(); ++j)
    columns[j] = boundary_column(f, index, static_cast<Index>(j));
  return SparseBinaryMatrix(std::move(columns), simplex_dims(f));
}

SparseBinaryMatrix coboundary_matrix(const Filtration& f, const PositionIndex& index) {
  check_capacity(f);
  const std::size_t n = f.size();
  const auto adj = edge_adjacency(f);
  std::vector<Column> columns(n);
  for (std::size_t i = 0; i < n; ++i)
    columns[n - 1 - i] = coboundary_column(f, index, adj, static_cast<Index>(i));
  return SparseBinaryMatrix(std::move(columns), dual_dims(f));
}

}  // namespace serial

}  // namespace dtwist
