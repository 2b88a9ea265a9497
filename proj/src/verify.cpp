#include "dtwist/verify.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <unordered_map>
#include <utility>

namespace dtwist {

bool VerifyReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.passed || c.skipped; });
}

std::string check_construction_duality(const Filtration& f) {
  const PositionIndex index(f);
  const auto direct = coboundary_matrix(f, index);
  const auto flipped = anti_transpose(boundary_matrix(f, index));
  if (direct == flipped) return {};
  for (std::size_t j = 0; j < direct.size(); ++j) {
    if (!std::ranges::equal(direct.column(j), flipped.column(j)))
      return "coboundary column " + std::to_string(j) + " differs from the anti-transpose";
    if (direct.dim(j) != flipped.dim(j))
      return "dimension of coboundary column " + std::to_string(j) + " differs";
  }
  return "coboundary and anti-transposed boundary differ in size";
}

std::string check_saving_works(const ReducedMatrix& double_twisted, const ReducedMatrix& twisted) {
  const auto& a = double_twisted.matrix;
  const auto& b = twisted.matrix;
  if (a.size() != b.size()) return "column counts differ";
  for (std::size_t j = 0; j < a.size(); ++j)
    if (!std::ranges::equal(a.column(j), b.column(j)))
      return "column " + std::to_string(j) + " differs";
  if (!(double_twisted.pivots == twisted.pivots)) return "pivot tables differ";
  if (to_dump(a) != to_dump(b)) return "matrix dumps differ";
  return {};
}

namespace {

std::string describe(const PersistencePair& p) {
  return "(" + std::to_string(p.birth_index) + "," + std::to_string(p.death_index) + ")";
}

std::string compare_pairs(const std::vector<PersistencePair>& expected,
                          const std::vector<PersistencePair>& got, const std::string& route) {
  if (expected.size() != got.size())
    return route + " gives " + std::to_string(got.size()) + " pairs, expected " +
           std::to_string(expected.size());
  for (std::size_t k = 0; k < expected.size(); ++k)
    if (!(expected[k] == got[k]))
      return route + " pair " + describe(got[k]) + " differs from " + describe(expected[k]);
  return {};
}

}  // namespace

std::string check_pair_routes(const Filtration& f, const ReducedMatrix& standard,
                              const ReducedMatrix& twisted, const ReducedMatrix& cotwisted,
                              const ReducedMatrix& double_twisted) {
  const auto reference = pairs_from_boundary(standard, f);
  for (const auto& [route, got] :
       {std::pair{"twist", pairs_from_boundary(twisted, f)},
        std::pair{"cotwist", pairs_from_coboundary(cotwisted, f)},
        std::pair{"double-twist", pairs_from_boundary(double_twisted, f)}}) {
    if (auto msg = compare_pairs(reference, got, route); !msg.empty()) return msg;
  }
  return {};
}

std::string check_representatives(const Filtration& f, const SparseBinaryMatrix& boundary,
                                  const std::vector<Representative>& reps) {
  for (const auto& r : reps) {
    const std::string tag = "representative " + describe(r.pair);
    if (r.chain.empty()) return tag + " is empty";
    if (!std::is_sorted(r.chain.begin(), r.chain.end())) return tag + " is not ascending";
    if (r.chain.back() != r.pair.birth_index) return tag + " has max index != birth index";
    for (Index s : r.chain)
      if (f.dim(s) != r.pair.dim)
        return tag + " contains simplex " + std::to_string(s) + " of the wrong dimension";
    if (!chain_boundary(boundary, r.chain).empty()) return tag + " has nonzero boundary";
  }
  return {};
}

std::string check_matching(const Filtration& f, const std::vector<PersistencePair>& pairs) {
  std::vector<int> role(f.size(), 0);
  for (const auto& p : pairs) {
    if (p.birth_index >= p.death_index) return "pair " + describe(p) + " is not ordered";
    if (f.dim(p.death_index) != f.dim(p.birth_index) + 1)
      return "pair " + describe(p) + " does not span consecutive dimensions";
    if (p.birth_value > p.death_value) return "pair " + describe(p) + " dies before it is born";
    if (role[p.birth_index]++ || role[p.death_index]++)
      return "index reused by pair " + describe(p);
  }
  return {};
}

std::vector<int> betti_from_pairs(const Filtration& f, const std::vector<PersistencePair>& pairs,
                                  const std::vector<EssentialClass>& essentials, std::size_t prefix) {
  std::vector<int> betti(static_cast<std::size_t>(f.max_dim()) + 1, 0);
  for (const auto& p : pairs)
    if (p.birth_index < prefix && p.death_index >= prefix) ++betti[p.dim];
  for (const auto& e : essentials)
    if (e.birth_index < prefix) ++betti[e.dim];
  return betti;
}

std::size_t dense_z2_rank(std::vector<std::vector<bool>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && !rows[pivot][c]) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || !rows[r][c]) continue;
      for (std::size_t k = c; k < cols; ++k) rows[r][k] = rows[r][k] != rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

std::vector<int> betti_dense(const Filtration& f, std::size_t prefix) {
  const int top = f.max_dim();
  // Local numbering of the k-simplices in the prefix.
  std::vector<std::unordered_map<Simplex, std::size_t, SimplexHash>> local(top + 2);
  for (std::size_t i = 0; i < prefix; ++i) {
    const Simplex& s = f[i].simplex;
    auto& bucket = local[s.dim()];
    bucket.emplace(s, bucket.size());
  }
  // rank of the boundary map from k-chains to (k-1)-chains, as a dense
  // matrix with one row per k-simplex.
  auto boundary_rank = [&](int k) -> std::size_t {
    if (k < 1 || k > top || local[k].empty()) return 0;
    std::vector<std::vector<bool>> rows;
    rows.reserve(local[k].size());
    for (const auto& [s, _] : local[k]) {
      std::vector<bool> row(local[k - 1].size(), false);
      for (const auto& face : s.facets()) row[local[k - 1].at(face)] = true;
      rows.push_back(std::move(row));
    }
    return dense_z2_rank(std::move(rows));
  };
  std::vector<std::size_t> ranks(top + 2, 0);
  for (int k = 1; k <= top; ++k) ranks[k] = boundary_rank(k);
  std::vector<int> betti(top + 1, 0);
  for (int k = 0; k <= top; ++k)
    betti[k] = static_cast<int>(local[k].size() - ranks[k] - ranks[k + 1]);
  return betti;
}

std::string check_betti_prefix(const Filtration& f, const std::vector<PersistencePair>& pairs,
                               const std::vector<EssentialClass>& essentials, std::size_t prefix) {
  const auto expected = betti_dense(f, prefix);
  const auto got = betti_from_pairs(f, pairs, essentials, prefix);
  if (expected == got) return {};
  std::ostringstream os;
  os << "prefix " << prefix << ": betti from pairs [";
  for (int b : got) os << ' ' << b;
  os << " ] vs dense [";
  for (int b : expected) os << ' ' << b;
  os << " ]";
  return os.str();
}

VerifyReport run_verify(const Filtration& f, const VerifyOptions& options) {
  VerifyReport report;
  auto record = [&](std::string name, const std::string& failure) {
    report.checks.push_back(CheckResult{std::move(name), failure.empty(), false, failure});
  };

  if (auto v = validate_filtration(f)) {
    record("filtration", v->message);
    return report;
  }
  record("filtration", {});

  const PositionIndex index(f);
  const auto boundary = boundary_matrix(f, index);
  const auto standard = standard_reduce(boundary);
  const auto twisted = twist_reduce(boundary);
  const auto cotwisted = cotwist_reduce(coboundary_matrix(f, index));
  auto double_twisted = double_twist(f);
  if (options.tamper) options.tamper(double_twisted);

  record("construction_duality", check_construction_duality(f));
  {
    std::string failure;
    for (const ReducedMatrix* rm : {&standard, &twisted, &cotwisted, &std::as_const(double_twisted)})
      if (failure.empty() && !is_reduced(*rm)) failure = "a reduction left repeated lows";
    record("reduced_form", failure);
  }
  record("saving_works", check_saving_works(double_twisted, twisted));
  record("pair_routes", check_pair_routes(f, standard, twisted, cotwisted, double_twisted));

  const auto pairs = pairs_from_boundary(standard, f);
  const auto essentials = essential_classes(f, pairs);
  record("matching", check_matching(f, pairs));
  record("representatives",
         check_representatives(f, boundary, representatives(double_twisted, f)));

  if (f.size() > options.final_betti_limit) {
    report.checks.push_back(CheckResult{"betti_oracle", false, true,
                                        "skipped: more than " +
                                            std::to_string(options.final_betti_limit) + " simplices"});
  } else {
    std::string failure;
    if (f.size() <= options.all_prefix_limit) {
      for (std::size_t p = 1; p <= f.size() && failure.empty(); ++p)
        failure = check_betti_prefix(f, pairs, essentials, p);
    } else {
      failure = check_betti_prefix(f, pairs, essentials, f.size());
    }
    record("betti_oracle", failure);
  }
  return report;
}

}  // namespace dtwist
