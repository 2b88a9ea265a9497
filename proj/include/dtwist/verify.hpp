#pragma once

#include <functional>
#include <string>
#include <vector>

#include "dtwist/double_twist.hpp"
#include "dtwist/persistence.hpp"

namespace dtwist {

struct CheckResult {
  std::string name;
  bool passed = false;
  bool skipped = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool all_passed() const;
};

struct VerifyOptions {
  // Betti numbers are checked for every prefix up to this many simplices,
  // and only for the whole complex above it.
  std::size_t all_prefix_limit = 200;
  // No Betti check at all above this many simplices (dense elimination).
  std::size_t final_betti_limit = 5000;
  // Applied to the double-twist result before comparison. Test hook.
  std::function<void(ReducedMatrix&)> tamper;
};

/// Runs every equivalence and validity check on one filtration.
VerifyReport run_verify(const Filtration& f, const VerifyOptions& options = {});

// Individual checks; each returns an empty string on success and a
// one-line description of the first mismatch otherwise.
std::string check_construction_duality(const Filtration& f);
std::string check_saving_works(const ReducedMatrix& double_twisted, const ReducedMatrix& twisted);
std::string check_pair_routes(const Filtration& f, const ReducedMatrix& standard,
                              const ReducedMatrix& twisted, const ReducedMatrix& cotwisted,
                              const ReducedMatrix& double_twisted);
std::string check_representatives(const Filtration& f, const SparseBinaryMatrix& boundary,
                                  const std::vector<Representative>& reps);
std::string check_matching(const Filtration& f, const std::vector<PersistencePair>& pairs);
std::string check_betti_prefix(const Filtration& f, const std::vector<PersistencePair>& pairs,
                               const std::vector<EssentialClass>& essentials, std::size_t prefix);

/// Betti numbers of the first `prefix` simplices read off a pairing.
std::vector<int> betti_from_pairs(const Filtration& f, const std::vector<PersistencePair>& pairs,
                                  const std::vector<EssentialClass>& essentials, std::size_t prefix);

/// Betti numbers of the first `prefix` simplices by rank-nullity over dense
/// Z2 boundary matrices, with no use of the reduction code.
std::vector<int> betti_dense(const Filtration& f, std::size_t prefix);

/// Rank over Z2 of a dense matrix given as rows of bits.
std::size_t dense_z2_rank(std::vector<std::vector<bool>> rows);

}  // namespace dtwist
