#pragma once

#include <cstdint>
#include <vector>

#include "symlie/lieanalysis.hpp"

namespace symlie {

inline constexpr std::uint64_t kDefaultEnumerationBudget = 10'000'000;

/// Every (A, w) over F_p with A w = lambda w, A ranging over n x n matrices
/// in row-major lexicographic order and w lexicographically within each A.
/// Throws BudgetExceeded when p^(n^2 + n) > budget.
std::vector<SeedPair> enumerate_M(unsigned n, std::uint64_t p, bool include_zero_w,
                                  std::uint64_t budget = kDefaultEnumerationBudget);

struct OrbitReport {
  unsigned n = 0;
  std::uint64_t p = 0;
  bool include_zero_w = false;
  std::size_t pair_count = 0;
  std::size_t orbit_count = 0;
  std::uint64_t group_order = 0;
  /// Lexicographically least member of each orbit (entries of A row-major,
  /// then w), listed in increasing order.
  std::vector<SeedPair> representatives;
  std::vector<std::size_t> orbit_sizes;
};

/// Orbits of T . (A, w) = (T A T^-1, T w) on the pairs of enumerate_M.
OrbitReport gl_orbits(unsigned n, std::uint64_t p, bool include_zero_w,
                      std::uint64_t budget = kDefaultEnumerationBudget,
                      std::uint64_t group_budget = kDefaultIsoBudget);

/// Full orbit of one pair, sorted lexicographically.
std::vector<SeedPair> orbit(const SeedPair& seed, std::uint64_t group_budget = kDefaultIsoBudget);

/// One representative per line of eigenvectors (first nonzero coordinate 1),
/// grouped by eigenvalue 0, 1, ..., p-1.
std::vector<Vec> eigendirections(const Matrix& a);

struct IsoClassReport {
  unsigned n = 0;
  std::uint64_t p = 0;
  unsigned degree = 0;
  bool include_zero_w = false;
  std::size_t orbit_count = 0;
  std::size_t class_count = 0;
  bool inequality_holds = false;
  /// class index of each orbit representative (same order as OrbitReport)
  std::vector<std::size_t> class_of_orbit;
  OrbitReport orbits;
};

/// Groups the orbit representatives' degree-d algebras into isomorphism
/// classes with brute_force_iso.
IsoClassReport iso_class_count(unsigned n, std::uint64_t p, unsigned d, bool include_zero_w,
                               std::uint64_t budget = kDefaultEnumerationBudget,
                               std::uint64_t iso_budget = kDefaultIsoBudget);

}  // namespace symlie
