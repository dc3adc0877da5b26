#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "symlie/liebracket.hpp"

namespace symlie {

enum class SeriesKind { Derived, LowerCentral };

/// Dimensions of a descending series g = g_0 > g_1 > ... . The list stops at
/// the first zero term or, if the series stabilizes above zero, after the
/// first repeated value.
struct SeriesReport {
  SeriesKind kind = SeriesKind::Derived;
  std::vector<std::size_t> dims;
  bool terminated_at_zero = false;
  /// Number of strict decreases.
  std::size_t steps = 0;
};

struct JacobiViolation {
  std::size_t i, j, k;
};

/// First basis triple i < j < k whose Jacobi sum is nonzero, if any.
std::optional<JacobiViolation> check_alternating_jacobi(const LieTable& t);

/// Span of [u, w] over basis vectors u of U and w of W.
Subspace product_space(const LieTable& t, const Subspace& u, const Subspace& w);

SeriesReport derived_series(const LieTable& t);
SeriesReport lower_central_series(const LieTable& t);

bool is_solvable(const LieTable& t);

struct Nilpotency {
  bool nilpotent = false;
  /// Strict steps of the lower central series to zero; 0 when not nilpotent.
  std::size_t nilpotency_class = 0;
};
Nilpotency is_nilpotent(const LieTable& t);

Subspace center(const LieTable& t);

/// Z_0 = 0, Z_(k+1) = {x : [x, g] in Z_k}; dims until the series stops growing.
std::vector<std::size_t> upper_central_dims(const LieTable& t);

/// {x : [x, u] = 0 for all u in U}
Subspace centralizer(const LieTable& t, const Subspace& u);

/// Matrix of y -> [x, y] in the table's basis.
Matrix ad_matrix(const LieTable& t, const Vec& x);

/// A linear map between two tables, checked to be a Lie isomorphism.
struct HomWitness {
  Matrix map;
  std::string source_id;
  std::string target_id;
  bool verified = false;
};

/// verified iff P is invertible and P[e_i, e_j] = [P e_i, P e_j] for all i < j.
HomWitness verify_hom(const LieTable& src, const LieTable& dst, const Matrix& p);

struct ConjugatedIso {
  SeedPair seed;
  HomWitness witness;
};

/// Conjugates the seed to (T A T^-1, T w) and returns the induced map of
/// T^-1, which is a Lie isomorphism from the original algebra onto the
/// conjugated one. Throws Singular when T is not invertible.
ConjugatedIso conjugated_iso(const SeedPair& seed, const Matrix& t, unsigned d);

/// Isomorphism invariants. Every entry is independent of the basis, so
/// equal fingerprints are necessary (never sufficient) for isomorphism.
struct Fingerprint {
  std::size_t dim = 0;
  std::vector<std::size_t> derived_dims;
  std::vector<std::size_t> lower_central_dims;
  /// 0 = Z_0 < Z_1 = center < Z_2 < ... up to the first repeat.
  std::vector<std::size_t> upper_central_dims;
  std::size_t center_dim = 0;
  std::size_t derived_algebra_dim = 0;
  /// Dimension of {x : [x, [g, g]] = 0}.
  std::size_t derived_centralizer_dim = 0;
  /// Dimension of the associative algebra generated by ad(g).
  std::size_t ad_algebra_dim = 0;
  /// Over F_p with p^dim <= kRankCensusLimit: entry r counts the elements x
  /// with rank ad(x) = r. Empty otherwise.
  std::vector<std::size_t> ad_rank_counts;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

inline constexpr std::uint64_t kRankCensusLimit = 1u << 14;

Fingerprint fingerprint(const LieTable& t);

inline constexpr std::uint64_t kDefaultIsoBudget = 1'000'000;

/// |GL_n(F_p)|, saturating at UINT64_MAX.
std::uint64_t general_linear_order(std::size_t n, std::uint64_t p);

/// Exhaustive isomorphism search over F_p. Candidates are enumerated
/// row-major in lexicographic order of their entries, singular ones skipped;
/// the first verified witness is returned, absence proves non-isomorphism.
/// Throws BudgetExceeded when |GL_N(F_p)| > budget (after the fingerprint
/// prefilter has had a chance to rule the pair out).
std::optional<HomWitness> brute_force_iso(const LieTable& t1, const LieTable& t2,
                                          std::uint64_t budget = kDefaultIsoBudget);

}  // namespace symlie
