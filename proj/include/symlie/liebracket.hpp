#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symlie/sympower.hpp"

namespace symlie {

/// A linear map together with an eigenvector: the data of the bracket
/// [f, g] = g(w) A*(f) - f(w) A*(g). Only obtainable via validate_seed, so
/// A w = lambda w always holds.
class SeedPair {
 public:
  const Matrix& matrix() const noexcept { return a_; }
  const Vec& w() const noexcept { return w_; }
  const Scalar& lambda() const noexcept { return lambda_; }
  /// True when w = 0 or A = 0; the resulting algebras are abelian.
  bool degenerate() const noexcept { return degenerate_; }
  std::size_t n() const noexcept { return a_.rows(); }
  const Field& field() const noexcept { return a_.field(); }

  friend bool operator==(const SeedPair& x, const SeedPair& y) { return x.a_ == y.a_ && x.w_ == y.w_; }

 private:
  friend SeedPair validate_seed(const Matrix& a, const Vec& w);
  SeedPair(Matrix a, Vec w, Scalar lambda, bool degenerate)
      : a_(std::move(a)), w_(std::move(w)), lambda_(std::move(lambda)), degenerate_(degenerate) {}

  Matrix a_;
  Vec w_;
  Scalar lambda_;
  bool degenerate_;
};

/// lambda is derived from the first nonzero coordinate of w and then checked
/// on every coordinate. Throws NotAnEigenvector on failure.
SeedPair validate_seed(const Matrix& a, const Vec& w);

/// Seed and degree a table was generated from. For graded tables `degree`
/// is empty and `max_degree` is set.
struct Provenance {
  Matrix a;
  Vec w;
  Scalar lambda;
  std::optional<unsigned> degree;
  std::optional<unsigned> max_degree;
};

/// Finite-dimensional Lie algebra given by sparse structure constants.
/// Only pairs i < j with a nonzero bracket are stored; [e_j, e_i] is the
/// negation and [e_i, e_i] = 0.
class LieTable {
 public:
  using Key = std::pair<std::size_t, std::size_t>;

  LieTable(const Field& field, std::vector<std::string> labels);

  std::size_t dim() const noexcept { return labels_.size(); }
  const Field& field() const noexcept { return field_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::map<Key, Vec>& constants() const noexcept { return constants_; }
  const std::optional<Provenance>& provenance() const noexcept { return provenance_; }
  void set_provenance(Provenance p) { provenance_ = std::move(p); }
  bool is_abelian() const noexcept { return constants_.empty(); }

  /// Sets [e_i, e_j]; i > j stores the negation. i == j must be zero.
  void set_bracket(std::size_t i, std::size_t j, const Vec& value);
  Vec bracket(std::size_t i, std::size_t j) const;
  /// Bilinear extension to coefficient vectors.
  Vec bracket(const Vec& x, const Vec& y) const;

  /// Structural equality (labels and provenance ignored).
  friend bool same_structure(const LieTable& a, const LieTable& b) {
    return a.field_ == b.field_ && a.dim() == b.dim() && a.constants_ == b.constants_;
  }

 private:
  Field field_;
  std::vector<std::string> labels_;
  std::map<Key, Vec> constants_;
  std::optional<Provenance> provenance_;
};

/// g(w) A*_d(f) - f(w) A*_d(g)
HomPoly bracket(const SeedPair& seed, unsigned d, const HomPoly& f, const HomPoly& g);

/// Table of the bracket on the degree-d monomial basis.
LieTable structure_constants(const SeedPair& seed, unsigned d);

/// Direct sum of degrees 0..max_degree; brackets across degrees vanish.
LieTable graded_table(const SeedPair& seed, unsigned max_degree);

}  // namespace symlie
