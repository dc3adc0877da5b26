#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "symlie/linalg.hpp"

namespace symlie {

using Exponents = std::vector<unsigned>;

/// Ordered monomial basis of the degree-d homogeneous polynomials in n
/// variables. The order is lexicographically descending on exponent vectors
/// (higher x1 power first), so for n = 2 the i-th element is x1^(d-i) x2^i.
/// This order is part of the stable public contract.
class MonomialBasis {
 public:
  MonomialBasis(unsigned n, unsigned d);

  unsigned n() const noexcept { return n_; }
  unsigned degree() const noexcept { return d_; }
  std::size_t size() const noexcept { return exponents_.size(); }
  const std::vector<Exponents>& exponents() const noexcept { return exponents_; }
  const Exponents& operator[](std::size_t k) const { return exponents_[k]; }
  std::size_t index_of(const Exponents& e) const;
  /// "x1^2", "x1*x2", "1" for the constant monomial.
  std::string label(std::size_t k) const;

 private:
  unsigned n_;
  unsigned d_;
  std::vector<Exponents> exponents_;
  std::map<Exponents, std::size_t> index_;
};

/// Shared, cached basis instance (thread-safe).
std::shared_ptr<const MonomialBasis> monomial_basis(unsigned n, unsigned d);

/// binomial(n + d - 1, d)
std::size_t sym_power_dim(unsigned n, unsigned d);

/// Homogeneous polynomial: coefficient vector over a MonomialBasis.
class HomPoly {
 public:
  HomPoly(const Field& field, std::shared_ptr<const MonomialBasis> basis);
  HomPoly(std::shared_ptr<const MonomialBasis> basis, Vec coeffs);

  static HomPoly monomial(const Field& field, unsigned n, unsigned d, std::size_t index);
  /// The linear form sum_j coeffs[j] x_{j+1}.
  static HomPoly linear(Vec coeffs);

  const MonomialBasis& basis() const noexcept { return *basis_; }
  const std::shared_ptr<const MonomialBasis>& basis_ptr() const noexcept { return basis_; }
  const Field& field() const noexcept { return field_; }
  const Vec& coeffs() const noexcept { return coeffs_; }
  unsigned n() const noexcept { return basis_->n(); }
  unsigned degree() const noexcept { return basis_->degree(); }

  friend bool operator==(const HomPoly& a, const HomPoly& b) {
    return a.n() == b.n() && a.degree() == b.degree() && a.coeffs_ == b.coeffs_;
  }

 private:
  Field field_;
  std::shared_ptr<const MonomialBasis> basis_;
  Vec coeffs_;
};

/// Value at a point; 0^0 = 1.
Scalar evaluate(const HomPoly& f, const Vec& point);
HomPoly multiply(const HomPoly& f, const HomPoly& g);
HomPoly add(const HomPoly& f, const HomPoly& g);
HomPoly scale(const Scalar& c, const HomPoly& f);
/// Apply a matrix expressed in f's monomial basis.
HomPoly apply(const Matrix& m, const HomPoly& f);

/// Matrix of the induced map f -> f o A on degree-d polynomials, in the
/// canonical monomial order. Obtained by substituting x_i -> sum_j A_ij x_j
/// into every basis monomial; for d = 1 this is A^T.
Matrix induced_matrix(const Matrix& a, unsigned d);

}  // namespace symlie
