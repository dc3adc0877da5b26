#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "symlie/field.hpp"

namespace symlie {

using Vec = std::vector<Scalar>;

Vec zero_vector(const Field& field, std::size_t n);
Vec unit_vector(const Field& field, std::size_t n, std::size_t index);
bool is_zero(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Scalar& c, const Vec& v);
/// a += c * b
void axpy(Vec& a, const Scalar& c, const Vec& b);

/// Dense row-major matrix over a single field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(const Field& field, std::size_t rows, std::size_t cols);

  static Matrix identity(const Field& field, std::size_t n);
  static Matrix from_rows(const Field& field, const std::vector<Vec>& rows);
  static Matrix from_columns(const Field& field, const std::vector<Vec>& cols);
  static Matrix from_ints(const Field& field, std::initializer_list<std::initializer_list<long>> rows);
  static Matrix diagonal(const Field& field, const Vec& entries);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const Field& field() const noexcept { return field_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const std::vector<Scalar>& entries() const noexcept { return data_; }

  Vec row(std::size_t r) const;
  Vec col(std::size_t c) const;
  void set_col(std::size_t c, const Vec& v);

  Matrix transpose() const;
  Matrix pow(unsigned e) const;
  bool is_zero() const;

  Matrix operator*(const Matrix& o) const;
  Vec operator*(const Vec& v) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Scalar& c) const;

  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

struct RrefResult {
  Matrix form;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form; the pivot is the first nonzero entry in column order.
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Linear subspace of field^ambient_dim, stored as the nonzero rows of an RREF basis.
class Subspace {
 public:
  Subspace(const Field& field, std::size_t ambient_dim);  // zero subspace

  static Subspace full(const Field& field, std::size_t ambient_dim);
  static Subspace span(const Field& field, std::size_t ambient_dim, const std::vector<Vec>& vectors);

  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.rows(); }
  const Field& field() const noexcept { return field_; }
  const Matrix& basis() const noexcept { return basis_; }
  std::vector<Vec> basis_vectors() const;
  bool contains(const Vec& v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.ambient_ == b.ambient_ && a.basis_ == b.basis_; }

 private:
  Field field_;
  std::size_t ambient_;
  Matrix basis_;
};

Subspace kernel(const Matrix& m);
/// Throws Singular when m is not invertible, DimensionMismatch when not square.
Matrix inverse(const Matrix& m);
bool is_invertible(const Matrix& m);
/// Smallest k >= 1 with m^k = 0, searched up to k = n.
std::optional<std::size_t> nilpotency_index(const Matrix& m);

}  // namespace symlie
