#include "symlie/linalg.hpp"

#include <string>

namespace symlie {

namespace {

void require(bool ok, ErrorCode code, const char* what) {
  if (!ok) throw Error(code, what);
}

}  // namespace

Vec zero_vector(const Field& field, std::size_t n) { return Vec(n, Scalar(field)); }

Vec unit_vector(const Field& field, std::size_t n, std::size_t index) {
  Vec v = zero_vector(field, n);
  v.at(index) = Scalar::from_int(field, 1);
  return v;
}

bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Vec add(const Vec& a, const Vec& b) {
  require(a.size() == b.size(), ErrorCode::DimensionMismatch, "vector length mismatch");
  Vec out(a);
  for (std::size_t k = 0; k < a.size(); ++k) out[k] += b[k];
  return out;
}

Vec sub(const Vec& a, const Vec& b) {
  require(a.size() == b.size(), ErrorCode::DimensionMismatch, "vector length mismatch");
  Vec out(a);
  for (std::size_t k = 0; k < a.size(); ++k) out[k] -= b[k];
  return out;
}

Vec scale(const Scalar& c, const Vec& v) {
  Vec out(v);
  for (auto& x : out) x *= c;
  return out;
}

void axpy(Vec& a, const Scalar& c, const Vec& b) {
  require(a.size() == b.size(), ErrorCode::DimensionMismatch, "vector length mismatch");
  if (c.is_zero()) return;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (!b[k].is_zero()) a[k] += c * b[k];
}

Matrix::Matrix(const Field& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, Scalar(field)) {}

Matrix Matrix::identity(const Field& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = Scalar::from_int(field, 1);
  return m;
}

Matrix Matrix::from_rows(const Field& field, const std::vector<Vec>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    require(rows[r].size() == cols, ErrorCode::DimensionMismatch, "ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) {
      if (!(rows[r][c].field() == field)) throw Error(ErrorCode::FieldMismatch, "matrix entry from a different field");
      m(r, c) = rows[r][c];
    }
  }
  return m;
}

Matrix Matrix::from_columns(const Field& field, const std::vector<Vec>& cols) {
  return from_rows(field, cols).transpose();
}

Matrix Matrix::from_ints(const Field& field, std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<Vec> out;
  for (const auto& row : rows) {
    Vec v;
    for (long x : row) v.push_back(Scalar::from_int(field, x));
    out.push_back(std::move(v));
  }
  return from_rows(field, out);
}

Matrix Matrix::diagonal(const Field& field, const Vec& entries) {
  Matrix m(field, entries.size(), entries.size());
  for (std::size_t k = 0; k < entries.size(); ++k) m(k, k) = entries[k];
  return m;
}

Vec Matrix::row(std::size_t r) const { return Vec(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_); }

Vec Matrix::col(std::size_t c) const {
  Vec v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

void Matrix::set_col(std::size_t c, const Vec& v) {
  require(v.size() == rows_, ErrorCode::DimensionMismatch, "column length mismatch");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::pow(unsigned e) const {
  require(is_square(), ErrorCode::DimensionMismatch, "power of a non-square matrix");
  Matrix result = identity(field_, rows_);
  for (unsigned k = 0; k < e; ++k) result = result * *this;
  return result;
}

bool Matrix::is_zero() const { return symlie::is_zero(data_); }

Matrix Matrix::operator*(const Matrix& o) const {
  require(cols_ == o.rows_, ErrorCode::DimensionMismatch, "matrix product dimension mismatch");
  if (!(field_ == o.field_)) throw Error(ErrorCode::FieldMismatch, "matrix product across fields");
  Matrix out(field_, rows_, o.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(r, k);
      if (a.is_zero()) continue;
      for (std::size_t c = 0; c < o.cols_; ++c)
        if (!o(k, c).is_zero()) out(r, c) += a * o(k, c);
    }
  return out;
}

Vec Matrix::operator*(const Vec& v) const {
  require(cols_ == v.size(), ErrorCode::DimensionMismatch, "matrix-vector dimension mismatch");
  Vec out = zero_vector(field_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (!v[c].is_zero() && !(*this)(r, c).is_zero()) out[r] += (*this)(r, c) * v[c];
  return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
  require(rows_ == o.rows_ && cols_ == o.cols_, ErrorCode::DimensionMismatch, "matrix sum dimension mismatch");
  Matrix out(*this);
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] += o.data_[k];
  return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
  require(rows_ == o.rows_ && cols_ == o.cols_, ErrorCode::DimensionMismatch, "matrix difference dimension mismatch");
  Matrix out(*this);
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] -= o.data_[k];
  return out;
}

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix out(*this);
  for (auto& x : out.data_) x *= c;
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

RrefResult rref(const Matrix& m) {
  RrefResult res{m, 0, {}};
  Matrix& a = res.form;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < a.cols() && lead < a.rows(); ++c) {
    std::size_t pivot = lead;
    while (pivot < a.rows() && a(pivot, c).is_zero()) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != lead)
      for (std::size_t k = 0; k < a.cols(); ++k) std::swap(a(pivot, k), a(lead, k));
    Scalar inv = a(lead, c).inverse();
    for (std::size_t k = c; k < a.cols(); ++k) a(lead, k) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == lead || a(r, c).is_zero()) continue;
      Scalar factor = a(r, c);
      for (std::size_t k = c; k < a.cols(); ++k)
        if (!a(lead, k).is_zero()) a(r, k) -= factor * a(lead, k);
    }
    res.pivots.push_back(c);
    ++lead;
  }
  res.rank = lead;
  return res;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

Subspace::Subspace(const Field& field, std::size_t ambient_dim)
    : field_(field), ambient_(ambient_dim), basis_(field, 0, ambient_dim) {}

Subspace Subspace::full(const Field& field, std::size_t ambient_dim) {
  Subspace s(field, ambient_dim);
  s.basis_ = Matrix::identity(field, ambient_dim);
  return s;
}

Subspace Subspace::span(const Field& field, std::size_t ambient_dim, const std::vector<Vec>& vectors) {
  Subspace s(field, ambient_dim);
  if (vectors.empty()) return s;
  for (const auto& v : vectors)
    require(v.size() == ambient_dim, ErrorCode::DimensionMismatch, "spanning vector has wrong length");
  RrefResult r = rref(Matrix::from_rows(field, vectors));
  Matrix basis(field, r.rank, ambient_dim);
  for (std::size_t row = 0; row < r.rank; ++row)
    for (std::size_t c = 0; c < ambient_dim; ++c) basis(row, c) = r.form(row, c);
  s.basis_ = std::move(basis);
  return s;
}

std::vector<Vec> Subspace::basis_vectors() const {
  std::vector<Vec> out;
  for (std::size_t r = 0; r < basis_.rows(); ++r) out.push_back(basis_.row(r));
  return out;
}

bool Subspace::contains(const Vec& v) const {
  require(v.size() == ambient_, ErrorCode::DimensionMismatch, "vector has wrong length");
  auto vectors = basis_vectors();
  vectors.push_back(v);
  return rank(Matrix::from_rows(field_, vectors)) == dim();
}

Subspace kernel(const Matrix& m) {
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<Vec> vectors;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v = unit_vector(m.field(), m.cols(), free);
    for (std::size_t row = 0; row < r.rank; ++row) v[r.pivots[row]] = -r.form(row, free);
    vectors.push_back(std::move(v));
  }
  return Subspace::span(m.field(), m.cols(), vectors);
}

Matrix inverse(const Matrix& m) {
  require(m.is_square(), ErrorCode::DimensionMismatch, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(m.field(), n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = Scalar::from_int(m.field(), 1);
  }
  RrefResult red = rref(aug);
  if (red.rank < n || red.pivots[n - 1] != n - 1) throw Error(ErrorCode::Singular, "matrix is singular");
  Matrix out(m.field(), n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out(r, c) = red.form(r, n + c);
  return out;
}

bool is_invertible(const Matrix& m) { return m.is_square() && rank(m) == m.rows(); }

std::optional<std::size_t> nilpotency_index(const Matrix& m) {
  require(m.is_square(), ErrorCode::DimensionMismatch, "nilpotency index of a non-square matrix");
  Matrix power = m;
  for (std::size_t k = 1; k <= std::max<std::size_t>(m.rows(), 1); ++k) {
    if (power.is_zero()) return k;
    power = power * m;
  }
  return std::nullopt;
}

}  // namespace symlie
