#include "symlie/liebracket.hpp"

namespace symlie {

SeedPair validate_seed(const Matrix& a, const Vec& w) {
  if (!a.is_square()) throw Error(ErrorCode::DimensionMismatch, "seed matrix must be square");
  if (a.rows() == 0) throw Error(ErrorCode::InvalidArgument, "seed matrix must be nonempty");
  if (w.size() != a.rows()) throw Error(ErrorCode::DimensionMismatch, "eigenvector length does not match matrix size");
  for (const auto& x : w)
    if (!(x.field() == a.field())) throw Error(ErrorCode::FieldMismatch, "eigenvector and matrix over different fields");

  const Field& field = a.field();
  if (is_zero(w)) return SeedPair(a, w, Scalar(field), true);

  Vec image = a * w;
  std::size_t j = 0;
  while (w[j].is_zero()) ++j;
  Scalar lambda = image[j] / w[j];
  for (std::size_t k = 0; k < w.size(); ++k)
    if (!(image[k] == lambda * w[k]))
      throw Error(ErrorCode::NotAnEigenvector, "w is not an eigenvector of A (A*w is not a multiple of w)");
  return SeedPair(a, w, lambda, a.is_zero());
}

void LieTable::set_bracket(std::size_t i, std::size_t j, const Vec& value) {
  if (i >= dim() || j >= dim()) throw Error(ErrorCode::DimensionMismatch, "bracket index out of range");
  if (value.size() != dim()) throw Error(ErrorCode::DimensionMismatch, "bracket value has wrong length");
  for (const auto& x : value)
    if (!(x.field() == field_)) throw Error(ErrorCode::FieldMismatch, "bracket value from a different field");
  if (i == j) {
    if (!is_zero(value)) throw Error(ErrorCode::InvalidArgument, "[e_i, e_i] must vanish");
    return;
  }
  Key key = i < j ? Key{i, j} : Key{j, i};
  Vec stored = i < j ? value : scale(Scalar::from_int(field_, -1), value);
  if (is_zero(stored))
    constants_.erase(key);
  else
    constants_[key] = std::move(stored);
}

LieTable::LieTable(const Field& field, std::vector<std::string> labels) : field_(field), labels_(std::move(labels)) {}

Vec LieTable::bracket(std::size_t i, std::size_t j) const {
  if (i >= dim() || j >= dim()) throw Error(ErrorCode::DimensionMismatch, "bracket index out of range");
  if (i == j) return zero_vector(field_, dim());
  auto it = constants_.find(i < j ? Key{i, j} : Key{j, i});
  if (it == constants_.end()) return zero_vector(field_, dim());
  return i < j ? it->second : scale(Scalar::from_int(field_, -1), it->second);
}

Vec LieTable::bracket(const Vec& x, const Vec& y) const {
  if (x.size() != dim() || y.size() != dim()) throw Error(ErrorCode::DimensionMismatch, "bracket operand has wrong length");
  Vec out = zero_vector(field_, dim());
  for (const auto& [key, value] : constants_) {
    auto [i, j] = key;
    // x_i y_j - x_j y_i
    Scalar c = x[i] * y[j] - x[j] * y[i];
    axpy(out, c, value);
  }
  return out;
}

HomPoly bracket(const SeedPair& seed, unsigned d, const HomPoly& f, const HomPoly& g) {
  if (f.degree() != d || g.degree() != d) throw Error(ErrorCode::DimensionMismatch, "bracket operands must have degree d");
  if (f.n() != seed.n() || g.n() != seed.n()) throw Error(ErrorCode::DimensionMismatch, "bracket operands in wrong variable count");
  if (!(f.field() == seed.field()) || !(g.field() == seed.field()))
    throw Error(ErrorCode::FieldMismatch, "bracket operands over a different field");
  Matrix induced = induced_matrix(seed.matrix(), d);
  HomPoly left = scale(evaluate(g, seed.w()), apply(induced, f));
  HomPoly right = scale(-evaluate(f, seed.w()), apply(induced, g));
  return add(left, right);
}

namespace {

std::vector<std::string> degree_labels(unsigned n, unsigned d) {
  auto basis = monomial_basis(n, d);
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < basis->size(); ++k) labels.push_back(basis->label(k));
  return labels;
}

// Writes the degree-d block of the bracket into `table` starting at `offset`.
void fill_degree(const SeedPair& seed, unsigned d, std::size_t offset, LieTable& table) {
  const Field& field = seed.field();
  const unsigned n = static_cast<unsigned>(seed.n());
  auto basis = monomial_basis(n, d);
  const std::size_t size = basis->size();
  if (seed.degenerate()) return;

  Matrix induced = induced_matrix(seed.matrix(), d);
  std::vector<Scalar> at_w;
  for (std::size_t k = 0; k < size; ++k) at_w.push_back(evaluate(HomPoly::monomial(field, n, d, k), seed.w()));

  for (std::size_t i = 0; i < size; ++i) {
    Vec ci = induced.col(i);
    for (std::size_t j = i + 1; j < size; ++j) {
      if (at_w[i].is_zero() && at_w[j].is_zero()) continue;
      Vec local = scale(at_w[j], ci);
      axpy(local, -at_w[i], induced.col(j));
      if (is_zero(local)) continue;
      Vec full = zero_vector(field, table.dim());
      for (std::size_t k = 0; k < size; ++k) full[offset + k] = local[k];
      table.set_bracket(offset + i, offset + j, full);
    }
  }
}

}  // namespace

LieTable structure_constants(const SeedPair& seed, unsigned d) {
  LieTable table(seed.field(), degree_labels(static_cast<unsigned>(seed.n()), d));
  fill_degree(seed, d, 0, table);
  table.set_provenance(Provenance{seed.matrix(), seed.w(), seed.lambda(), d, std::nullopt});
  return table;
}

LieTable graded_table(const SeedPair& seed, unsigned max_degree) {
  const unsigned n = static_cast<unsigned>(seed.n());
  std::vector<std::string> labels;
  for (unsigned d = 0; d <= max_degree; ++d) {
    auto part = degree_labels(n, d);
    labels.insert(labels.end(), part.begin(), part.end());
  }
  LieTable table(seed.field(), std::move(labels));
  std::size_t offset = 0;
  for (unsigned d = 0; d <= max_degree; ++d) {
    fill_degree(seed, d, offset, table);
    offset += sym_power_dim(n, d);
  }
  table.set_provenance(Provenance{seed.matrix(), seed.w(), seed.lambda(), std::nullopt, max_degree});
  return table;
}

}  // namespace symlie
