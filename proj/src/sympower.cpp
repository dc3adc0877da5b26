#include "symlie/sympower.hpp"

#include <mutex>

namespace symlie {

namespace {

void fill_exponents(unsigned n, unsigned remaining, Exponents& prefix, std::vector<Exponents>& out) {
  if (prefix.size() + 1 == n) {
    prefix.push_back(remaining);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (unsigned e = remaining + 1; e-- > 0;) {
    prefix.push_back(e);
    fill_exponents(n, remaining - e, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

MonomialBasis::MonomialBasis(unsigned n, unsigned d) : n_(n), d_(d) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "monomial basis needs at least one variable");
  Exponents prefix;
  fill_exponents(n, d, prefix, exponents_);
  for (std::size_t k = 0; k < exponents_.size(); ++k) index_.emplace(exponents_[k], k);
}

std::size_t MonomialBasis::index_of(const Exponents& e) const {
  auto it = index_.find(e);
  if (it == index_.end()) throw Error(ErrorCode::DimensionMismatch, "exponent vector not in basis");
  return it->second;
}

std::string MonomialBasis::label(std::size_t k) const {
  const Exponents& e = exponents_.at(k);
  std::string out;
  for (unsigned v = 0; v < n_; ++v) {
    if (e[v] == 0) continue;
    if (!out.empty()) out += '*';
    out += "x" + std::to_string(v + 1);
    if (e[v] > 1) out += "^" + std::to_string(e[v]);
  }
  return out.empty() ? "1" : out;
}

std::shared_ptr<const MonomialBasis> monomial_basis(unsigned n, unsigned d) {
  static std::mutex mutex;
  static std::map<std::pair<unsigned, unsigned>, std::shared_ptr<const MonomialBasis>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[{n, d}];
  if (!slot) slot = std::make_shared<const MonomialBasis>(n, d);
  return slot;
}

std::size_t sym_power_dim(unsigned n, unsigned d) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n + d - 1, d);
  return b.get_ui();
}

HomPoly::HomPoly(const Field& field, std::shared_ptr<const MonomialBasis> basis)
    : field_(field), basis_(std::move(basis)), coeffs_(zero_vector(field, basis_->size())) {}

HomPoly::HomPoly(std::shared_ptr<const MonomialBasis> basis, Vec coeffs)
    : basis_(std::move(basis)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != basis_->size()) throw Error(ErrorCode::DimensionMismatch, "coefficient vector does not match basis size");
  if (coeffs_.empty()) throw Error(ErrorCode::InvalidArgument, "empty coefficient vector");
  field_ = coeffs_.front().field();
  for (const auto& c : coeffs_)
    if (!(c.field() == field_)) throw Error(ErrorCode::FieldMismatch, "polynomial coefficients from different fields");
}

HomPoly HomPoly::monomial(const Field& field, unsigned n, unsigned d, std::size_t index) {
  auto basis = monomial_basis(n, d);
  return HomPoly(basis, unit_vector(field, basis->size(), index));
}

HomPoly HomPoly::linear(Vec coeffs) {
  auto basis = monomial_basis(static_cast<unsigned>(coeffs.size()), 1);
  return HomPoly(basis, std::move(coeffs));
}

Scalar evaluate(const HomPoly& f, const Vec& point) {
  if (point.size() != f.n()) throw Error(ErrorCode::DimensionMismatch, "evaluation point has wrong length");
  Scalar total(f.field());
  for (std::size_t k = 0; k < f.coeffs().size(); ++k) {
    const Scalar& c = f.coeffs()[k];
    if (c.is_zero()) continue;
    Scalar term = c;
    const Exponents& e = f.basis()[k];
    for (unsigned v = 0; v < f.n(); ++v)
      if (e[v] > 0) term *= point[v].pow(e[v]);
    total += term;
  }
  return total;
}

HomPoly multiply(const HomPoly& f, const HomPoly& g) {
  if (f.n() != g.n()) throw Error(ErrorCode::DimensionMismatch, "polynomials in different variable counts");
  if (!(f.field() == g.field())) throw Error(ErrorCode::FieldMismatch, "polynomials over different fields");
  auto basis = monomial_basis(f.n(), f.degree() + g.degree());
  Vec out = zero_vector(f.field(), basis->size());
  Exponents sum(f.n());
  for (std::size_t a = 0; a < f.coeffs().size(); ++a) {
    if (f.coeffs()[a].is_zero()) continue;
    for (std::size_t b = 0; b < g.coeffs().size(); ++b) {
      if (g.coeffs()[b].is_zero()) continue;
      for (unsigned v = 0; v < f.n(); ++v) sum[v] = f.basis()[a][v] + g.basis()[b][v];
      out[basis->index_of(sum)] += f.coeffs()[a] * g.coeffs()[b];
    }
  }
  return HomPoly(basis, std::move(out));
}

HomPoly add(const HomPoly& f, const HomPoly& g) {
  if (f.n() != g.n() || f.degree() != g.degree()) throw Error(ErrorCode::DimensionMismatch, "adding polynomials of different shape");
  return HomPoly(f.basis_ptr(), symlie::add(f.coeffs(), g.coeffs()));
}

HomPoly scale(const Scalar& c, const HomPoly& f) { return HomPoly(f.basis_ptr(), symlie::scale(c, f.coeffs())); }

HomPoly apply(const Matrix& m, const HomPoly& f) {
  if (m.cols() != f.coeffs().size() || m.rows() != f.coeffs().size())
    throw Error(ErrorCode::DimensionMismatch, "operator does not act on this polynomial space");
  return HomPoly(f.basis_ptr(), m * f.coeffs());
}

Matrix induced_matrix(const Matrix& a, unsigned d) {
  if (!a.is_square()) throw Error(ErrorCode::DimensionMismatch, "induced map needs a square matrix");
  const unsigned n = static_cast<unsigned>(a.rows());
  const Field& field = a.field();
  auto basis = monomial_basis(n, d);
  std::vector<HomPoly> images;
  for (unsigned i = 0; i < n; ++i) images.push_back(HomPoly::linear(a.row(i)));

  Matrix out(field, basis->size(), basis->size());
  for (std::size_t k = 0; k < basis->size(); ++k) {
    HomPoly product = HomPoly::monomial(field, n, 0, 0);
    for (unsigned v = 0; v < n; ++v)
      for (unsigned e = 0; e < (*basis)[k][v]; ++e) product = multiply(product, images[v]);
    out.set_col(k, product.coeffs());
  }
  return out;
}

}  // namespace symlie
