#include "symlie/classify2c.hpp"

namespace symlie {

const char* family_name(Family f) noexcept {
  switch (f) {
    case Family::Abelian: return "Abelian";
    case Family::G1: return "G1";
    case Family::G2: return "G2";
    case Family::G3: return "G3";
    case Family::OutsideFamilies: return "OutsideFamilies";
  }
  return "?";
}

Matrix JordanForm2::normal_form() const {
  const Field& field = transform.field();
  Matrix j = Matrix::diagonal(field, {lambda1, lambda2});
  if (kind == Kind::JordanBlock) j(0, 1) = Scalar::from_int(field, 1);
  return j;
}

namespace {

void require_char_zero(const Field& field) {
  if (field.is_prime()) throw Error(ErrorCode::InvalidArgument, "two-dimensional classification is only defined over Q or Q(i)");
}

Vec kernel_vector(const Matrix& m) {
  Subspace k = kernel(m);
  if (k.dim() == 0) throw std::logic_error("expected a nontrivial kernel");
  return k.basis_vectors().front();
}

}  // namespace

JordanForm2 jordan_form_2x2(const Matrix& a) {
  if (a.rows() != 2 || a.cols() != 2) throw Error(ErrorCode::DimensionMismatch, "jordan_form_2x2 needs a 2x2 matrix");
  const Field& field = a.field();
  require_char_zero(field);
  const Matrix id = Matrix::identity(field, 2);

  JordanForm2 jf;
  if (a(0, 1).is_zero() && a(1, 0).is_zero()) {
    jf.kind = JordanForm2::Kind::Diagonal;
    jf.lambda1 = a(0, 0);
    jf.lambda2 = a(1, 1);
    jf.transform = id;
    return jf;
  }

  const Scalar two = Scalar::from_int(field, 2);
  Scalar trace = a(0, 0) + a(1, 1);
  Scalar det = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
  Scalar disc = trace * trace - Scalar::from_int(field, 4) * det;
  Scalar root(field);
  if (!try_sqrt(disc, root))
    throw Error(ErrorCode::EigenvaluesNotInField, "eigenvalues of the matrix are not in " + field.tag() + " (discriminant " + disc.to_string() + ")");

  if (!disc.is_zero()) {
    jf.kind = JordanForm2::Kind::Diagonal;
    jf.lambda1 = (trace + root) / two;
    jf.lambda2 = (trace - root) / two;
    Vec v1 = kernel_vector(a - id.scaled(jf.lambda1));
    Vec v2 = kernel_vector(a - id.scaled(jf.lambda2));
    jf.transform = Matrix::from_columns(field, {v1, v2});
  } else {
    // a is not scalar here, so a single defective eigenvalue
    jf.kind = JordanForm2::Kind::JordanBlock;
    jf.lambda1 = jf.lambda2 = trace / two;
    Matrix nil = a - id.scaled(jf.lambda1);
    std::size_t j = nil.col(0) == zero_vector(field, 2) ? 1 : 0;
    Vec v2 = unit_vector(field, 2, j);
    Vec v1 = nil * v2;
    jf.transform = Matrix::from_columns(field, {v1, v2});
  }
  if (!(a * jf.transform == jf.transform * jf.normal_form())) throw std::logic_error("Jordan transform check failed");
  return jf;
}

LieTable family_table(const ClassLabel& label, unsigned d, const Field& field_in) {
  Field field = label.parameter ? label.parameter->field() : field_in;
  std::vector<std::string> names;
  for (unsigned i = 0; i <= d; ++i) names.push_back("y" + std::to_string(i));
  LieTable table(field, std::move(names));
  const std::size_t dim = d + 1;

  auto need_param = [&]() -> const Scalar& {
    if (!label.parameter || label.parameter->is_zero())
      throw Error(ErrorCode::InvalidArgument, std::string(family_name(label.family)) + " needs a nonzero parameter");
    return *label.parameter;
  };

  switch (label.family) {
    case Family::Abelian:
      return table;
    case Family::OutsideFamilies:
      throw Error(ErrorCode::InvalidArgument, "no reference table for algebras outside the families");
    case Family::G1:
      for (unsigned i = 1; i <= d; ++i) table.set_bracket(0, i, unit_vector(field, dim, i));
      return table;
    case Family::G2: {
      const Scalar& c = need_param();
      for (unsigned i = 1; i <= d; ++i) table.set_bracket(0, i, scale(c.pow(i - 1), unit_vector(field, dim, i)));
      return table;
    }
    case Family::G3: {
      const Scalar& c = need_param();
      for (unsigned i = 1; i <= d; ++i) {
        Vec v = zero_vector(field, dim);
        for (unsigned j = 0; j <= d - i; ++j) {
          mpz_class binom;
          mpz_bin_uiui(binom.get_mpz_t(), d - i, j);
          v[d - j] += Scalar::from_rational(field, mpq_class(binom)) * c.pow(j);
        }
        table.set_bracket(0, i, scale(c.pow(i - 1), v));
      }
      return table;
    }
  }
  return table;
}

namespace {

// Witness = diag(s, 1, ..., 1) * induced(T^-1): the first factor conjugates
// (A, w) to (J, e1), the second rescales y0 onto the reference relations.
HomWitness normalize(const LieTable& src, const SeedPair& seed, const Matrix& t, const Scalar& s, const LieTable& target, unsigned d) {
  const Field& field = seed.field();
  Matrix rescale = Matrix::identity(field, d + 1);
  rescale(0, 0) = s;
  Matrix map = rescale * induced_matrix(inverse(t), d);
  return verify_hom(src, target, map);
}

}  // namespace

Classification classify(const SeedPair& seed, unsigned d) {
  if (seed.n() != 2) throw Error(ErrorCode::DimensionMismatch, "classification needs a 2x2 seed");
  const Field& field = seed.field();
  require_char_zero(field);
  if (d == 0) throw Error(ErrorCode::InvalidArgument, "classification needs degree d >= 1");

  Classification out;
  const LieTable src = structure_constants(seed, d);
  out.fingerprint = fingerprint(src);
  const Matrix& a = seed.matrix();
  const Vec& w = seed.w();
  const Matrix id = Matrix::identity(field, d + 1);

  auto abelian = [&]() {
    out.label = ClassLabel{Family::Abelian, std::nullopt, {}};
    out.witness = verify_hom(src, family_table(out.label, d, field), id);
    return out;
  };
  auto finish = [&](ClassLabel label, const Matrix& t, const Scalar& s) {
    out.label = std::move(label);
    out.witness = normalize(src, seed, t, s, family_table(out.label, d, field), d);
    return out;
  };

  if (is_zero(w)) return abelian();

  JordanForm2 jf = jordan_form_2x2(a);
  const Scalar minus_one = Scalar::from_int(field, -1);

  if (jf.kind == JordanForm2::Kind::Diagonal && jf.lambda1 == jf.lambda2) {
    const Scalar& lambda = jf.lambda1;
    if (lambda.is_zero()) return abelian();
    // T^-1 = [w | e_k] with e_k completing w to a basis
    Vec complement = unit_vector(field, 2, w[0].is_zero() ? 0 : 1);
    Matrix t = inverse(Matrix::from_columns(field, {w, complement}));
    return finish(ClassLabel{Family::G1, std::nullopt, {}}, t, minus_one * lambda.pow(d));
  }

  if (jf.kind == JordanForm2::Kind::Diagonal) {
    Vec v1 = jf.transform.col(0);
    Vec v2 = jf.transform.col(1);
    bool on_first = rank(Matrix::from_rows(field, {w, v1})) == 1;
    const Scalar& lambda_w = on_first ? jf.lambda1 : jf.lambda2;
    const Scalar& mu = on_first ? jf.lambda2 : jf.lambda1;
    Matrix t = inverse(Matrix::from_columns(field, {w, on_first ? v2 : v1}));
    if (lambda_w.is_zero()) {
      if (d == 1) return finish(ClassLabel{Family::G1, std::nullopt, {}}, t, minus_one * mu);
      out.label = ClassLabel{Family::OutsideFamilies, std::nullopt,
                             "rank-1 ad, center dim " + std::to_string(out.fingerprint.center_dim)};
      out.witness.reset();
      return out;
    }
    if (mu.is_zero()) return abelian();
    Scalar c = mu / lambda_w;
    Scalar s = minus_one * lambda_w.pow(d - 1) * mu;
    if (c.is_one()) return finish(ClassLabel{Family::G1, std::nullopt, {}}, t, s);
    return finish(ClassLabel{Family::G2, c, {}}, t, s);
  }

  // Jordan block: the eigenspace is the line through the first column of T.
  const Scalar& lambda = jf.lambda1;
  if (lambda.is_zero()) return abelian();
  Vec v1 = jf.transform.col(0);
  std::size_t j = v1[0].is_zero() ? 1 : 0;
  Scalar alpha = w[j] / v1[j];
  Matrix t = inverse(jf.transform.scaled(alpha));
  return finish(ClassLabel{Family::G3, lambda, {}}, t, minus_one * lambda);
}

}  // namespace symlie
