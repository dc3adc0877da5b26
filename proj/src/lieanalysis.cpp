#include "symlie/lieanalysis.hpp"

#include <algorithm>
#include <limits>

#include "symlie/serialize.hpp"

namespace symlie {

namespace {

// Dense cube of basis brackets: cube[i * N + j] = [e_i, e_j].
std::vector<Vec> bracket_cube(const LieTable& t) {
  const std::size_t n = t.dim();
  std::vector<Vec> cube(n * n, zero_vector(t.field(), n));
  for (const auto& [key, value] : t.constants()) {
    auto [i, j] = key;
    cube[i * n + j] = value;
    cube[j * n + i] = scale(Scalar::from_int(t.field(), -1), value);
  }
  return cube;
}

// [x, e_k] from the cube.
Vec bracket_with_basis(const std::vector<Vec>& cube, std::size_t n, const Vec& x, std::size_t k) {
  Vec out = zero_vector(x.front().field(), n);
  for (std::size_t i = 0; i < n; ++i)
    if (!x[i].is_zero()) axpy(out, x[i], cube[i * n + k]);
  return out;
}

SeriesReport run_series(const LieTable& t, SeriesKind kind) {
  SeriesReport report;
  report.kind = kind;
  const Subspace full = Subspace::full(t.field(), t.dim());
  Subspace current = full;
  report.dims.push_back(current.dim());
  while (current.dim() > 0) {
    Subspace next = kind == SeriesKind::Derived ? product_space(t, current, current) : product_space(t, full, current);
    report.dims.push_back(next.dim());
    if (next.dim() == current.dim()) break;
    ++report.steps;
    current = std::move(next);
  }
  report.terminated_at_zero = report.dims.back() == 0;
  return report;
}

void require_same_shape(const LieTable& a, const LieTable& b) {
  if (!(a.field() == b.field())) throw Error(ErrorCode::FieldMismatch, "tables over different fields");
}

}  // namespace

std::optional<JacobiViolation> check_alternating_jacobi(const LieTable& t) {
  const std::size_t n = t.dim();
  for (const auto& [key, value] : t.constants())
    if (key.first >= key.second || value.size() != n) return JacobiViolation{key.first, key.second, key.second};
  auto cube = bracket_cube(t);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        const Vec& ij = cube[i * n + j];
        const Vec& jk = cube[j * n + k];
        const Vec& ki = cube[k * n + i];
        if (is_zero(ij) && is_zero(jk) && is_zero(ki)) continue;
        Vec sum = bracket_with_basis(cube, n, ij, k);
        sum = add(sum, bracket_with_basis(cube, n, jk, i));
        sum = add(sum, bracket_with_basis(cube, n, ki, j));
        if (!is_zero(sum)) return JacobiViolation{i, j, k};
      }
  return std::nullopt;
}

Subspace product_space(const LieTable& t, const Subspace& u, const Subspace& w) {
  if (u.ambient_dim() != t.dim() || w.ambient_dim() != t.dim())
    throw Error(ErrorCode::DimensionMismatch, "subspace does not live in this algebra");
  std::vector<Vec> products;
  for (const auto& x : u.basis_vectors())
    for (const auto& y : w.basis_vectors()) {
      Vec b = t.bracket(x, y);
      if (!is_zero(b)) products.push_back(std::move(b));
    }
  return Subspace::span(t.field(), t.dim(), products);
}

SeriesReport derived_series(const LieTable& t) { return run_series(t, SeriesKind::Derived); }
SeriesReport lower_central_series(const LieTable& t) { return run_series(t, SeriesKind::LowerCentral); }

bool is_solvable(const LieTable& t) { return derived_series(t).terminated_at_zero; }

Nilpotency is_nilpotent(const LieTable& t) {
  SeriesReport r = lower_central_series(t);
  if (!r.terminated_at_zero) return {false, 0};
  return {true, r.steps};
}

Subspace center(const LieTable& t) {
  const std::size_t n = t.dim();
  // Row block j, column i: coordinates of [e_i, e_j].
  Matrix stacked(t.field(), n * n, n);
  auto cube = bracket_cube(t);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) stacked(j * n + k, i) = cube[i * n + j][k];
  return kernel(stacked);
}

Matrix ad_matrix(const LieTable& t, const Vec& x) {
  if (x.size() != t.dim()) throw Error(ErrorCode::DimensionMismatch, "element has wrong length");
  Matrix m(t.field(), t.dim(), t.dim());
  for (std::size_t j = 0; j < t.dim(); ++j) m.set_col(j, t.bracket(x, unit_vector(t.field(), t.dim(), j)));
  return m;
}

Subspace centralizer(const LieTable& t, const Subspace& u) {
  const std::size_t n = t.dim();
  std::vector<Vec> gens = u.basis_vectors();
  if (gens.empty()) return Subspace::full(t.field(), n);
  Matrix stacked(t.field(), gens.size() * n, n);
  for (std::size_t g = 0; g < gens.size(); ++g) {
    Matrix ad = ad_matrix(t, gens[g]);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) stacked(g * n + r, c) = ad(r, c);
  }
  return kernel(stacked);
}

std::vector<std::size_t> upper_central_dims(const LieTable& t) {
  const std::size_t n = t.dim();
  const Field& f = t.field();
  auto cube = bracket_cube(t);
  std::vector<std::size_t> dims{0};
  Subspace z(f, n);
  while (z.dim() < n) {
    // x lies in the next term iff every [x, e_j] is annihilated by z's annihilator.
    std::vector<Vec> ann;
    if (z.dim() == 0) {
      for (std::size_t k = 0; k < n; ++k) ann.push_back(unit_vector(f, n, k));
    } else {
      ann = kernel(z.basis()).basis_vectors();
    }
    Matrix stacked(f, ann.size() * n, n);
    for (std::size_t q = 0; q < ann.size(); ++q)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) {
          Scalar acc(f);
          const Vec& b = cube[i * n + j];
          for (std::size_t k = 0; k < n; ++k)
            if (!ann[q][k].is_zero() && !b[k].is_zero()) acc += ann[q][k] * b[k];
          stacked(q * n + j, i) = acc;
        }
    Subspace next = kernel(stacked);
    if (next.dim() == z.dim()) break;
    z = next;
    dims.push_back(z.dim());
  }
  return dims;
}

namespace {

Vec flatten(const Matrix& m) { return m.entries(); }

Matrix unflatten(const Field& f, std::size_t n, const Vec& v) {
  Matrix m(f, n, n);
  for (std::size_t k = 0; k < n * n; ++k) m(k / n, k % n) = v[k];
  return m;
}

std::size_t ad_algebra_dim(const LieTable& t) {
  const std::size_t n = t.dim();
  const Field& f = t.field();
  if (n == 0) return 0;
  std::vector<Matrix> gens;
  std::vector<Vec> flat;
  for (std::size_t i = 0; i < n; ++i) {
    gens.push_back(ad_matrix(t, unit_vector(f, n, i)));
    flat.push_back(flatten(gens.back()));
  }
  Subspace span = Subspace::span(f, n * n, flat);
  for (;;) {
    std::vector<Vec> all = span.basis_vectors();
    const std::size_t base = all.size();
    for (std::size_t b = 0; b < base; ++b) {
      Matrix m = unflatten(f, n, all[b]);
      for (const Matrix& g : gens) all.push_back(flatten(m * g));
    }
    Subspace next = Subspace::span(f, n * n, all);
    if (next.dim() == span.dim()) return span.dim();
    span = std::move(next);
  }
}

std::vector<std::size_t> ad_rank_counts(const LieTable& t) {
  const Field& f = t.field();
  const std::size_t n = t.dim();
  if (!f.is_prime()) return {};
  const std::uint64_t p = f.characteristic();
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (total > kRankCensusLimit / p) return {};
    total *= p;
  }
  std::vector<Matrix> ads;
  for (std::size_t i = 0; i < n; ++i) ads.push_back(ad_matrix(t, unit_vector(f, n, i)));
  std::vector<std::size_t> counts(n + 1, 0);
  std::vector<long> digits(n, 0);
  for (std::uint64_t code = 0; code < total; ++code) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
      if (digits[i] != 0) m = m + ads[i].scaled(Scalar::from_int(f, digits[i]));
    ++counts[rank(m)];
    for (std::size_t i = 0; i < n; ++i) {
      if (++digits[i] < static_cast<long>(p)) break;
      digits[i] = 0;
    }
  }
  return counts;
}

}  // namespace

HomWitness verify_hom(const LieTable& src, const LieTable& dst, const Matrix& p) {
  require_same_shape(src, dst);
  if (src.dim() != dst.dim() || p.rows() != dst.dim() || p.cols() != src.dim())
    throw Error(ErrorCode::DimensionMismatch, "map does not match table dimensions");
  if (!(p.field() == src.field())) throw Error(ErrorCode::FieldMismatch, "map over a different field");
  HomWitness w{p, table_id(src), table_id(dst), false};
  if (!is_invertible(p)) return w;
  const std::size_t n = src.dim();
  std::vector<Vec> images;
  for (std::size_t i = 0; i < n; ++i) images.push_back(p.col(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!(p * src.bracket(i, j) == dst.bracket(images[i], images[j]))) return w;
  w.verified = true;
  return w;
}

ConjugatedIso conjugated_iso(const SeedPair& seed, const Matrix& t, unsigned d) {
  if (!t.is_square() || t.rows() != seed.n()) throw Error(ErrorCode::DimensionMismatch, "conjugating matrix has wrong size");
  Matrix t_inv = inverse(t);
  SeedPair conjugated = validate_seed(t * seed.matrix() * t_inv, t * seed.w());
  HomWitness witness = verify_hom(structure_constants(seed, d), structure_constants(conjugated, d), induced_matrix(t_inv, d));
  return {std::move(conjugated), std::move(witness)};
}

Fingerprint fingerprint(const LieTable& t) {
  Fingerprint f;
  f.dim = t.dim();
  f.derived_dims = derived_series(t).dims;
  f.lower_central_dims = lower_central_series(t).dims;
  f.upper_central_dims = upper_central_dims(t);
  f.center_dim = center(t).dim();
  Subspace full = Subspace::full(t.field(), t.dim());
  Subspace derived = product_space(t, full, full);
  f.derived_algebra_dim = derived.dim();
  f.derived_centralizer_dim = centralizer(t, derived).dim();
  f.ad_algebra_dim = ad_algebra_dim(t);
  f.ad_rank_counts = ad_rank_counts(t);
  return f;
}

std::uint64_t general_linear_order(std::size_t n, std::uint64_t p) {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  auto sat_mul = [](std::uint64_t a, std::uint64_t b) { return (b != 0 && a > kMax / b) ? kMax : a * b; };
  std::uint64_t pn = 1;
  for (std::size_t k = 0; k < n; ++k) pn = sat_mul(pn, p);
  if (pn == kMax) return kMax;
  std::uint64_t order = 1, pk = 1;
  for (std::size_t k = 0; k < n; ++k) {
    order = sat_mul(order, pn - pk);
    pk *= p;
  }
  return order;
}

namespace {

// Fast search state: the two tables as dense residue cubes.
struct IsoSearch {
  std::size_t n;
  std::uint32_t p;
  std::vector<std::uint32_t> src;  // src[(i*n + j)*n + k]
  std::vector<std::uint32_t> dst;
  std::vector<std::uint32_t> candidate;  // row-major n x n
  std::vector<std::vector<std::uint32_t>> echelon;  // normalized rows of the chosen prefix
  std::vector<std::size_t> echelon_pivot;

  bool is_hom() const {
    std::vector<std::uint64_t> lhs(n), rhs(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        const std::uint32_t* c = &src[(i * n + j) * n];
        for (std::size_t k = 0; k < n; ++k) {
          std::uint64_t acc = 0;
          for (std::size_t m = 0; m < n; ++m) acc += std::uint64_t{candidate[k * n + m]} * c[m] % p;
          lhs[k] = acc % p;
        }
        std::fill(rhs.begin(), rhs.end(), 0);
        for (std::size_t a = 0; a < n; ++a) {
          std::uint64_t pa = candidate[a * n + i];
          if (pa == 0) continue;
          for (std::size_t b = 0; b < n; ++b) {
            std::uint64_t pb = candidate[b * n + j];
            if (pb == 0 || a == b) continue;
            std::uint64_t coef = pa * pb % p;
            const std::uint32_t* e = &dst[(a * n + b) * n];
            for (std::size_t k = 0; k < n; ++k) rhs[k] = (rhs[k] + coef * e[k]) % p;
          }
        }
        for (std::size_t k = 0; k < n; ++k)
          if (lhs[k] != rhs[k]) return false;
      }
    return true;
  }

  // Each stored row is zero on the pivots of the rows before it, so one pass
  // in insertion order clears every pivot. Returns the first nonzero index of
  // the remainder, or n when v lies in the span.
  std::size_t reduce(std::vector<std::uint32_t>& v) const {
    for (std::size_t r = 0; r < echelon.size(); ++r) {
      std::size_t piv = echelon_pivot[r];
      std::uint64_t f = v[piv];
      if (f == 0) continue;
      for (std::size_t k = 0; k < n; ++k) v[k] = static_cast<std::uint32_t>((v[k] + (p - f) * echelon[r][k]) % p);
    }
    for (std::size_t k = 0; k < n; ++k)
      if (v[k] != 0) return k;
    return n;
  }

  bool search(std::size_t row) {
    if (row == n) return is_hom();
    std::vector<std::uint32_t> digits(n, 0);
    std::uint64_t total = 1;
    for (std::size_t k = 0; k < n; ++k) total *= p;
    for (std::uint64_t code = 0; code < total; ++code) {
      // digits in lexicographic order, first entry most significant
      std::uint64_t rest = code;
      for (std::size_t k = n; k-- > 0;) {
        digits[k] = static_cast<std::uint32_t>(rest % p);
        rest /= p;
      }
      std::vector<std::uint32_t> reduced = digits;
      std::size_t piv = reduce(reduced);
      if (piv == n) continue;
      std::uint64_t inv = mod_inverse(reduced[piv], p);
      for (auto& x : reduced) x = static_cast<std::uint32_t>(x * inv % p);
      echelon.push_back(reduced);
      echelon_pivot.push_back(piv);
      std::copy(digits.begin(), digits.end(), candidate.begin() + static_cast<std::ptrdiff_t>(row * n));
      if (search(row + 1)) return true;
      echelon.pop_back();
      echelon_pivot.pop_back();
    }
    return false;
  }
};

std::vector<std::uint32_t> residue_cube(const LieTable& t) {
  const std::size_t n = t.dim();
  std::vector<std::uint32_t> cube(n * n * n, 0);
  std::uint32_t p = static_cast<std::uint32_t>(t.field().characteristic());
  for (const auto& [key, value] : t.constants()) {
    auto [i, j] = key;
    for (std::size_t k = 0; k < n; ++k) {
      auto r = static_cast<std::uint32_t>(value[k].residue());
      cube[(i * n + j) * n + k] = r;
      cube[(j * n + i) * n + k] = r == 0 ? 0 : p - r;
    }
  }
  return cube;
}

}  // namespace

std::optional<HomWitness> brute_force_iso(const LieTable& t1, const LieTable& t2, std::uint64_t budget) {
  require_same_shape(t1, t2);
  if (!t1.field().is_prime()) throw Error(ErrorCode::InvalidArgument, "exhaustive isomorphism search needs a prime field");
  if (t1.dim() != t2.dim()) return std::nullopt;
  if (!(fingerprint(t1) == fingerprint(t2))) return std::nullopt;
  const std::size_t n = t1.dim();
  const std::uint64_t p = t1.field().characteristic();
  const std::uint64_t order = general_linear_order(n, p);
  if (order > budget)
    throw Error(ErrorCode::BudgetExceeded, "|GL_" + std::to_string(n) + "(F_" + std::to_string(p) + ")| exceeds the search budget of " + std::to_string(budget));

  IsoSearch search{n, static_cast<std::uint32_t>(p), residue_cube(t1), residue_cube(t2), std::vector<std::uint32_t>(n * n, 0), {}, {}};
  if (!search.search(0)) return std::nullopt;

  Matrix map(t1.field(), n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) map(r, c) = Scalar::from_int(t1.field(), static_cast<long>(search.candidate[r * n + c]));
  HomWitness witness = verify_hom(t1, t2, map);
  if (!witness.verified) throw std::logic_error("residue search returned a map that fails exact verification");
  return witness;
}

}  // namespace symlie
