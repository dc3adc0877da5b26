#include "symlie/orbits.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace symlie {

namespace {

using Code = std::vector<std::uint32_t>;  // entries of A row-major, then w

Code mul(const Code& x, const Code& y, std::size_t n, std::uint64_t p) {
  Code out(n * n, 0);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      std::uint64_t acc = 0;
      for (std::size_t k = 0; k < n; ++k) acc += std::uint64_t{x[r * n + k]} * y[k * n + c] % p;
      out[r * n + c] = static_cast<std::uint32_t>(acc % p);
    }
  return out;
}

Code apply(const Code& x, const std::uint32_t* v, std::size_t n, std::uint64_t p) {
  Code out(n, 0);
  for (std::size_t r = 0; r < n; ++r) {
    std::uint64_t acc = 0;
    for (std::size_t k = 0; k < n; ++k) acc += std::uint64_t{x[r * n + k]} * v[k] % p;
    out[r] = static_cast<std::uint32_t>(acc % p);
  }
  return out;
}

// Gauss-Jordan inverse mod p; false when singular.
bool invert(const Code& m, std::size_t n, std::uint64_t p, Code& out) {
  Code aug(n * 2 * n, 0);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug[r * 2 * n + c] = m[r * n + c];
    aug[r * 2 * n + n + r] = 1;
  }
  const std::size_t w = 2 * n;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && aug[piv * w + c] == 0) ++piv;
    if (piv == n) return false;
    for (std::size_t k = 0; k < w; ++k) std::swap(aug[piv * w + k], aug[c * w + k]);
    std::uint64_t inv = mod_inverse(aug[c * w + c], p);
    for (std::size_t k = 0; k < w; ++k) aug[c * w + k] = static_cast<std::uint32_t>(aug[c * w + k] * inv % p);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || aug[r * w + c] == 0) continue;
      std::uint64_t f = aug[r * w + c];
      for (std::size_t k = 0; k < w; ++k) aug[r * w + k] = static_cast<std::uint32_t>((aug[r * w + k] + (p - f) * aug[c * w + k]) % p);
    }
  }
  out.assign(n * n, 0);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out[r * n + c] = aug[r * w + n + c];
  return true;
}

bool increment(Code& digits, std::uint64_t p) {
  for (std::size_t k = digits.size(); k-- > 0;) {
    if (++digits[k] < p) return true;
    digits[k] = 0;
  }
  return false;
}

std::uint64_t checked_power(std::uint64_t p, std::size_t e, std::uint64_t budget) {
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < e; ++k) {
    if (total > budget / p) return budget + 1;
    total *= p;
  }
  return total;
}

bool is_eigen_pair(const Code& code, std::size_t n, std::uint64_t p) {
  const std::uint32_t* w = code.data() + n * n;
  Code image = apply(Code(code.begin(), code.begin() + static_cast<std::ptrdiff_t>(n * n)), w, n, p);
  std::size_t j = 0;
  while (j < n && w[j] == 0) ++j;
  if (j == n) return true;
  std::uint64_t lambda = image[j] * mod_inverse(w[j], p) % p;
  for (std::size_t k = 0; k < n; ++k)
    if (image[k] != lambda * w[k] % p) return false;
  return true;
}

std::vector<Code> enumerate_codes(unsigned n, std::uint64_t p, bool include_zero_w, std::uint64_t budget) {
  Field::prime(p);
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "n must be at least 1");
  const std::size_t len = std::size_t{n} * n + n;
  if (checked_power(p, len, budget) > budget)
    throw Error(ErrorCode::BudgetExceeded, "p^(n^2+n) exceeds the enumeration budget of " + std::to_string(budget));
  std::vector<Code> out;
  Code code(len, 0);
  do {
    bool zero_w = std::all_of(code.begin() + static_cast<std::ptrdiff_t>(n * n), code.end(), [](std::uint32_t x) { return x == 0; });
    if (zero_w && !include_zero_w) continue;
    if (is_eigen_pair(code, n, p)) out.push_back(code);
  } while (increment(code, p));
  return out;
}

std::vector<std::pair<Code, Code>> group_elements(unsigned n, std::uint64_t p, std::uint64_t budget) {
  if (general_linear_order(n, p) > budget)
    throw Error(ErrorCode::BudgetExceeded, "|GL_" + std::to_string(n) + "(F_" + std::to_string(p) + ")| exceeds the budget of " + std::to_string(budget));
  std::vector<std::pair<Code, Code>> out;
  Code t(std::size_t{n} * n, 0), inv;
  do {
    if (invert(t, n, p, inv)) out.emplace_back(t, inv);
  } while (increment(t, p));
  return out;
}

Code act(const std::pair<Code, Code>& g, const Code& pair, std::size_t n, std::uint64_t p) {
  Code a(pair.begin(), pair.begin() + static_cast<std::ptrdiff_t>(n * n));
  Code conj = mul(mul(g.first, a, n, p), g.second, n, p);
  Code w = apply(g.first, pair.data() + n * n, n, p);
  conj.insert(conj.end(), w.begin(), w.end());
  return conj;
}

SeedPair to_seed(const Code& code, std::size_t n, std::uint64_t p) {
  Field field = Field::prime(p);
  Matrix a(field, n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) a(r, c) = Scalar::from_int(field, code[r * n + c]);
  Vec w;
  for (std::size_t k = 0; k < n; ++k) w.push_back(Scalar::from_int(field, code[n * n + k]));
  return validate_seed(a, w);
}

Code to_code(const SeedPair& seed) {
  if (!seed.field().is_prime()) throw Error(ErrorCode::InvalidArgument, "orbit computations need a prime field");
  Code code;
  for (const auto& x : seed.matrix().entries()) code.push_back(static_cast<std::uint32_t>(x.residue()));
  for (const auto& x : seed.w()) code.push_back(static_cast<std::uint32_t>(x.residue()));
  return code;
}

}  // namespace

std::vector<SeedPair> enumerate_M(unsigned n, std::uint64_t p, bool include_zero_w, std::uint64_t budget) {
  std::vector<SeedPair> out;
  for (const auto& code : enumerate_codes(n, p, include_zero_w, budget)) out.push_back(to_seed(code, n, p));
  return out;
}

OrbitReport gl_orbits(unsigned n, std::uint64_t p, bool include_zero_w, std::uint64_t budget, std::uint64_t group_budget) {
  auto codes = enumerate_codes(n, p, include_zero_w, budget);
  auto group = group_elements(n, p, group_budget);

  OrbitReport report;
  report.n = n;
  report.p = p;
  report.include_zero_w = include_zero_w;
  report.pair_count = codes.size();
  report.group_order = group.size();

  // codes are generated in increasing order, so the first unvisited code is
  // the least element of its orbit
  std::map<Code, bool> visited;
  for (const auto& c : codes) visited.emplace(c, false);
  for (const auto& c : codes) {
    if (visited[c]) continue;
    std::size_t size = 0;
    for (const auto& g : group) {
      Code image = act(g, c, n, p);
      auto it = visited.find(image);
      if (it == visited.end()) throw std::logic_error("conjugation left the eigenpair variety");
      if (!it->second) {
        it->second = true;
        ++size;
      }
    }
    report.representatives.push_back(to_seed(c, n, p));
    report.orbit_sizes.push_back(size);
  }
  report.orbit_count = report.representatives.size();
  return report;
}

std::vector<SeedPair> orbit(const SeedPair& seed, std::uint64_t group_budget) {
  const std::size_t n = seed.n();
  const std::uint64_t p = seed.field().characteristic();
  Code c = to_code(seed);
  std::map<Code, bool> members;
  for (const auto& g : group_elements(static_cast<unsigned>(n), p, group_budget)) members.emplace(act(g, c, n, p), true);
  std::vector<SeedPair> out;
  for (const auto& [code, _] : members) out.push_back(to_seed(code, n, p));
  return out;
}

std::vector<Vec> eigendirections(const Matrix& a) {
  if (!a.is_square()) throw Error(ErrorCode::DimensionMismatch, "eigendirections need a square matrix");
  const Field& field = a.field();
  if (!field.is_prime()) throw Error(ErrorCode::InvalidArgument, "eigendirections are enumerated over F_p only");
  const std::uint64_t p = field.characteristic();
  const std::size_t n = a.rows();
  const Matrix id = Matrix::identity(field, n);
  std::vector<Vec> out;
  for (std::uint64_t lambda = 0; lambda < p; ++lambda) {
    Subspace eigen = kernel(a - id.scaled(Scalar::from_int(field, static_cast<long>(lambda))));
    auto basis = eigen.basis_vectors();
    const std::size_t m = basis.size();
    if (m == 0) continue;
    // Coefficient vectors whose first nonzero entry is 1; on an RREF basis this
    // normalizes the first nonzero coordinate of the combination as well.
    for (std::size_t lead = 0; lead < m; ++lead) {
      Code tail(m - lead - 1, 0);
      do {
        Vec v = basis[lead];
        for (std::size_t k = 0; k < tail.size(); ++k)
          axpy(v, Scalar::from_int(field, tail[k]), basis[lead + 1 + k]);
        out.push_back(std::move(v));
      } while (increment(tail, p));
    }
  }
  return out;
}

IsoClassReport iso_class_count(unsigned n, std::uint64_t p, unsigned d, bool include_zero_w, std::uint64_t budget,
                               std::uint64_t iso_budget) {
  IsoClassReport report;
  report.n = n;
  report.p = p;
  report.degree = d;
  report.include_zero_w = include_zero_w;
  report.orbits = gl_orbits(n, p, include_zero_w, budget, iso_budget);
  report.orbit_count = report.orbits.orbit_count;

  std::vector<LieTable> class_tables;
  for (const auto& rep : report.orbits.representatives) {
    LieTable table = structure_constants(rep, d);
    std::size_t found = class_tables.size();
    for (std::size_t k = 0; k < class_tables.size(); ++k) {
      if (brute_force_iso(table, class_tables[k], iso_budget)) {
        found = k;
        break;
      }
    }
    if (found == class_tables.size()) class_tables.push_back(std::move(table));
    report.class_of_orbit.push_back(found);
  }
  report.class_count = class_tables.size();
  report.inequality_holds = report.class_count <= report.orbit_count;
  return report;
}

}  // namespace symlie
