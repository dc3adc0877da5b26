#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "generators.hpp"
#include "symlie/orbits.hpp"

using namespace symlie;
using namespace symlie::testing;

namespace {

// Frozen from an independent exhaustive scan (Python, plain integer arithmetic).
constexpr std::size_t kPairsN2P2 = 24;
constexpr std::size_t kPairsN2P2WithZero = 40;
constexpr std::size_t kOrbitsN2P2 = 6;
constexpr std::size_t kOrbitsN2P2WithZero = 12;
constexpr std::size_t kClassesN2P2D1 = 2;
constexpr std::size_t kClassesN2P2D2 = 4;
constexpr std::size_t kPairsN2P3 = 216;
constexpr std::size_t kOrbitsN2P3 = 12;

std::vector<Matrix> group(unsigned n, std::uint64_t p) {
  const Field f = Field::prime(p);
  std::vector<Matrix> out;
  std::size_t total = 1;
  for (unsigned k = 0; k < n * n; ++k) total *= p;
  for (std::size_t code = 0; code < total; ++code) {
    Matrix m(f, n, n);
    std::size_t c = code;
    for (unsigned k = 0; k < n * n; ++k, c /= p) m(k / n, k % n) = Scalar::from_int(f, static_cast<long>(c % p));
    if (is_invertible(m)) out.push_back(m);
  }
  return out;
}

// Burnside: orbit count = average number of fixed pairs.
std::size_t burnside_orbit_count(unsigned n, std::uint64_t p, bool include_zero_w) {
  std::vector<SeedPair> pairs = enumerate_M(n, p, include_zero_w);
  std::vector<Matrix> g = group(n, p);
  std::size_t fixed = 0;
  for (const Matrix& t : g) {
    Matrix ti = inverse(t);
    for (const SeedPair& s : pairs)
      if (t * s.matrix() * ti == s.matrix() && t * s.w() == s.w()) ++fixed;
  }
  EXPECT_EQ(fixed % g.size(), 0u);
  return fixed / g.size();
}

TEST(EnumerateM, OneByOne) {
  EXPECT_EQ(enumerate_M(1, 2, true).size(), 4u);
  EXPECT_EQ(enumerate_M(1, 2, false).size(), 2u);
}

TEST(EnumerateM, TwoByTwoOverF2) {
  std::vector<SeedPair> m = enumerate_M(2, 2, false);
  EXPECT_EQ(m.size(), kPairsN2P2);
  EXPECT_EQ(enumerate_M(2, 2, true).size(), kPairsN2P2WithZero);
  for (const SeedPair& s : m) EXPECT_NO_THROW(validate_seed(s.matrix(), s.w()));
  for (const SeedPair& s : m) EXPECT_FALSE(is_zero(s.w()));
}

TEST(EnumerateM, BudgetExceeded) {
  try {
    enumerate_M(3, 5, false);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BudgetExceeded);
  }
  EXPECT_THROW(enumerate_M(2, 4, false), Error);
}

TEST(GlOrbits, OneByOne) {
  OrbitReport r = gl_orbits(1, 3, false);
  EXPECT_EQ(r.pair_count, 6u);
  EXPECT_EQ(r.orbit_count, 3u);
  EXPECT_EQ(r.orbit_sizes, (std::vector<std::size_t>{2, 2, 2}));
  OrbitReport z = gl_orbits(1, 3, true);
  EXPECT_EQ(z.orbit_count, 6u);
}

TEST(GlOrbits, FrozenCounts) {
  OrbitReport r = gl_orbits(2, 2, false);
  EXPECT_EQ(r.pair_count, kPairsN2P2);
  EXPECT_EQ(r.orbit_count, kOrbitsN2P2);
  EXPECT_EQ(r.group_order, 6u);
  OrbitReport z = gl_orbits(2, 2, true);
  EXPECT_EQ(z.pair_count, kPairsN2P2WithZero);
  EXPECT_EQ(z.orbit_count, kOrbitsN2P2WithZero);
  OrbitReport r3 = gl_orbits(2, 3, false);
  EXPECT_EQ(r3.pair_count, kPairsN2P3);
  EXPECT_EQ(r3.orbit_count, kOrbitsN2P3);
}

TEST(GlOrbits, AgreesWithBurnside) {
  for (auto [n, p] : {std::pair{1u, 5u}, std::pair{2u, 2u}, std::pair{2u, 3u}})
    for (bool z : {false, true}) EXPECT_EQ(gl_orbits(n, p, z).orbit_count, burnside_orbit_count(n, p, z));
}

TEST(GlOrbits, PartitionIsWellFormed) {
  for (std::uint64_t p : {2u, 3u})
    for (bool z : {false, true}) {
      OrbitReport r = gl_orbits(2, p, z);
      EXPECT_EQ(std::accumulate(r.orbit_sizes.begin(), r.orbit_sizes.end(), std::size_t{0}), r.pair_count);
      for (std::size_t size : r.orbit_sizes) EXPECT_EQ(r.group_order % size, 0u);
      for (std::size_t i = 0; i < r.representatives.size(); ++i) {
        std::vector<SeedPair> orb = orbit(r.representatives[i]);
        EXPECT_EQ(orb.size(), r.orbit_sizes[i]);
        EXPECT_EQ(orb.front(), r.representatives[i]);
        for (std::size_t j = 0; j < r.representatives.size(); ++j)
          if (j != i) EXPECT_EQ(std::count(orb.begin(), orb.end(), r.representatives[j]), 0);
      }
    }
}

TEST(Orbit, IdentityWithE1OverF2) {
  const Field f2 = Field::prime(2);
  std::vector<SeedPair> orb = orbit(validate_seed(Matrix::identity(f2, 2), field_vec(f2, {1, 0})));
  ASSERT_EQ(orb.size(), 3u);
  for (const SeedPair& s : orb) {
    EXPECT_EQ(s.matrix(), Matrix::identity(f2, 2));
    EXPECT_FALSE(is_zero(s.w()));
  }
}

TEST(Orbit, ConjugatesLandInTheSameOrbit) {
  Rng rng(17);
  for (int k = 0; k < 100; ++k) {
    std::uint64_t p = uniform(rng, 0, 1) ? 2 : 3;
    const Field f = Field::prime(p);
    SeedPair s = random_seed(rng, f, 2);
    Matrix t = random_invertible(rng, f, 2);
    SeedPair c = validate_seed(t * s.matrix() * inverse(t), t * s.w());
    std::vector<SeedPair> orb = orbit(s);
    EXPECT_EQ(std::count(orb.begin(), orb.end(), c), 1);
  }
}

TEST(Eigendirections, Examples) {
  const Field f3 = Field::prime(3), f2 = Field::prime(2);
  EXPECT_EQ(eigendirections(Matrix::identity(f3, 2)).size(), 4u);
  std::vector<Vec> nil = eigendirections(Matrix::from_ints(f2, {{0, 1}, {0, 0}}));
  ASSERT_EQ(nil.size(), 1u);
  EXPECT_EQ(nil[0], field_vec(f2, {1, 0}));
  // x^2 + x + 1 has no root mod 2.
  EXPECT_TRUE(eigendirections(Matrix::from_ints(f2, {{0, 1}, {1, 1}})).empty());
  EXPECT_THROW(eigendirections(Matrix::identity(Field::rational(), 2)), Error);
}

TEST(Eigendirections, CountMatchesEigenspaceFormula) {
  Rng rng(18);
  for (int k = 0; k < 60; ++k) {
    std::uint64_t p = static_cast<std::uint64_t>(uniform(rng, 0, 2) == 0 ? 2 : (uniform(rng, 0, 1) ? 3 : 5));
    const Field f = Field::prime(p);
    std::size_t n = static_cast<std::size_t>(uniform(rng, 1, 3));
    Matrix a = random_matrix(rng, f, n, n, 4);
    std::size_t expected = 0;
    for (std::uint64_t l = 0; l < p; ++l) {
      std::size_t m = kernel(a - Matrix::identity(f, n).scaled(Scalar::from_int(f, static_cast<long>(l)))).dim();
      std::size_t pm = 1;
      for (std::size_t e = 0; e < m; ++e) pm *= p;
      expected += (pm - 1) / (p - 1);
    }
    std::vector<Vec> dirs = eigendirections(a);
    EXPECT_EQ(dirs.size(), expected);
    for (const Vec& v : dirs) {
      EXPECT_NO_THROW(validate_seed(a, v));
      auto first = std::find_if(v.begin(), v.end(), [](const Scalar& s) { return !s.is_zero(); });
      ASSERT_NE(first, v.end());
      EXPECT_TRUE(first->is_one());
    }
  }
}

TEST(IsoClassCount, FrozenCountsAndInequality) {
  IsoClassReport d1 = iso_class_count(2, 2, 1, false);
  EXPECT_EQ(d1.orbit_count, kOrbitsN2P2);
  EXPECT_EQ(d1.class_count, kClassesN2P2D1);
  EXPECT_TRUE(d1.inequality_holds);
  IsoClassReport d2 = iso_class_count(2, 2, 2, false);
  EXPECT_EQ(d2.orbit_count, kOrbitsN2P2);
  EXPECT_EQ(d2.class_count, kClassesN2P2D2);
  EXPECT_TRUE(d2.inequality_holds);
  EXPECT_EQ(iso_class_count(2, 2, 2, true).class_count, kClassesN2P2D2);
}

TEST(IsoClassCount, UnipotentAndIdentityMerge) {
  const Field f2 = Field::prime(2);
  IsoClassReport r = iso_class_count(2, 2, 1, false);
  auto class_of = [&](const SeedPair& s) {
    for (std::size_t i = 0; i < r.orbits.representatives.size(); ++i) {
      std::vector<SeedPair> orb = orbit(r.orbits.representatives[i]);
      if (std::count(orb.begin(), orb.end(), s)) return r.class_of_orbit[i];
    }
    ADD_FAILURE();
    return std::size_t{0};
  };
  SeedPair id = validate_seed(Matrix::identity(f2, 2), field_vec(f2, {1, 0}));
  SeedPair uni = validate_seed(Matrix::from_ints(f2, {{1, 1}, {0, 1}}), field_vec(f2, {1, 0}));
  EXPECT_NE(std::find(r.orbits.representatives.begin(), r.orbits.representatives.end(),
                      orbit(id).front()), r.orbits.representatives.end());
  EXPECT_EQ(class_of(id), class_of(uni));
  EXPECT_FALSE(structure_constants(id, 1).is_abelian());
}

TEST(IsoClassCount, ZeroWOrbitsAreAllAbelian) {
  for (unsigned d : {1u, 2u}) {
    IsoClassReport r = iso_class_count(2, 2, d, true);
    std::optional<std::size_t> abelian_class;
    for (std::size_t i = 0; i < r.orbits.representatives.size(); ++i) {
      if (!is_zero(r.orbits.representatives[i].w())) continue;
      if (!abelian_class) abelian_class = r.class_of_orbit[i];
      EXPECT_EQ(r.class_of_orbit[i], *abelian_class);
    }
    ASSERT_TRUE(abelian_class.has_value());
  }
}

TEST(IsoClassCount, SameOrbitTablesAreLinked) {
  Rng rng(19);
  for (int k = 0; k < 20; ++k) {
    std::uint64_t p = uniform(rng, 0, 1) ? 2 : 3;
    const Field f = Field::prime(p);
    unsigned d = static_cast<unsigned>(uniform(rng, 1, 2));
    SeedPair s = random_seed(rng, f, 2);
    std::vector<SeedPair> orb = orbit(s);
    const SeedPair& other = orb[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(orb.size()) - 1))];
    LieTable t1 = structure_constants(s, d), t2 = structure_constants(other, d);
    auto w = brute_force_iso(t1, t2);
    ASSERT_TRUE(w.has_value());
    EXPECT_TRUE(verify_hom(t1, t2, w->map).verified);
  }
}

TEST(IsoClassCount, ClassesNeverExceedOrbits) {
  for (std::uint64_t p : {2u, 3u})
    for (unsigned d : {1u, 2u}) {
      IsoClassReport r = iso_class_count(2, p, d, false);
      EXPECT_TRUE(r.inequality_holds);
      EXPECT_LE(r.class_count, r.orbit_count);
    }
}

}  // namespace
