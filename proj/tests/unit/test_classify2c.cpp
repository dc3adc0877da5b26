#include <gtest/gtest.h>

#include "generators.hpp"
#include "symlie/classify2c.hpp"

using namespace symlie;
using namespace symlie::testing;

namespace {

const Field kQi = Field::gaussian();

Scalar qi(long v) { return Scalar::from_int(kQi, v); }
Vec qi_vec(std::initializer_list<long> v) { return field_vec(kQi, v); }

TEST(JordanForm, DefectiveUnipotent) {
  JordanForm2 j = jordan_form_2x2(Matrix::from_ints(kQi, {{1, 0}, {3, 1}}));
  EXPECT_EQ(j.kind, JordanForm2::Kind::JordanBlock);
  EXPECT_EQ(j.lambda1, qi(1));
  Matrix a = Matrix::from_ints(kQi, {{1, 0}, {3, 1}});
  EXPECT_EQ(a * j.transform, j.transform * j.normal_form());
}

TEST(JordanForm, AlreadyDiagonal) {
  JordanForm2 j = jordan_form_2x2(Matrix::diagonal(kQi, qi_vec({2, 6})));
  EXPECT_EQ(j.kind, JordanForm2::Kind::Diagonal);
  EXPECT_EQ(j.lambda1, qi(2));
  EXPECT_EQ(j.lambda2, qi(6));
  EXPECT_EQ(j.transform, Matrix::identity(kQi, 2));
}

TEST(JordanForm, RotationHasRootsPlusMinusI) {
  Matrix a = Matrix::from_ints(kQi, {{0, -1}, {1, 0}});
  JordanForm2 j = jordan_form_2x2(a);
  EXPECT_EQ(j.kind, JordanForm2::Kind::Diagonal);
  EXPECT_EQ(j.lambda1, Scalar::imaginary_unit());
  EXPECT_EQ(j.lambda2, -Scalar::imaginary_unit());
  EXPECT_EQ(a * j.transform, j.transform * j.normal_form());
}

TEST(JordanForm, IrrationalEigenvaluesRejected) {
  try {
    jordan_form_2x2(Matrix::from_ints(kQi, {{0, 2}, {1, 0}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EigenvaluesNotInField);
  }
  EXPECT_THROW(jordan_form_2x2(Matrix::from_ints(Field::rational(), {{0, -1}, {1, 0}})), Error);
  EXPECT_THROW(jordan_form_2x2(Matrix::identity(Field::prime(5), 2)), Error);
  EXPECT_THROW(jordan_form_2x2(Matrix::identity(kQi, 3)), Error);
}

TEST(JordanForm, RandomConjugatesDecompose) {
  Rng rng(8);
  for (int k = 0; k < 100; ++k) {
    Matrix t = random_invertible(rng, kQi, 2);
    Matrix u = random_upper_triangular(rng, kQi, 2);
    Matrix a = t * u * inverse(t);
    JordanForm2 j = jordan_form_2x2(a);
    EXPECT_EQ(a * j.transform, j.transform * j.normal_form());
    EXPECT_TRUE(is_invertible(j.transform));
    if (u(0, 0) == u(1, 1)) {
      bool scalar = u(0, 1).is_zero();
      EXPECT_EQ(j.kind == JordanForm2::Kind::Diagonal, scalar);
    }
  }
}

TEST(FamilyTable, G1) {
  LieTable t = family_table({Family::G1, std::nullopt, ""}, 2);
  EXPECT_EQ(t.constants().size(), 2u);
  EXPECT_EQ(t.bracket(0, 1), qi_vec({0, 1, 0}));
  EXPECT_EQ(t.bracket(0, 2), qi_vec({0, 0, 1}));
  EXPECT_EQ(t.labels(), (std::vector<std::string>{"y0", "y1", "y2"}));
}

TEST(FamilyTable, G2) {
  LieTable t = family_table({Family::G2, qi(3), ""}, 2);
  EXPECT_EQ(t.bracket(0, 1), qi_vec({0, 1, 0}));
  EXPECT_EQ(t.bracket(0, 2), qi_vec({0, 0, 3}));
  EXPECT_EQ(t.constants().size(), 2u);
}

TEST(FamilyTable, G3AtOne) {
  LieTable t = family_table({Family::G3, qi(1), ""}, 2);
  EXPECT_EQ(t.bracket(0, 1), qi_vec({0, 1, 1}));
  EXPECT_EQ(t.bracket(0, 2), qi_vec({0, 0, 1}));
  EXPECT_EQ(t.constants().size(), 2u);
}

TEST(FamilyTable, G3MatchesClosedFormForLargerDegree) {
  // [y0, y_i] = c^(i-1) sum_j binom(d-i, j) c^j y_(d-j), with binomials by Pascal's rule.
  const unsigned d = 5;
  Scalar c = Scalar::gaussian(2, -1);
  LieTable t = family_table({Family::G3, c, ""}, d);
  std::vector<std::vector<long>> binom(d + 1, std::vector<long>(d + 1, 0));
  for (unsigned a = 0; a <= d; ++a) {
    binom[a][0] = 1;
    for (unsigned b = 1; b <= a; ++b) binom[a][b] = binom[a - 1][b - 1] + (b < a ? binom[a - 1][b] : 0);
  }
  for (unsigned i = 1; i <= d; ++i) {
    Vec expected = zero_vector(kQi, d + 1);
    for (unsigned j = 0; j <= d - i; ++j) expected[d - j] += c.pow(i - 1) * qi(binom[d - i][j]) * c.pow(j);
    EXPECT_EQ(t.bracket(0, i), expected) << "i = " << i;
  }
}

TEST(FamilyTable, InvalidParameters) {
  EXPECT_THROW(family_table({Family::G2, std::nullopt, ""}, 2), Error);
  EXPECT_THROW(family_table({Family::G2, qi(0), ""}, 2), Error);
  EXPECT_THROW(family_table({Family::G3, qi(0), ""}, 2), Error);
  EXPECT_THROW(family_table({Family::OutsideFamilies, std::nullopt, "x"}, 2), Error);
  EXPECT_TRUE(family_table({Family::Abelian, std::nullopt, ""}, 3).is_abelian());
}

void expect_witness(const SeedPair& s, unsigned d, const Classification& c) {
  ASSERT_TRUE(c.witness.has_value());
  EXPECT_TRUE(c.witness->verified);
  EXPECT_TRUE(verify_hom(structure_constants(s, d), family_table(c.label, d, s.field()), c.witness->map).verified);
}

TEST(Classify, ScalarMatrixIsG1) {
  SeedPair s = validate_seed(Matrix::from_ints(kQi, {{2, 0}, {0, 2}}), qi_vec({7, 5}));
  Classification c = classify(s, 3);
  EXPECT_EQ(c.label.family, Family::G1);
  EXPECT_FALSE(c.label.parameter.has_value());
  expect_witness(s, 3, c);
}

TEST(Classify, DistinctEigenvaluesIsG2) {
  SeedPair s = validate_seed(Matrix::diagonal(kQi, qi_vec({2, 6})), qi_vec({1, 0}));
  Classification c = classify(s, 2);
  EXPECT_EQ(c.label.family, Family::G2);
  EXPECT_EQ(c.label.parameter, qi(3));
  expect_witness(s, 2, c);
}

TEST(Classify, JordanBlockIsG3) {
  SeedPair s = validate_seed(Matrix::from_ints(kQi, {{5, 1}, {0, 5}}), qi_vec({1, 0}));
  Classification c = classify(s, 2);
  EXPECT_EQ(c.label.family, Family::G3);
  EXPECT_EQ(c.label.parameter, qi(5));
  expect_witness(s, 2, c);
}

TEST(Classify, NilpotentJordanBlockIsAbelian) {
  SeedPair s = validate_seed(Matrix::from_ints(kQi, {{0, 1}, {0, 0}}), qi_vec({1, 0}));
  for (unsigned d = 1; d <= 4; ++d) {
    Classification c = classify(s, d);
    EXPECT_EQ(c.label.family, Family::Abelian);
    EXPECT_TRUE(structure_constants(s, d).is_abelian());
    expect_witness(s, d, c);
  }
}

TEST(Classify, ZeroAxisGapIsOutsideFamilies) {
  SeedPair s = validate_seed(Matrix::diagonal(kQi, qi_vec({0, 1})), qi_vec({1, 0}));
  for (unsigned d = 2; d <= 4; ++d) {
    Classification c = classify(s, d);
    EXPECT_EQ(c.label.family, Family::OutsideFamilies);
    EXPECT_FALSE(c.witness.has_value());
    EXPECT_EQ(c.fingerprint.center_dim, d - 1);
    EXPECT_NE(c.label.detail.find("center dim " + std::to_string(d - 1)), std::string::npos);
  }
  Classification d1 = classify(s, 1);
  EXPECT_EQ(d1.label.family, Family::G1);
  expect_witness(s, 1, d1);
}

TEST(Classify, ZeroWIsAbelian) {
  SeedPair s = validate_seed(Matrix::from_ints(kQi, {{1, 2}, {3, 4}}), qi_vec({0, 0}));
  EXPECT_EQ(classify(s, 2).label.family, Family::Abelian);
}

TEST(Classify, RationalInputAccepted) {
  const Field q = Field::rational();
  SeedPair s = validate_seed(Matrix::diagonal(q, q_vec({2, 6})), q_vec({1, 0}));
  Classification c = classify(s, 2);
  EXPECT_EQ(c.label.family, Family::G2);
  expect_witness(s, 2, c);
}

TEST(Classify, Preconditions) {
  const Field f5 = Field::prime(5);
  EXPECT_THROW(classify(validate_seed(Matrix::identity(f5, 2), field_vec(f5, {1, 0})), 2), Error);
  EXPECT_THROW(classify(validate_seed(Matrix::identity(kQi, 3), qi_vec({1, 0, 0})), 2), Error);
  EXPECT_THROW(classify(validate_seed(Matrix::identity(kQi, 2), qi_vec({1, 0})), 0), Error);
}

// Random seed over Q(i) with eigenvalues in Q(i), built from a random Jordan shape.
SeedPair random_classifiable_seed(Rng& rng) {
  Matrix t = random_invertible(rng, kQi, 2);
  Matrix j(kQi, 2, 2);
  j(0, 0) = random_scalar(rng, kQi, 3);
  switch (uniform(rng, 0, 2)) {
    case 0: j(1, 1) = j(0, 0); break;
    case 1: j(1, 1) = j(0, 0); j(0, 1) = qi(1); break;
    default: j(1, 1) = random_scalar(rng, kQi, 3); break;
  }
  return validate_seed(t * j * inverse(t), scale(random_nonzero(rng, kQi), t.col(0)));
}

TEST(ClassifyProperties, WitnessesAreConsistent) {
  Rng rng(90);
  for (int k = 0; k < 60; ++k) {
    SeedPair s = random_classifiable_seed(rng);
    unsigned d = static_cast<unsigned>(uniform(rng, 1, 3));
    Classification c = classify(s, d);
    if (c.label.family == Family::OutsideFamilies) continue;
    expect_witness(s, d, c);
  }
}

TEST(ClassifyProperties, ScalingWKeepsLabel) {
  Rng rng(91);
  for (int k = 0; k < 60; ++k) {
    SeedPair s = random_classifiable_seed(rng);
    unsigned d = static_cast<unsigned>(uniform(rng, 1, 3));
    SeedPair scaled = validate_seed(s.matrix(), scale(random_nonzero(rng, kQi), s.w()));
    Classification a = classify(s, d), b = classify(scaled, d);
    EXPECT_EQ(a.label.family, b.label.family);
    EXPECT_EQ(a.label.parameter, b.label.parameter);
  }
}

TEST(ClassifyProperties, ConjugationKeepsLabel) {
  Rng rng(92);
  for (int k = 0; k < 60; ++k) {
    SeedPair s = random_classifiable_seed(rng);
    unsigned d = static_cast<unsigned>(uniform(rng, 1, 3));
    ConjugatedIso ci = conjugated_iso(s, random_invertible(rng, kQi, 2), d);
    Classification a = classify(s, d), b = classify(ci.seed, d);
    EXPECT_EQ(a.label.family, b.label.family);
    EXPECT_EQ(a.label.parameter, b.label.parameter);
  }
}

TEST(ClassifyProperties, G2DiffersFromG1ByAdEigenvalues) {
  Rng rng(93);
  for (int k = 0; k < 30; ++k) {
    Scalar c = random_nonzero(rng, kQi, 5);
    if (c.is_one()) continue;
    unsigned d = static_cast<unsigned>(uniform(rng, 2, 4));
    LieTable g2 = family_table({Family::G2, c, ""}, d);
    LieTable g1 = family_table({Family::G1, std::nullopt, ""}, d);
    // Eigenvalue 1 of ad(y0) has multiplicity d in G1 and fewer in G2(c).
    Vec y0 = unit_vector(kQi, d + 1, 0);
    Matrix id = Matrix::identity(kQi, d + 1);
    EXPECT_EQ(rank(ad_matrix(g1, y0) - id), 1u);
    EXPECT_GT(rank(ad_matrix(g2, y0) - id), 1u);
    // The rank-based fingerprint cannot see this difference.
    EXPECT_NE(fingerprint(g2), fingerprint(g1));
  }
}

}  // namespace
