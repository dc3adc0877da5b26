#pragma once

#include <optional>
#include <string>

#include "symlie/lieanalysis.hpp"

namespace symlie {

/// Jordan normal form of a 2x2 matrix with A = transform * J * transform^-1.
struct JordanForm2 {
  enum class Kind { Diagonal, JordanBlock };

  Kind kind = Kind::Diagonal;
  Scalar lambda1;
  Scalar lambda2;  // equals lambda1 for a Jordan block
  Matrix transform;

  Matrix normal_form() const;
};

/// Eigenvalues come from the characteristic polynomial with an exact square
/// root of the discriminant. A matrix that is already diagonal keeps its
/// diagonal order with T = I; otherwise lambda1 = (tr + sqrt(disc)) / 2 with
/// the principal root. Throws EigenvaluesNotInField when the root does not
/// exist in the matrix's field, InvalidArgument over F_p.
JordanForm2 jordan_form_2x2(const Matrix& a);

enum class Family { Abelian, G1, G2, G3, OutsideFamilies };

const char* family_name(Family f) noexcept;

struct ClassLabel {
  Family family = Family::Abelian;
  std::optional<Scalar> parameter;  // G2 and G3 only
  std::string detail;               // OutsideFamilies only
};

/// Reference algebra on y_0..y_d with only [y_0, y_i] nonzero:
///   G1:    [y0, yi] = yi
///   G2(c): [y0, yi] = c^(i-1) yi
///   G3(c): [y0, yi] = c^(i-1) sum_{j=0}^{d-i} binom(d-i, j) c^j y_(d-j)
/// Throws InvalidArgument for a missing or zero parameter, or for
/// OutsideFamilies which has no reference table.
LieTable family_table(const ClassLabel& label, unsigned d, const Field& field = Field::gaussian());

struct Classification {
  ClassLabel label;
  /// Verified isomorphism onto family_table(label, d); absent for OutsideFamilies.
  std::optional<HomWitness> witness;
  Fingerprint fingerprint;
};

/// Two-variable classification over a characteristic-zero field (Q or Q(i)).
///   scalar A = lambda I:   Abelian if lambda = 0, else G1
///   distinct eigenvalues:  with lambda_w the eigenvalue of w and mu the other,
///                          Abelian if mu = 0, G2(mu / lambda_w) otherwise;
///                          lambda_w = 0 gives G1 at d = 1 and OutsideFamilies
///                          for d >= 2 (one bracket [y0, yd], center of dim d-1)
///   Jordan block lambda:   Abelian if lambda = 0, else G3(lambda)
/// w = 0 is always Abelian.
Classification classify(const SeedPair& seed, unsigned d);

}  // namespace symlie
