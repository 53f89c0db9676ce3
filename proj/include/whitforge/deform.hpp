#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "whitforge/matrix.hpp"
#include "whitforge/orbits.hpp"
#include "whitforge/partitions.hpp"

namespace whitforge {

struct TwoBlockData {
  QMatrix z, y, x, s;
};

// Raises the pair of Jordan blocks (p, q + r) to type (p + q, r) along Y.
// Throws PreconditionViolation unless p > r >= 0 and q > 0.
TwoBlockData two_blocks(int p, int q, int r);

struct NamedCheck {
  std::string name;
  bool passed = false;
};

struct DeformationCertificate {
  std::size_t n = 0;
  Partition mu, lambda;
  QMatrix h, f, z, psi;
  std::vector<NamedCheck> checks;  // every entry passed; a failure throws instead
};

// f = J_mu, h = h_mu, Z diagonal and psi a sum of scaled elementary
// matrices with f + psi of Jordan type lambda. Throws NotDominated.
DeformationCertificate deform_gl(const Partition& mu, const Partition& lambda);

struct ConditionNotMet {
  int d = 1;
  Integer a_class = 1;  // class of a/b modulo d-th powers
};

using SlOutcome = std::variant<DeformationCertificate, ConditionNotMet>;

// Same data inside sl_n with sl_class(f) = (mu, class of b) and
// sl_class(f + psi) = (lambda, class of a). Throws NotDominated, ZeroInput.
SlOutcome deform_sl(const Partition& mu, const Partition& lambda, const Rational& a, const Rational& b);

struct ComparisonCertificate {
  QMatrix h, f, s, F;
  std::vector<NamedCheck> checks;
};

// S = h + Z and F = f + psi from deform_gl, with the four comparison
// hypotheses re-derived by weight decomposition.
ComparisonCertificate compar_certificate(const Partition& mu, const Partition& lambda);

}  // namespace whitforge
