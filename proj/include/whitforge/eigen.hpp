#pragma once

#include <map>
#include <optional>
#include <vector>

#include "whitforge/linalg.hpp"

namespace whitforge {

// Coefficients c_0..c_n of det(x I - M), c_n = 1.
std::vector<Rational> characteristic_polynomial(const QMatrix& m);

// Distinct rational roots of a polynomial given by coefficients (c_0 first).
std::vector<Rational> rational_roots(const std::vector<Rational>& coeffs);

struct Eigenspace {
  Rational eigenvalue;
  Subspace space;  // inside Q^n
};

// Eigenvalues of M (ascending) with their eigenspaces, or nullopt when M is
// not diagonalizable over Q (the NotRationalSplit outcome).
std::optional<std::vector<Eigenspace>> rational_eigenvalues(const QMatrix& m);

// Spectral data of a rational semisimple matrix: an eigenbasis and the
// projector onto each eigenspace. Throws NotRationalSemisimple.
struct SpectralDecomposition {
  std::vector<Rational> eigenvalues;   // distinct, ascending
  std::vector<QMatrix> projectors;     // P_k with sum P_k = I, M = sum lambda_k P_k
  std::vector<Subspace> eigenspaces;
};

SpectralDecomposition spectral_decomposition(const QMatrix& m);
bool is_rational_semisimple(const QMatrix& m);

// Joint decomposition for commuting rational semisimple h, Z: the common
// eigenspaces of Q^n, keyed by (eigenvalue of h, eigenvalue of Z).
struct JointSpectrum {
  std::vector<std::pair<Rational, Rational>> values;
  std::vector<QMatrix> projectors;
};

JointSpectrum joint_spectrum(const QMatrix& h, const QMatrix& z);

}  // namespace whitforge
