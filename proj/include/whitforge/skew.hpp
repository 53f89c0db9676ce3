#pragma once

#include "whitforge/linalg.hpp"

namespace whitforge {

// omega_f(X, Y) = trace(f [X, Y]).
Rational skew_form(const QMatrix& f, const QMatrix& x, const QMatrix& y);

// Gram matrix of omega_f on the echelon basis of W (a subspace of gl_n).
QMatrix skew_gram(const QMatrix& f, const Subspace& w);

// {X in W : omega_f(X, W) = 0}
Subspace skew_radical(const QMatrix& f, const Subspace& w);

// Maximal isotropic subspace of W containing its radical. Deterministic:
// scans W's echelon basis in order, then completes from the echelon basis of
// the omega-orthogonal of the current isotropic space.
Subspace skew_lagrangian(const QMatrix& f, const Subspace& w);

// true iff omega_f vanishes identically on L.
bool is_isotropic(const QMatrix& f, const Subspace& l);

}  // namespace whitforge
