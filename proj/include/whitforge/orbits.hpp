#pragma once

#include "whitforge/matrix.hpp"
#include "whitforge/partitions.hpp"

namespace whitforge {

// J_k is the lower-triangular Jordan block (ones at (i+1, i)).
QMatrix jordan_block(int k);
QMatrix jordan_matrix(const std::vector<int>& blocks);
// h_k = diag(k-1, k-3, ..., 1-k), assembled blockwise.
QMatrix neutral_diagonal(const std::vector<int>& blocks);

struct StandardRep {
  Composition eta;
  QMatrix j;  // J_eta
  QMatrix h;  // h_eta, with [h, J] = -2 J
};

StandardRep standard_rep(const Composition& eta);

// Throws NotNilpotent.
Partition jordan_partition(const QMatrix& n);

// g with g N g^{-1} = J_eta; the identity is re-verified before returning.
// Throws WrongPartition when the Jordan type of N is not eta sorted.
QMatrix jordan_conjugator(const QMatrix& n, const Composition& eta);

// e with [h, e] = 2e and [e, f] = h. Throws NoSolution when (h, f) is not neutral.
QMatrix sl2_complete(const QMatrix& f, const QMatrix& h);

// A neutral element for the nilpotent f, transported from h_eta.
QMatrix neutral_for(const QMatrix& f);

struct SlOrbitClass {
  Partition lambda;
  int d = 1;             // gcd of the parts
  Integer a_class = 1;   // canonical representative modulo d-th powers

  friend bool operator==(const SlOrbitClass&, const SlOrbitClass&) = default;
};

SlOrbitClass sl_class(const QMatrix& n);

}  // namespace whitforge
