#include "whitforge/orbits.hpp"

#include <algorithm>
#include <map>

#include "whitforge/errors.hpp"
#include "whitforge/linalg.hpp"

namespace whitforge {

QMatrix jordan_block(int k) {
  QMatrix j(static_cast<std::size_t>(k), static_cast<std::size_t>(k));
  for (int i = 0; i + 1 < k; ++i) j(static_cast<std::size_t>(i + 1), static_cast<std::size_t>(i)) = 1;
  return j;
}

QMatrix jordan_matrix(const std::vector<int>& blocks) {
  std::vector<QMatrix> parts;
  for (int b : blocks) parts.push_back(jordan_block(b));
  return block_diagonal(parts);
}

QMatrix neutral_diagonal(const std::vector<int>& blocks) {
  Vector diag;
  for (int k : blocks)
    for (int i = 0; i < k; ++i) diag.emplace_back(k - 1 - 2 * i);
  return QMatrix::diagonal(diag);
}

StandardRep standard_rep(const Composition& eta) {
  return {eta, jordan_matrix(eta.parts()), neutral_diagonal(eta.parts())};
}

namespace {

// Ranks of N^0, N^1, ..., N^n; throws NotNilpotent unless N^n = 0.
std::vector<std::size_t> power_ranks(const QMatrix& n) {
  if (!n.square()) throw MathError(ErrorKind::DimensionMismatch, "nilpotent test of non-square matrix");
  const std::size_t size = n.rows();
  std::vector<std::size_t> ranks{size};
  QMatrix p = QMatrix::identity(size);
  for (std::size_t k = 1; k <= size; ++k) {
    p = p * n;
    ranks.push_back(rank(p));
    if (ranks.back() == 0) break;
  }
  if (ranks.back() != 0) throw MathError(ErrorKind::NotNilpotent, "N^n must vanish");
  return ranks;
}

}  // namespace

Partition jordan_partition(const QMatrix& n) {
  const auto ranks = power_ranks(n);
  // Transpose partition: lambda^t_k = rank(N^{k-1}) - rank(N^k).
  std::vector<int> columns;
  for (std::size_t k = 1; k < ranks.size(); ++k) columns.push_back(static_cast<int>(ranks[k - 1] - ranks[k]));
  if (columns.empty()) return Partition();
  return transpose(Partition(columns));
}

QMatrix jordan_conjugator(const QMatrix& n, const Composition& eta) {
  const Partition type = jordan_partition(n);
  if (!(type == eta.sorted()))
    throw MathError(ErrorKind::WrongPartition,
                    "Jordan type " + to_string(type) + " differs from " + to_string(eta.sorted()));
  const std::size_t size = n.rows();
  const int top = type.part(1);

  // K[k] = ker N^k.
  std::vector<Subspace> ker{Subspace(size)};
  QMatrix p = QMatrix::identity(size);
  for (int k = 1; k <= top; ++k) {
    p = p * n;
    ker.push_back(kernel(p));
  }

  // Chain tops of length k span a complement of K[k-1] + N K[k+1] inside K[k].
  std::map<int, std::vector<Vector>> tops;
  for (int k = top; k >= 1; --k) {
    Subspace covered = ker[static_cast<std::size_t>(k - 1)];
    if (k < top) {
      std::vector<Vector> images;
      for (const auto& v : ker[static_cast<std::size_t>(k + 1)].basis()) images.push_back(n * v);
      covered = sum(covered, Subspace(size, images));
    }
    for (const auto& v : ker[static_cast<std::size_t>(k)].basis()) {
      if (covered.contains(v)) continue;
      tops[k].push_back(v);
      covered = sum(covered, Subspace(size, {v}));
    }
  }

  // Columns of P = g^{-1}: each chain v, Nv, ..., N^{k-1}v in the order of eta.
  QMatrix pinv(size, size);
  std::map<int, std::size_t> used;
  std::size_t col = 0;
  for (int k : eta.parts()) {
    auto& pool = tops[k];
    std::size_t& next = used[k];
    if (next >= pool.size()) throw MathError(ErrorKind::InternalCheckFailure, "not enough Jordan chain tops");
    Vector v = pool[next++];
    for (int step = 0; step < k; ++step) {
      for (std::size_t i = 0; i < size; ++i) pinv(i, col) = v[i];
      ++col;
      v = n * v;
    }
  }
  const auto g = inverse(pinv);
  if (!g) throw MathError(ErrorKind::InternalCheckFailure, "Jordan chains are not a basis");
  if (!(*g * n * pinv == jordan_matrix(eta.parts())))
    throw MathError(ErrorKind::InternalCheckFailure, "g N g^{-1} != J_eta");
  return *g;
}

QMatrix sl2_complete(const QMatrix& f, const QMatrix& h) {
  if (!f.square() || !(f.rows() == h.rows() && h.square()))
    throw MathError(ErrorKind::DimensionMismatch, "sl2_complete");
  if (bracket(h, f) != Rational(-2) * f) throw MathError(ErrorKind::NoSolution, "[h, f] = -2 f fails");
  const std::size_t n = f.rows(), d = n * n;
  // Unknown e (flattened). Rows 0..d-1: [h,e] - 2e = 0; rows d..2d-1: [e,f] = h.
  QMatrix a(2 * d, d);
  Vector rhs(2 * d, Rational(0));
  for (std::size_t col = 0; col < d; ++col) {
    const QMatrix basis = QMatrix::from_flat(n, [&] {
      Vector v(d, Rational(0));
      v[col] = 1;
      return v;
    }());
    const QMatrix first = bracket(h, basis) - Rational(2) * basis;
    const QMatrix second = bracket(basis, f);
    for (std::size_t r = 0; r < d; ++r) {
      a(r, col) = first.flatten()[r];
      a(d + r, col) = second.flatten()[r];
    }
  }
  for (std::size_t r = 0; r < d; ++r) rhs[d + r] = h.flatten()[r];
  const auto solved = rref_solve(a, rhs);
  if (!solved.solution)
    throw MathError(ErrorKind::NoSolution, "no nil-positive element, (h, f) is not neutral");
  return QMatrix::from_flat(n, *solved.solution);
}

QMatrix neutral_for(const QMatrix& f) {
  const Partition type = jordan_partition(f);
  const Composition eta(type.parts());
  if (type.length() == 0) return f;
  const QMatrix g = jordan_conjugator(f, eta);
  const auto ginv = inverse(g);
  return *ginv * neutral_diagonal(eta.parts()) * g;
}

SlOrbitClass sl_class(const QMatrix& n) {
  const Partition lambda = jordan_partition(n);
  const QMatrix g = jordan_conjugator(n, Composition(lambda.parts()));
  SlOrbitClass out;
  out.lambda = lambda;
  out.d = lambda.gcd();
  out.a_class = power_class(Rational(1) / determinant(g), static_cast<unsigned>(out.d));
  return out;
}

}  // namespace whitforge
