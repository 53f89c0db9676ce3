#include "whitforge/linalg.hpp"

#include "whitforge/errors.hpp"

namespace whitforge {

RrefResult rref_solve(const QMatrix& a, const std::optional<Vector>& rhs) {
  const std::size_t rows = a.rows(), cols = a.cols();
  if (rhs && rhs->size() != rows)
    throw MathError(ErrorKind::DimensionMismatch, "right-hand side length");
  const std::size_t width = cols + (rhs ? 1 : 0);
  std::vector<Vector> m(rows, Vector(width, Rational(0)));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m[i][j] = a(i, j);
    if (rhs) m[i][cols] = (*rhs)[i];
  }

  RrefResult out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (sgn(m[i][c]) != 0) {
        pivot = i;
        break;
      }
    if (pivot == rows) continue;
    std::swap(m[pivot], m[r]);
    if (m[r][c] != 1) {
      const Rational inv = Rational(1) / m[r][c];
      for (std::size_t j = c; j < width; ++j)
        if (sgn(m[r][j]) != 0) m[r][j] *= inv;
    }
    // Nonzero positions of the pivot row, collected once.
    std::vector<std::size_t> support;
    for (std::size_t j = c; j < width; ++j)
      if (sgn(m[r][j]) != 0) support.push_back(j);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(m[i][c]) == 0) continue;
      const Rational factor = m[i][c];
      for (std::size_t j : support) m[i][j] -= factor * m[r][j];
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;

  out.echelon = QMatrix(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) out.echelon(i, j) = m[i][j];

  if (rhs) {
    bool consistent = true;
    for (std::size_t i = r; i < rows; ++i)
      if (sgn(m[i][cols]) != 0) consistent = false;
    if (consistent) {
      Vector x(cols, Rational(0));
      for (std::size_t k = 0; k < r; ++k) x[out.pivots[k]] = m[k][cols];
      out.solution = std::move(x);
    }
  }

  std::vector<bool> is_pivot(cols, false);
  for (auto p : out.pivots) is_pivot[p] = true;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vector v(cols, Rational(0));
    v[free] = 1;
    for (std::size_t k = 0; k < r; ++k)
      if (sgn(m[k][free]) != 0) v[out.pivots[k]] = -m[k][free];
    out.kernel.push_back(std::move(v));
  }
  return out;
}

Subspace::Subspace(std::size_t ambient_dim) : ambient_(ambient_dim) {}

Subspace::Subspace(std::size_t ambient_dim, const std::vector<Vector>& spanning) : ambient_(ambient_dim) {
  if (spanning.empty()) return;
  std::vector<Rational> entries;
  entries.reserve(spanning.size() * ambient_dim);
  for (const auto& v : spanning) {
    if (v.size() != ambient_dim) throw MathError(ErrorKind::DimensionMismatch, "spanning vector length");
    entries.insert(entries.end(), v.begin(), v.end());
  }
  const auto reduced = rref_solve(QMatrix(spanning.size(), ambient_dim, std::move(entries)));
  for (std::size_t k = 0; k < reduced.rank; ++k) {
    basis_.push_back(reduced.echelon.row(k));
    pivots_.push_back(reduced.pivots[k]);
  }
}

Subspace Subspace::full(std::size_t ambient_dim) {
  std::vector<Vector> basis;
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    Vector v(ambient_dim, Rational(0));
    v[i] = 1;
    basis.push_back(std::move(v));
  }
  return Subspace(ambient_dim, basis);
}

Subspace Subspace::span_of(const std::vector<QMatrix>& matrices) {
  if (matrices.empty()) throw MathError(ErrorKind::DimensionMismatch, "span of no matrices has no ambient");
  std::vector<Vector> vs;
  for (const auto& m : matrices) vs.push_back(m.flatten());
  return Subspace(matrices.front().rows() * matrices.front().cols(), vs);
}

std::vector<QMatrix> Subspace::matrices() const {
  std::size_t n = 0;
  while (n * n < ambient_) ++n;
  if (n * n != ambient_) throw MathError(ErrorKind::DimensionMismatch, "ambient is not gl_n");
  std::vector<QMatrix> out;
  for (const auto& v : basis_) out.push_back(QMatrix::from_flat(n, v));
  return out;
}

Vector Subspace::reduce(Vector v) const {
  if (v.size() != ambient_) throw MathError(ErrorKind::DimensionMismatch, "vector length");
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    const std::size_t p = pivots_[k];
    if (sgn(v[p]) == 0) continue;
    const Rational factor = v[p];
    for (std::size_t j = p; j < ambient_; ++j)
      if (sgn(basis_[k][j]) != 0) v[j] -= factor * basis_[k][j];
  }
  return v;
}

bool Subspace::contains(const Vector& v) const {
  for (const auto& x : reduce(v))
    if (sgn(x) != 0) return false;
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw MathError(ErrorKind::DimensionMismatch, "subspace containment");
  if (other.dim() > dim()) return false;
  for (const auto& v : other.basis_)
    if (!contains(v)) return false;
  return true;
}

Subspace sum(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim()) throw MathError(ErrorKind::DimensionMismatch, "subspace sum");
  std::vector<Vector> all = u.basis();
  all.insert(all.end(), v.basis().begin(), v.basis().end());
  return Subspace(u.ambient_dim(), all);
}

Subspace sum(const std::vector<Subspace>& parts, std::size_t ambient_dim) {
  std::vector<Vector> all;
  for (const auto& p : parts) {
    if (p.ambient_dim() != ambient_dim) throw MathError(ErrorKind::DimensionMismatch, "subspace sum");
    all.insert(all.end(), p.basis().begin(), p.basis().end());
  }
  return Subspace(ambient_dim, all);
}

Subspace annihilator(const Subspace& u) {
  if (u.is_zero()) return Subspace::full(u.ambient_dim());
  std::vector<Rational> entries;
  for (const auto& b : u.basis()) entries.insert(entries.end(), b.begin(), b.end());
  return Subspace(u.ambient_dim(), rref_solve(QMatrix(u.dim(), u.ambient_dim(), entries)).kernel);
}

Subspace intersect(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim())
    throw MathError(ErrorKind::DimensionMismatch, "subspace intersection");
  if (u.is_zero() || v.is_zero()) return Subspace(u.ambient_dim());
  if (u.contains(v)) return v;
  if (v.contains(u)) return u;
  // Solve sum a_i u_i = sum b_j v_j; the u-part of each kernel vector spans U ∩ V.
  const std::size_t d = u.ambient_dim(), p = u.dim(), q = v.dim();
  QMatrix m(d, p + q);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t k = 0; k < d; ++k) m(k, i) = u.basis()[i][k];
  for (std::size_t j = 0; j < q; ++j)
    for (std::size_t k = 0; k < d; ++k) m(k, p + j) = -v.basis()[j][k];
  std::vector<Vector> span;
  for (const auto& coeffs : rref_solve(m).kernel) {
    Vector x(d, Rational(0));
    for (std::size_t i = 0; i < p; ++i)
      if (sgn(coeffs[i]) != 0)
        for (std::size_t k = 0; k < d; ++k)
          if (sgn(u.basis()[i][k]) != 0) x[k] += coeffs[i] * u.basis()[i][k];
    span.push_back(std::move(x));
  }
  return Subspace(d, span);
}

Subspace column_space(const QMatrix& a) {
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < a.cols(); ++j) cols.push_back(a.column(j));
  return Subspace(a.rows(), cols);
}

Subspace kernel(const QMatrix& a) { return Subspace(a.cols(), rref_solve(a).kernel); }

SubspaceAlgebraResult subspace_algebra(const Subspace& u, const Subspace& v, SubspaceOp op) {
  if (u.ambient_dim() != v.ambient_dim()) throw MathError(ErrorKind::DimensionMismatch, "subspace_algebra");
  switch (op) {
    case SubspaceOp::Intersect: return {intersect(u, v), std::nullopt};
    case SubspaceOp::Sum: return {sum(u, v), std::nullopt};
    case SubspaceOp::Contains: return {std::nullopt, u.contains(v)};
    case SubspaceOp::Equals: return {std::nullopt, u == v};
  }
  return {};
}

bool subspace_member(const Subspace& u, const Vector& v) { return u.contains(v); }

Rational dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw MathError(ErrorKind::DimensionMismatch, "dot product");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
  return s;
}

}  // namespace whitforge
