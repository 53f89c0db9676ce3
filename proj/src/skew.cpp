#include "whitforge/skew.hpp"

#include "whitforge/errors.hpp"

namespace whitforge {

namespace {

std::size_t side_of(const QMatrix& f, const Subspace& w) {
  if (!f.square() || f.rows() * f.rows() != w.ambient_dim())
    throw MathError(ErrorKind::DimensionMismatch, "skew form: f and subspace of gl_n disagree");
  return f.rows();
}

// omega_f(X, Y) = trace([Y, f] X); precompute [b_j, f] once per basis vector.
std::vector<QMatrix> twisted(const QMatrix& f, const std::vector<QMatrix>& basis) {
  std::vector<QMatrix> out;
  out.reserve(basis.size());
  for (const auto& b : basis) out.push_back(bracket(b, f));
  return out;
}

// {x in W : omega(x, S) = 0} for a spanning set S.
Subspace orthogonal_within(const QMatrix& f, const Subspace& w, const Subspace& s) {
  if (s.is_zero() || w.is_zero()) return w;
  const auto wb = w.matrices();
  const auto tw = twisted(f, s.matrices());
  QMatrix g(tw.size(), wb.size());
  for (std::size_t i = 0; i < tw.size(); ++i)
    for (std::size_t j = 0; j < wb.size(); ++j) g(i, j) = trace_product(tw[i], wb[j]);
  std::vector<Vector> span;
  for (const auto& coeffs : rref_solve(g).kernel) {
    Vector x(w.ambient_dim(), Rational(0));
    for (std::size_t j = 0; j < coeffs.size(); ++j)
      if (sgn(coeffs[j]) != 0)
        for (std::size_t k = 0; k < x.size(); ++k)
          if (sgn(w.basis()[j][k]) != 0) x[k] += coeffs[j] * w.basis()[j][k];
    span.push_back(std::move(x));
  }
  return Subspace(w.ambient_dim(), span);
}

}  // namespace

Rational skew_form(const QMatrix& f, const QMatrix& x, const QMatrix& y) {
  return trace_product(f, bracket(x, y));
}

QMatrix skew_gram(const QMatrix& f, const Subspace& w) {
  side_of(f, w);
  const auto basis = w.matrices();
  const auto tw = twisted(f, basis);
  QMatrix g(basis.size(), basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) g(i, j) = trace_product(tw[j], basis[i]);
  return g;
}

Subspace skew_radical(const QMatrix& f, const Subspace& w) {
  side_of(f, w);
  return orthogonal_within(f, w, w);
}

Subspace skew_lagrangian(const QMatrix& f, const Subspace& w) {
  side_of(f, w);
  Subspace l = skew_radical(f, w);
  for (const auto& v : w.basis()) {
    if (l.contains(v)) continue;
    const Subspace single(w.ambient_dim(), {v});
    if (!orthogonal_within(f, single, l).is_zero()) l = sum(l, single);
  }
  for (;;) {
    const Subspace perp = orthogonal_within(f, w, l);
    if (perp == l) break;
    for (const auto& v : perp.basis())
      if (!l.contains(v)) {
        l = sum(l, Subspace(w.ambient_dim(), {v}));
        break;
      }
  }
  return l;
}

bool is_isotropic(const QMatrix& f, const Subspace& l) {
  return skew_gram(f, l).is_zero();
}

}  // namespace whitforge
