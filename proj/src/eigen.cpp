#include "whitforge/eigen.hpp"

#include <algorithm>

#include "whitforge/errors.hpp"

namespace whitforge {

std::vector<Rational> characteristic_polynomial(const QMatrix& m) {
  if (!m.square()) throw MathError(ErrorKind::DimensionMismatch, "characteristic polynomial of non-square matrix");
  const std::size_t n = m.rows();
  // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k) / k.
  std::vector<Rational> c(n + 1, Rational(0));
  c[n] = 1;
  QMatrix mk = QMatrix::zero(n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = m * mk;
    for (std::size_t i = 0; i < n; ++i) mk(i, i) += c[n - k + 1];
    c[n - k] = -trace_product(m, mk) / Rational(static_cast<long>(k));
  }
  return c;
}

namespace {

// Integer polynomial, c_0 first, with content removed.
std::vector<Integer> primitive_integer_poly(const std::vector<Rational>& coeffs) {
  Integer lcm_den = 1;
  for (const auto& c : coeffs) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> out;
  Integer content = 0;
  for (const auto& c : coeffs) {
    Integer v = c.get_num() * (lcm_den / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    out.push_back(v);
  }
  if (content != 0)
    for (auto& v : out) v /= content;
  return out;
}

// sum a_i p^i q^(deg - i) == 0, i.e. P(p/q) == 0 after clearing denominators.
bool vanishes_at(const std::vector<Integer>& a, const Integer& p, const Integer& q) {
  const std::size_t deg = a.size() - 1;
  std::vector<Integer> qpows(a.size(), Integer(1));
  for (std::size_t k = 1; k < a.size(); ++k) qpows[k] = qpows[k - 1] * q;
  Integer acc = 0;
  for (std::size_t i = a.size(); i-- > 0;) acc = acc * p + a[i] * qpows[deg - i];
  return acc == 0;
}

}  // namespace

std::vector<Rational> rational_roots(const std::vector<Rational>& coeffs_in) {
  std::vector<Rational> coeffs = coeffs_in;
  while (!coeffs.empty() && sgn(coeffs.back()) == 0) coeffs.pop_back();
  std::vector<Rational> roots;
  if (coeffs.size() <= 1) return roots;
  std::size_t low = 0;
  while (sgn(coeffs[low]) == 0) ++low;
  if (low > 0) {
    roots.push_back(0);
    coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(low));
  }
  if (coeffs.size() > 1) {
    const auto a = primitive_integer_poly(coeffs);
    // Cauchy bound on root magnitude.
    Rational bound = 0;
    for (std::size_t i = 0; i + 1 < a.size(); ++i) bound = std::max(bound, make_rational(abs(a[i]), abs(a.back())));
    bound += 1;
    const auto num_divs = divisors(a.front());
    const auto den_divs = divisors(a.back());
    for (const auto& q : den_divs)
      for (const auto& p : num_divs) {
        if (make_rational(p, q) > bound) break;
        Integer g;
        mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
        if (g != 1) continue;
        if (vanishes_at(a, p, q)) roots.emplace_back(p, q);
        if (vanishes_at(a, Integer(-p), q)) roots.emplace_back(-p, q);
      }
  }
  for (auto& r : roots) r.canonicalize();
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

std::optional<std::vector<Eigenspace>> rational_eigenvalues(const QMatrix& m) {
  if (!m.square()) throw MathError(ErrorKind::DimensionMismatch, "eigenvalues of non-square matrix");
  const std::size_t n = m.rows();
  std::vector<Eigenspace> out;
  std::size_t total = 0;
  for (const auto& lambda : rational_roots(characteristic_polynomial(m))) {
    QMatrix shifted = m;
    for (std::size_t i = 0; i < n; ++i) shifted(i, i) -= lambda;
    Subspace space = kernel(shifted);
    total += space.dim();
    out.push_back({lambda, std::move(space)});
  }
  if (total != n) return std::nullopt;
  return out;
}

SpectralDecomposition spectral_decomposition(const QMatrix& m) {
  auto eig = rational_eigenvalues(m);
  if (!eig) throw MathError(ErrorKind::NotRationalSemisimple, "adjoint action must be diagonalizable over Q");
  const std::size_t n = m.rows();
  // Columns of V: concatenated eigenbases. P_k = V D_k V^{-1}.
  QMatrix v(n, n);
  std::vector<std::pair<std::size_t, std::size_t>> ranges;
  std::size_t col = 0;
  for (const auto& e : *eig) {
    const std::size_t start = col;
    for (const auto& b : e.space.basis()) {
      for (std::size_t i = 0; i < n; ++i) v(i, col) = b[i];
      ++col;
    }
    ranges.emplace_back(start, col);
  }
  const auto vinv = inverse(v);
  if (!vinv) throw MathError(ErrorKind::InternalCheckFailure, "eigenbasis not invertible");
  SpectralDecomposition out;
  for (std::size_t k = 0; k < eig->size(); ++k) {
    QMatrix p(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t c = ranges[k].first; c < ranges[k].second; ++c)
          if (sgn(v(i, c)) != 0 && sgn((*vinv)(c, j)) != 0) p(i, j) += v(i, c) * (*vinv)(c, j);
    out.eigenvalues.push_back((*eig)[k].eigenvalue);
    out.projectors.push_back(std::move(p));
    out.eigenspaces.push_back((*eig)[k].space);
  }
  return out;
}

bool is_rational_semisimple(const QMatrix& m) { return rational_eigenvalues(m).has_value(); }

JointSpectrum joint_spectrum(const QMatrix& h, const QMatrix& z) {
  if (!(bracket(h, z).is_zero())) throw MathError(ErrorKind::NotCommuting, "[h, Z] = 0 required");
  const auto sh = spectral_decomposition(h);
  const auto sz = spectral_decomposition(z);
  JointSpectrum out;
  for (std::size_t a = 0; a < sh.eigenvalues.size(); ++a)
    for (std::size_t b = 0; b < sz.eigenvalues.size(); ++b) {
      QMatrix p = sh.projectors[a] * sz.projectors[b];
      if (p.is_zero()) continue;
      out.values.emplace_back(sh.eigenvalues[a], sz.eigenvalues[b]);
      out.projectors.push_back(std::move(p));
    }
  return out;
}

}  // namespace whitforge
