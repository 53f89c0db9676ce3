#include <map>

#include "doctest.h"
#include "support/random.hpp"
#include "whitforge/eigen.hpp"
#include "whitforge/errors.hpp"
#include "whitforge/linalg.hpp"
#include "whitforge/skew.hpp"

using namespace whitforge;
using whitforge::testing::Rng;

namespace {

QMatrix E(std::size_t n, std::size_t i, std::size_t j) { return QMatrix::elementary(n, i, j); }

Vector unit(std::size_t d, std::size_t k) {
  Vector v(d, Rational(0));
  v[k] = 1;
  return v;
}

// Naive trial division, the reference for factorize().
std::map<Integer, unsigned> trial_factor(Integer n) {
  std::map<Integer, unsigned> out;
  if (n < 0) n = -n;
  for (Integer p = 2; p * p <= n; ++p)
    while (n % p == 0) {
      ++out[p];
      n /= p;
    }
  if (n > 1) ++out[n];
  return out;
}

}  // namespace

TEST_CASE("rationals stay canonical and round-trip through text") {
  CHECK(to_string(make_rational(6, 4)) == "3/2");
  CHECK(to_string(make_rational(-4, 2)) == "-2");
  CHECK(to_string(make_rational(0, 5)) == "0");
  CHECK(parse_rational("-10/4") == make_rational(-5, 2));
  CHECK(parse_rational("7") == Rational(7));
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const Rational r = make_rational(rng.uniform(-1000, 1000), rng.uniform(1, 1000));
    CHECK(parse_rational(to_string(r)) == r);
  }
}

TEST_CASE("factorization agrees with trial division") {
  Rng rng(3);
  for (int i = 0; i < 300; ++i) {
    const Integer n = rng.uniform(1, 200000) * (rng.coin() ? 1 : -1);
    std::map<Integer, unsigned> got;
    for (const auto& [p, e] : factorize(n)) got[p] = e;
    CHECK(got == trial_factor(n));
  }
  // A semiprime beyond the trial-division table.
  const Integer big = Integer("1000003") * Integer("998244353");
  const auto f = factorize(big);
  REQUIRE(f.size() == 2);
  CHECK(f[0].first == 1000003);
  CHECK(f[1].first == Integer("998244353"));
  CHECK(divisors(12) == std::vector<Integer>{1, 2, 3, 4, 6, 12});
}

TEST_CASE("d-th powers and power classes") {
  CHECK(is_dth_power(Rational(8), 3));
  CHECK(!is_dth_power(Rational(-4), 2));
  CHECK(is_dth_power(make_rational(-8, 27), 3));
  for (unsigned d = 1; d <= 5; ++d) CHECK(is_dth_power(Rational(1), d));
  CHECK_THROWS_AS(is_dth_power(Rational(0), 2), MathError);
  CHECK(*dth_root(make_rational(16, 81), 4) == make_rational(2, 3));
  CHECK(!dth_root(Rational(2), 2));

  CHECK(power_class(Rational(8), 2) == 2);
  CHECK(power_class(make_rational(1, 2), 2) == 2);
  CHECK(power_class(Rational(4), 2) == 1);
  CHECK(power_class(Rational(-4), 3) == 4);

  // Classes are constant on cosets of d-th powers and separate otherwise.
  Rng rng(5);
  for (int i = 0; i < 200; ++i) {
    const unsigned d = static_cast<unsigned>(rng.uniform(1, 4));
    const Rational r = make_rational(rng.uniform(1, 60) * (rng.coin() ? 1 : -1), rng.uniform(1, 60));
    const Rational s = make_rational(rng.uniform(1, 12) * (rng.coin() ? 1 : -1), rng.uniform(1, 12));
    const Rational moved = r * pow(s, static_cast<long>(d));
    CHECK(power_class(moved, d) == power_class(r, d));
    CHECK(is_dth_power(moved / r, d));
    const Rational other = make_rational(rng.uniform(1, 60), rng.uniform(1, 60));
    CHECK((power_class(other, d) == power_class(r, d)) == is_dth_power(other / r, d));
  }
}

TEST_CASE("rref_solve on fixed systems") {
  const auto id = rref_solve(QMatrix::identity(3), Vector{1, 2, 3});
  CHECK(id.rank == 3);
  CHECK(*id.solution == Vector{1, 2, 3});

  const auto dep = rref_solve(QMatrix{{1, 2}, {2, 4}});
  CHECK(dep.rank == 1);
  REQUIRE(dep.kernel.size() == 1);
  CHECK(dep.kernel[0] == Vector{-2, 1});

  CHECK(!rref_solve(QMatrix{{1, 0}, {0, 0}}, Vector{0, 1}).solution);
}

TEST_CASE("rref_solve properties on random systems") {
  Rng rng(17);
  for (int i = 0; i < 500; ++i) {
    const std::size_t r = static_cast<std::size_t>(rng.uniform(1, 5));
    const std::size_t c = static_cast<std::size_t>(rng.uniform(1, 5));
    const QMatrix a = testing::random_matrix(rng, r, c);
    const Vector x = testing::random_matrix(rng, c, 1).column(0);
    const Vector b = a * x;
    const auto res = rref_solve(a, b);
    REQUIRE(res.solution);
    CHECK(a * *res.solution == b);
    CHECK(res.kernel.size() == c - res.rank);
    for (const auto& k : res.kernel) CHECK(a * k == Vector(r, Rational(0)));
    const auto again = rref_solve(res.echelon);
    CHECK(again.echelon == res.echelon);
    CHECK(again.pivots == res.pivots);
  }
}

TEST_CASE("subspace algebra") {
  const std::size_t d = 3;
  const Subspace e1(d, {unit(d, 0)});
  const Subspace e2(d, {unit(d, 1)});
  CHECK(subspace_algebra(e1, e1, SubspaceOp::Equals).verdict == true);
  CHECK(subspace_algebra(e1, e2, SubspaceOp::Intersect).space->is_zero());
  Vector s = unit(d, 0);
  s[1] = 1;
  const Subspace u(d, {s, unit(d, 1)});
  CHECK(subspace_member(u, unit(d, 0)));
  CHECK(!subspace_member(u, unit(d, 2)));
  CHECK_THROWS_AS(subspace_algebra(e1, Subspace(4), SubspaceOp::Sum), MathError);

  Rng rng(23);
  for (int i = 0; i < 200; ++i) {
    const std::size_t amb = static_cast<std::size_t>(rng.uniform(1, 6));
    auto random_space = [&] {
      std::vector<Vector> span;
      const int k = rng.uniform(0, static_cast<int>(amb));
      for (int j = 0; j < k; ++j) span.push_back(testing::random_matrix(rng, amb, 1, 0.5).column(0));
      return Subspace(amb, span);
    };
    const Subspace a = random_space();
    const Subspace b = random_space();
    const Subspace sm = sum(a, b);
    const Subspace in = intersect(a, b);
    CHECK(sm.dim() + in.dim() == a.dim() + b.dim());
    CHECK(sm.contains(a));
    CHECK(a.contains(in));
    CHECK(b.contains(in));
    // Echelon invariants: unit pivots, pivot columns otherwise zero.
    for (std::size_t r = 0; r < sm.dim(); ++r) {
      CHECK(sm.basis()[r][sm.pivots()[r]] == 1);
      for (std::size_t q = 0; q < sm.dim(); ++q)
        if (q != r) CHECK(sgn(sm.basis()[q][sm.pivots()[r]]) == 0);
    }
    CHECK(annihilator(a).dim() == amb - a.dim());
  }
}

TEST_CASE("matrix helpers") {
  const QMatrix f = E(4, 2, 1) + E(4, 4, 3);
  CHECK(to_e_notation(f) == "E21+E43");
  CHECK(to_e_notation(QMatrix::zero(2)) == "0");
  CHECK(bracket(QMatrix::diagonal({1, -1}), E(2, 2, 1)) == Rational(-2) * E(2, 2, 1));
  CHECK(determinant(QMatrix{{1, 2}, {3, 4}}) == -2);
  CHECK(!inverse(QMatrix{{1, 2}, {2, 4}}));
  Rng rng(29);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 5));
    const QMatrix g = testing::random_invertible(rng, n);
    CHECK(g * *inverse(g) == QMatrix::identity(n));
    CHECK(determinant(testing::random_unimodular(rng, n)) == 1);
    const QMatrix a = testing::random_matrix(rng, n, n);
    const QMatrix b = testing::random_matrix(rng, n, n);
    CHECK(trace_product(a, b) == (a * b).trace());
  }
}

TEST_CASE("rational eigenvalues") {
  const auto d = rational_eigenvalues(QMatrix::diagonal({3, 1, -1, -3}));
  REQUIRE(d);
  REQUIRE(d->size() == 4);
  CHECK((*d)[0].eigenvalue == -3);
  CHECK((*d)[3].eigenvalue == 3);
  for (const auto& e : *d) CHECK(e.space.dim() == 1);

  CHECK(!rational_eigenvalues(E(2, 2, 1)));
  const auto z = rational_eigenvalues(QMatrix::zero(2));
  REQUIRE(z);
  REQUIRE(z->size() == 1);
  CHECK(z->front().space.dim() == 2);

  // Irrational spectrum: x^2 - 2.
  CHECK(!rational_eigenvalues(QMatrix{{0, 2}, {1, 0}}));
  CHECK_THROWS_AS(spectral_decomposition(QMatrix{{0, 2}, {1, 0}}), MathError);

  Rng rng(31);
  for (int i = 0; i < 150; ++i) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 6));
    Vector diag(n);
    for (auto& x : diag) x = rng.small_rational(3);
    const auto c = testing::random_conjugation(rng, n);
    const QMatrix m = c.g * QMatrix::diagonal(diag) * c.g_inv;
    const auto spec = spectral_decomposition(m);
    QMatrix rebuilt = QMatrix::zero(n);
    QMatrix ident = QMatrix::zero(n);
    for (std::size_t k = 0; k < spec.eigenvalues.size(); ++k) {
      rebuilt += spec.eigenvalues[k] * spec.projectors[k];
      ident += spec.projectors[k];
      CHECK(spec.projectors[k] * spec.projectors[k] == spec.projectors[k]);
    }
    CHECK(rebuilt == m);
    CHECK(ident == QMatrix::identity(n));
  }
}

TEST_CASE("rational roots of products of linear factors") {
  Rng rng(37);
  for (int i = 0; i < 100; ++i) {
    std::vector<Rational> poly{Rational(rng.uniform(1, 5))};
    std::vector<Rational> roots;
    const int deg = rng.uniform(1, 5);
    for (int k = 0; k < deg; ++k) {
      const Rational r = rng.small_rational(4);
      roots.push_back(r);
      std::vector<Rational> next(poly.size() + 1, Rational(0));
      for (std::size_t j = 0; j < poly.size(); ++j) {
        next[j + 1] += poly[j];
        next[j] -= r * poly[j];
      }
      poly = next;
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    auto got = rational_roots(poly);
    std::sort(got.begin(), got.end());
    CHECK(got == roots);
  }
}

TEST_CASE("joint spectrum requires commuting inputs") {
  CHECK_THROWS_AS(joint_spectrum(QMatrix::diagonal({1, 0}), QMatrix{{0, 1}, {1, 0}}), MathError);
  const auto js = joint_spectrum(QMatrix::diagonal({1, -1, 1, -1}), QMatrix::diagonal({2, 2, -2, -2}));
  CHECK(js.values.size() == 4);
}

TEST_CASE("skew form tools") {
  const QMatrix f = E(4, 2, 1) + E(4, 4, 3);
  const auto w = Subspace::span_of({E(4, 1, 3), E(4, 2, 4), E(4, 3, 2)});
  CHECK(skew_radical(f, w) == Subspace::span_of({E(4, 1, 3) + E(4, 2, 4)}));

  const auto whole = Subspace::full(4);
  CHECK(skew_radical(QMatrix::zero(2), whole) == whole);
  CHECK(skew_lagrangian(QMatrix::zero(2), whole) == whole);
  CHECK(skew_radical(E(2, 2, 1), whole) == Subspace::span_of({E(2, 2, 1), QMatrix::identity(2)}));

  Rng rng(41);
  for (int i = 0; i < 60; ++i) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(2, 4));
    const QMatrix g = testing::random_matrix(rng, n, n, 0.4);
    std::vector<QMatrix> span;
    const int k = rng.uniform(1, static_cast<int>(n * n));
    for (int j = 0; j < k; ++j) span.push_back(testing::random_matrix(rng, n, n, 0.3));
    const auto space = Subspace::span_of(span);
    const QMatrix gram = skew_gram(g, space);
    CHECK(gram.transpose() == -gram);
    const auto rad = skew_radical(g, space);
    const auto lag = skew_lagrangian(g, space);
    CHECK(is_isotropic(g, lag));
    CHECK(lag.contains(rad));
    CHECK(space.contains(lag));
    CHECK(2 * lag.dim() == space.dim() + rad.dim());
    CHECK(space.dim() - rad.dim() == rank(gram));
  }
}
