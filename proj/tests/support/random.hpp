#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "whitforge/matrix.hpp"
#include "whitforge/orbits.hpp"
#include "whitforge/partitions.hpp"

namespace whitforge::testing {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(engine_); }
  Rational small_rational(int range = 3) {
    const int den = uniform(1, 3);
    return make_rational(uniform(-range, range), den);
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

inline QMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, double density = 0.6,
                             int range = 3) {
  QMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (rng.coin(density)) m(i, j) = rng.small_rational(range);
  return m;
}

// Product of unit triangular factors: determinant exactly 1.
inline QMatrix random_unimodular(Rng& rng, std::size_t n) {
  QMatrix lower = QMatrix::identity(n);
  QMatrix upper = QMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      if (rng.coin(0.5)) lower(i, j) = rng.small_rational(2);
      if (rng.coin(0.5)) upper(j, i) = rng.small_rational(2);
    }
  return lower * upper;
}

// Unimodular factor times a random nonzero diagonal scaling.
inline QMatrix random_invertible(Rng& rng, std::size_t n) {
  Vector d(n);
  for (auto& x : d) {
    do x = rng.small_rational(3);
    while (sgn(x) == 0);
  }
  return random_unimodular(rng, n) * QMatrix::diagonal(d);
}

inline Partition random_partition(Rng& rng, int n) {
  const auto all = all_partitions(n);
  return all[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(all.size()) - 1))];
}

struct Conjugated {
  QMatrix g, g_inv;
};

inline Conjugated random_conjugation(Rng& rng, std::size_t n, bool unimodular = false) {
  const QMatrix g = unimodular ? random_unimodular(rng, n) : random_invertible(rng, n);
  return {g, *inverse(g)};
}

}  // namespace whitforge::testing

namespace whitforge::testing {

struct RandomPair {
  QMatrix s, f, h, z;
};

// f conjugate to J_mu, h its conjugated neutral element and Z a conjugated
// block-scalar matrix, so [Z, f] = [Z, h] = 0 and S = h + Z.
inline RandomPair random_whittaker_pair(Rng& rng, int n) {
  const Partition mu = random_partition(rng, n);
  auto parts = mu.parts();
  std::shuffle(parts.begin(), parts.end(), rng.engine());
  Vector zd;
  for (int k : parts) {
    const Rational c = make_rational(rng.uniform(-4, 4), rng.uniform(1, 2));
    for (int i = 0; i < k; ++i) zd.push_back(c);
  }
  const auto c = random_conjugation(rng, static_cast<std::size_t>(n));
  RandomPair p;
  p.f = c.g * jordan_matrix(parts) * c.g_inv;
  p.h = c.g * neutral_diagonal(parts) * c.g_inv;
  p.z = c.g * QMatrix::diagonal(zd) * c.g_inv;
  p.s = p.h + p.z;
  return p;
}

}  // namespace whitforge::testing
