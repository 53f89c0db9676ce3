#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace whitforge {

// GMP rationals are kept canonical (lowest terms, positive denominator) by
// every gmpxx operation, so equality is structural.
using Integer = mpz_class;
using Rational = mpq_class;
using Vector = std::vector<Rational>;

// num/den in lowest terms (gmpxx's two-argument constructor does not reduce).
// Throws ZeroInput when den == 0.
Rational make_rational(const Integer& num, const Integer& den);

// "p/q", or "p" when q == 1.
std::string to_string(const Rational& r);

// Accepts "p", "-p", "p/q"; throws ParseError otherwise.
Rational parse_rational(std::string_view text);

bool is_zero(const Rational& r);
bool is_integer(const Rational& r);

// Prime factorization of |n| (n != 0) as (prime, exponent), primes ascending.
std::vector<std::pair<Integer, unsigned>> factorize(const Integer& n);

// All positive divisors of |n|, ascending.
std::vector<Integer> divisors(const Integer& n);

// true iff r = s^d for some rational s. Throws MathError(ZeroInput) on r = 0.
bool is_dth_power(const Rational& r, unsigned d);

// The rational s with s^d = r, if one exists (positive when d is even).
std::optional<Rational> dth_root(const Rational& r, unsigned d);

// Canonical representative of r modulo (Q^x)^d: a d-th-power-free integer,
// positive when d is odd. Two nonzero rationals have the same class iff their
// representatives are equal.
Integer power_class(const Rational& r, unsigned d);

Rational pow(const Rational& base, long exponent);

}  // namespace whitforge
