#include "whitforge/rational.hpp"

#include <algorithm>
#include <map>

#include "whitforge/errors.hpp"

namespace whitforge {

std::string to_string(const Rational& r) { return r.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto trim = [](std::string& t) {
    const auto b = t.find_first_not_of(" \t\r\n");
    const auto e = t.find_last_not_of(" \t\r\n");
    t = b == std::string::npos ? std::string() : t.substr(b, e - b + 1);
  };
  trim(s);
  if (s.empty()) throw ParseError("empty rational");
  auto valid_int = [](std::string_view t) {
    if (!t.empty() && (t.front() == '-' || t.front() == '+')) t.remove_prefix(1);
    return !t.empty() && std::all_of(t.begin(), t.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  const auto slash = s.find('/');
  std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!num.empty() && num.front() == '+') num.erase(0, 1);
  if (!valid_int(num) || !valid_int(den) || den.front() == '-' || den.front() == '+')
    throw ParseError("not a rational: '" + s + "'");
  Integer n(num, 10), d(den, 10);
  if (d == 0) throw ParseError("zero denominator: '" + s + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw MathError(ErrorKind::ZeroInput, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

bool is_zero(const Rational& r) { return sgn(r) == 0; }
bool is_integer(const Rational& r) { return r.get_den() == 1; }

namespace {

bool probably_prime(const Integer& n) { return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0; }

Integer pollard_brent(const Integer& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    Integer y = 2, x, g = 1, q = 1, ys;
    const unsigned long m = 64;
    unsigned long r = 1;
    auto step = [&](const Integer& v) { return Integer((v * v + c) % n); };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = step(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = step(y);
          q = (q * abs(Integer(x - y))) % n;
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = step(ys);
        Integer diff = abs(Integer(x - ys));
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(Integer n, std::map<Integer, unsigned>& out) {
  if (n == 1) return;
  if (probably_prime(n)) {
    ++out[n];
    return;
  }
  Integer d = pollard_brent(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

std::vector<std::pair<Integer, unsigned>> factorize(const Integer& n_in) {
  if (n_in == 0) throw MathError(ErrorKind::ZeroInput, "factorize(0)");
  Integer n = abs(n_in);
  std::map<Integer, unsigned> found;
  for (unsigned long p = 2; p < 10000 && p * p <= n; p += (p == 2 ? 1 : 2)) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      ++found[Integer(p)];
      n /= p;
    }
  }
  factor_into(n, found);
  return {found.begin(), found.end()};
}

std::vector<Integer> divisors(const Integer& n) {
  std::vector<Integer> result{1};
  for (const auto& [p, e] : factorize(n)) {
    const auto current = result.size();
    Integer power = 1;
    for (unsigned k = 1; k <= e; ++k) {
      power *= p;
      for (std::size_t i = 0; i < current; ++i) result.push_back(result[i] * power);
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::optional<Rational> dth_root(const Rational& r, unsigned d) {
  if (is_zero(r)) throw MathError(ErrorKind::ZeroInput, "d-th power test of 0");
  if (d == 0) throw MathError(ErrorKind::PreconditionViolation, "d must be positive");
  const bool negative = sgn(r) < 0;
  if (negative && d % 2 == 0) return std::nullopt;
  Integer num = abs(Integer(r.get_num())), den = r.get_den();
  Integer num_root, den_root;
  if (mpz_root(num_root.get_mpz_t(), num.get_mpz_t(), d) == 0) return std::nullopt;
  if (mpz_root(den_root.get_mpz_t(), den.get_mpz_t(), d) == 0) return std::nullopt;
  Rational s(negative ? Integer(-num_root) : num_root, den_root);
  s.canonicalize();
  return s;
}

bool is_dth_power(const Rational& r, unsigned d) { return dth_root(r, d).has_value(); }

Integer power_class(const Rational& r, unsigned d) {
  if (is_zero(r)) throw MathError(ErrorKind::ZeroInput, "power class of 0");
  if (d == 0) throw MathError(ErrorKind::PreconditionViolation, "d must be positive");
  // p/q = p q^{d-1} / q^d, so the class of p/q is the class of p q^{d-1}.
  Integer q = r.get_den();
  Integer m = r.get_num();
  for (unsigned k = 1; k < d; ++k) m *= q;
  int sign = sgn(m) < 0 ? -1 : 1;
  if (d % 2 == 1) sign = 1;
  Integer result = 1;
  for (const auto& [p, e] : factorize(m)) {
    for (unsigned k = 0; k < e % d; ++k) result *= p;
  }
  return sign * result;
}

Rational pow(const Rational& base, long exponent) {
  Rational result = 1;
  Rational b = exponent >= 0 ? base : Rational(1) / base;
  unsigned long e = exponent >= 0 ? static_cast<unsigned long>(exponent)
                                  : static_cast<unsigned long>(-exponent);
  while (e > 0) {
    if (e & 1UL) result *= b;
    b *= b;
    e >>= 1;
  }
  return result;
}

}  // namespace whitforge
