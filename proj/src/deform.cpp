#include "whitforge/deform.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "whitforge/eigen.hpp"
#include "whitforge/errors.hpp"
#include "whitforge/linalg.hpp"
#include "whitforge/whitpair.hpp"

namespace whitforge {

namespace {

std::size_t sz(int k) { return static_cast<std::size_t>(k); }

void require(bool ok, const std::string& what) {
  if (!ok) throw MathError(ErrorKind::InternalCheckFailure, what);
}

// Construction data in the standard basis: f = J_blocks, h = h_blocks,
// z diagonal, psi a sum of elementary matrices.
struct Frame {
  std::vector<int> blocks;
  QMatrix h, f, z, psi;
};

Frame trivial_frame(const Partition& mu) {
  const std::size_t n = sz(mu.size());
  return {mu.parts(), neutral_diagonal(mu.parts()), jordan_matrix(mu.parts()), QMatrix::zero(n),
          QMatrix::zero(n)};
}

Partition remove_part(const Partition& p, int value) {
  auto parts = p.parts();
  parts.erase(std::find(parts.begin(), parts.end(), value));
  return Partition(std::move(parts));
}

// Largest part value shared by mu and lambda, or 0.
int shared_part(const Partition& mu, const Partition& lambda) {
  for (int v : lambda.parts())
    if (mu.multiplicity(v) > 0) return v;
  return 0;
}

Frame build_frame(const Partition& mu, const Partition& lambda);

// Split off a common block of size v on which Z vanishes and psi is zero.
Frame split_common(const Partition& mu, const Partition& lambda, int v) {
  const Partition mu_rest = remove_part(mu, v);
  const Partition lambda_rest = remove_part(lambda, v);
  require(dominance_leq(mu_rest, lambda_rest), "removing a shared part lost dominance");
  const Frame rest = build_frame(mu_rest, lambda_rest);
  Frame out;
  out.blocks = {v};
  out.blocks.insert(out.blocks.end(), rest.blocks.begin(), rest.blocks.end());
  out.h = block_diagonal({neutral_diagonal({v}), rest.h});
  out.f = block_diagonal({jordan_block(v), rest.f});
  out.z = block_diagonal({QMatrix::zero(sz(v)), rest.z});
  out.psi = block_diagonal({QMatrix::zero(sz(v)), rest.psi});
  return out;
}

Frame from_two_blocks(const Partition& mu, const Partition& lambda) {
  const int p = mu.part(1);
  const auto tb = two_blocks(p, lambda.part(1) - p, lambda.part(2));
  Frame out;
  out.blocks = mu.parts();
  out.h = neutral_diagonal(mu.parts());
  out.f = jordan_matrix(mu.parts());
  out.z = tb.z;
  out.psi = tb.y;
  return out;
}

// Vectors the end of a new Jordan block may be sent to: first the standard
// basis, then F'^r t for S'-homogeneous tops t of length-p chains of F'.
std::vector<Vector> attachment_candidates(const QMatrix& raised, const QMatrix& s_rest, int p, int r) {
  const std::size_t nr = raised.rows();
  std::vector<Vector> out;
  for (std::size_t k = 0; k < nr; ++k) {
    Vector e(nr, Rational(0));
    e[k] = 1;
    out.push_back(std::move(e));
  }
  const Subspace kp = kernel(power(raised, static_cast<unsigned>(p)));
  const Subspace kp_below = kernel(power(raised, static_cast<unsigned>(p - 1)));
  std::vector<Vector> images;
  const Subspace kp_above = kernel(power(raised, static_cast<unsigned>(p + 1)));
  for (const auto& v : kp_above.basis()) images.push_back(raised * v);
  const Subspace lower = sum(kp_below, Subspace(nr, images));
  const QMatrix push = power(raised, static_cast<unsigned>(r));
  for (const auto& eig : spectral_decomposition(s_rest).eigenspaces) {
    const Subspace tops = intersect(kp, eig);
    const Subspace floor = intersect(lower, eig);
    for (const auto& t : tops.basis())
      if (!floor.contains(t)) out.push_back(push * t);
  }
  return out;
}

// Glue a block J_m in front of a frame for (mu', lambda') along a
// two-block step.
Frame raise_one_part(const Partition& mu, const Partition& lambda) {
  const std::size_t i = lemma_part_index(lambda, mu);
  const int m = mu.part(i);
  const int li = lambda.part(i), lnext = lambda.part(i + 1);
  require(li > m && m > lnext, "part index is not strict after removing shared parts");
  const int p = li + lnext - m;

  auto lparts = lambda.parts();
  lparts.erase(lparts.begin() + static_cast<std::ptrdiff_t>(i - 1));
  if (lnext > 0) lparts.erase(lparts.begin() + static_cast<std::ptrdiff_t>(i - 1));
  lparts.push_back(p);
  const Partition lambda_rest = Partition::sorted(lparts);
  const Partition mu_rest = remove_part(mu, m);
  require(dominance_leq(mu_rest, lambda_rest), "reduced pair is not dominated");

  const Frame rest = build_frame(mu_rest, lambda_rest);
  const std::size_t nr = rest.h.rows();
  const std::size_t um = sz(m);
  const QMatrix raised = rest.f + rest.psi;
  const QMatrix base = block_diagonal({jordan_block(m), raised});
  const QMatrix s_rest = rest.h + rest.z;

  for (const auto& w : attachment_candidates(raised, s_rest, p, lnext)) {
    // Every coordinate of w shares one S'-value s; its h'-values must exceed -m-1
    // so that the new block's Z-value c = s + m + 1 lies above each Z'-value.
    std::optional<Rational> s_value;
    bool ok = true;
    for (std::size_t k = 0; k < nr && ok; ++k) {
      if (sgn(w[k]) == 0) continue;
      if (s_value && *s_value != s_rest(k, k)) ok = false;
      s_value = s_rest(k, k);
      if (rest.h(k, k) <= -m - 1) ok = false;
    }
    if (!ok || !s_value) continue;
    QMatrix y(um + nr, um + nr);
    for (std::size_t k = 0; k < nr; ++k)
      if (sgn(w[k]) != 0) y(um + k, um - 1) = w[k];
    if (jordan_partition(base + y) != lambda) continue;
    Frame out;
    out.blocks = {m};
    out.blocks.insert(out.blocks.end(), rest.blocks.begin(), rest.blocks.end());
    out.h = block_diagonal({neutral_diagonal({m}), rest.h});
    out.f = block_diagonal({jordan_block(m), rest.f});
    out.z = block_diagonal({(*s_value + m + 1) * QMatrix::identity(um), rest.z});
    out.psi = block_diagonal({QMatrix::zero(um), rest.psi}) + y;
    return out;
  }
  throw MathError(ErrorKind::InternalCheckFailure,
                  "no attachment vector raises " + to_string(mu) + " to " + to_string(lambda));
}

Frame build_frame(const Partition& mu, const Partition& lambda) {
  if (mu == lambda) return trivial_frame(mu);
  if (const int v = shared_part(mu, lambda)) return split_common(mu, lambda, v);
  if (mu.length() == 2) return from_two_blocks(mu, lambda);
  return raise_one_part(mu, lambda);
}

// Permutation matrix reordering the frame's blocks to weakly decreasing size.
QMatrix sorting_permutation(const std::vector<int>& blocks) {
  std::vector<std::size_t> order(blocks.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return blocks[a] > blocks[b]; });
  std::vector<std::size_t> start(blocks.size());
  std::size_t pos = 0;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    start[b] = pos;
    pos += sz(blocks[b]);
  }
  QMatrix perm(pos, pos);
  std::size_t target = 0;
  for (auto b : order)
    for (int j = 0; j < blocks[b]; ++j) perm(target++, start[b] + sz(j)) = 1;
  return perm;
}

bool weights_all(const QMatrix& s, const QMatrix& m, bool (*pred)(const Rational&)) {
  for (const auto& [w, part] : weight_components(s, m))
    if (!pred(w)) return false;
  return true;
}

void record(std::vector<NamedCheck>& checks, const std::string& name, bool ok) {
  if (!ok) throw MathError(ErrorKind::InternalCheckFailure, "deformation check failed: " + name);
  checks.push_back({name, true});
}

void verify(DeformationCertificate& c) {
  auto& k = c.checks;
  k.clear();
  record(k, "f_weight", bracket(c.h, c.f) == Rational(-2) * c.f);
  record(k, "h_neutral", is_neutral_pair(c.h, c.f));
  record(k, "Z_rational_semisimple", is_rational_semisimple(c.z));
  record(k, "Z_commutes_h", bracket(c.z, c.h).is_zero());
  record(k, "Z_commutes_f", bracket(c.z, c.f).is_zero());
  record(k, "psi_Z_negative", weights_all(c.z, c.psi, [](const Rational& w) { return sgn(w) < 0; }));
  record(k, "psi_S_weight_minus2", weights_all(c.h + c.z, c.psi, [](const Rational& w) { return w == -2; }));
  record(k, "jordan_source", jordan_partition(c.f) == c.mu);
  record(k, "jordan_target", jordan_partition(c.f + c.psi) == c.lambda);
}

// Extended Euclid over a list: returns gcd and coefficients x with sum x_j v_j = gcd.
std::pair<long, std::vector<long>> bezout(const std::vector<long>& values) {
  long g = 0;
  std::vector<long> coeffs(values.size(), 0);
  for (std::size_t j = 0; j < values.size(); ++j) {
    // Solve s*g + t*v_j = gcd(g, v_j).
    long old_r = g, r = values[j], old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
      const long qt = old_r / r;
      old_r -= qt * r;
      std::swap(old_r, r);
      old_s -= qt * s;
      std::swap(old_s, s);
      old_t -= qt * t;
      std::swap(old_t, t);
    }
    for (std::size_t i = 0; i < j; ++i) coeffs[i] *= old_s;
    coeffs[j] = old_t;
    g = old_r;
  }
  return {g, coeffs};
}

}  // namespace

TwoBlockData two_blocks(int p, int q, int r) {
  if (!(p > r && r >= 0 && q > 0))
    throw MathError(ErrorKind::PreconditionViolation, "two_blocks requires p > r >= 0 and q > 0");
  const std::size_t n = sz(p + q + r);
  Vector zd(n, Rational(0));
  for (int i = 0; i < p; ++i) zd[sz(i)] = p + q - r;
  TwoBlockData out;
  out.z = QMatrix::diagonal(zd);
  out.y = QMatrix::elementary(n, sz(p + r + 1), sz(p));
  out.x = jordan_matrix({p, q + r}) + out.y;
  const QMatrix h = neutral_diagonal({p, q + r});
  out.s = h + out.z;

  const QMatrix j = jordan_matrix({p, q + r});
  require(bracket(out.s, out.x) == Rational(-2) * out.x, "two_blocks: X not in g^S_{-2}");
  require(bracket(out.s, out.y) == Rational(-2) * out.y, "two_blocks: Y not in g^S_{-2}");
  require(bracket(out.z, out.y) == Rational(-(p + q - r)) * out.y, "two_blocks: Y not in g^Z_{<0}");
  require(bracket(out.z, j).is_zero() && bracket(out.z, h).is_zero(), "two_blocks: Z does not commute");
  std::vector<int> target{p + q};
  if (r > 0) target.push_back(r);
  require(jordan_partition(out.x) == Partition(target), "two_blocks: X has the wrong Jordan type");
  return out;
}

DeformationCertificate deform_gl(const Partition& mu, const Partition& lambda) {
  if (!dominance_leq(mu, lambda))
    throw MathError(ErrorKind::NotDominated, to_string(mu) + " is not dominated by " + to_string(lambda));
  const Frame frame = build_frame(mu, lambda);
  const QMatrix perm = sorting_permutation(frame.blocks);
  const QMatrix back = perm.transpose();
  DeformationCertificate c;
  c.n = sz(mu.size());
  c.mu = mu;
  c.lambda = lambda;
  c.h = perm * frame.h * back;
  c.f = perm * frame.f * back;
  c.z = perm * frame.z * back;
  c.psi = perm * frame.psi * back;
  require(c.f == jordan_matrix(mu.parts()) && c.h == neutral_diagonal(mu.parts()),
          "reordered frame is not the standard representative");
  verify(c);
  return c;
}

SlOutcome deform_sl(const Partition& mu, const Partition& lambda, const Rational& a, const Rational& b) {
  if (sgn(a) == 0 || sgn(b) == 0) throw MathError(ErrorKind::ZeroInput, "deform_sl needs nonzero a and b");
  const int dl = lambda.gcd(), dm = mu.gcd();
  const int d = std::gcd(dl, dm);
  const Rational ratio = a / b;
  if (!is_dth_power(ratio, static_cast<unsigned>(d)))
    return ConditionNotMet{d, power_class(ratio, static_cast<unsigned>(d))};

  DeformationCertificate c = deform_gl(mu, lambda);
  const auto base_class = sl_class(c.f + c.psi);
  const Rational a0(base_class.a_class);
  const auto u = dth_root(ratio / a0, static_cast<unsigned>(d));
  require(u.has_value(), "class of the raised orbit is not a d-th power");

  // Bezout: d = sum x_j mu_j + y d(lambda).
  std::vector<long> values;
  for (int part : mu.parts()) values.push_back(part);
  values.push_back(dl);
  const auto [g, coeffs] = bezout(values);
  require(g == d, "Bezout gcd mismatch");

  // Diagonal conjugator D_b * diag(u^{x_j} on block j).
  Vector diag;
  for (std::size_t j = 0; j < mu.length(); ++j)
    for (int i = 0; i < mu.parts()[j]; ++i) diag.push_back(pow(*u, coeffs[j]));
  diag[0] *= b;
  Vector inv(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) inv[i] = 1 / diag[i];
  const QMatrix gm = QMatrix::diagonal(diag), gi = QMatrix::diagonal(inv);
  c.f = gm * c.f * gi;
  c.psi = gm * c.psi * gi;
  const Rational shift = c.z.trace() / static_cast<long>(c.n);
  for (std::size_t i = 0; i < c.n; ++i) c.z(i, i) -= shift;

  verify(c);
  record(c.checks, "sl_traceless",
         sgn(c.h.trace()) == 0 && sgn(c.z.trace()) == 0 && sgn(c.f.trace()) == 0 && sgn(c.psi.trace()) == 0);
  const auto source = sl_class(c.f);
  const auto target = sl_class(c.f + c.psi);
  record(c.checks, "sl_class_source", source.a_class == power_class(b, static_cast<unsigned>(dm)));
  record(c.checks, "sl_class_target", target.a_class == power_class(a, static_cast<unsigned>(dl)));
  return c;
}

ComparisonCertificate compar_certificate(const Partition& mu, const Partition& lambda) {
  const auto c = deform_gl(mu, lambda);
  ComparisonCertificate out;
  out.h = c.h;
  out.f = c.f;
  out.s = c.h + c.z;
  out.F = c.f + c.psi;
  auto& k = out.checks;
  bool pair_ok = is_rational_semisimple(out.s);
  if (pair_ok) pair_ok = weights_all(out.s, out.F, [](const Rational& w) { return w == -2; });
  record(k, "whittaker_pair", pair_ok);
  record(k, "orbit_of_F", jordan_partition(out.F) == lambda);
  record(k, "f_in_S_weight_minus2", weights_all(out.s, out.f, [](const Rational& w) { return w == -2; }));
  record(k, "h_commutes_S", bracket(out.h, out.s).is_zero());
  record(k, "difference_Z_negative",
         weights_all(out.s - out.h, out.F - out.f, [](const Rational& w) { return sgn(w) < 0; }));
  return out;
}

}  // namespace whitforge
