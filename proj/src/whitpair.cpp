#include "whitforge/whitpair.hpp"

#include <algorithm>
#include <set>

#include "whitforge/errors.hpp"
#include "whitforge/orbits.hpp"
#include "whitforge/skew.hpp"

namespace whitforge {

namespace {

void require_same_square(const QMatrix& a, const QMatrix& b, const char* what) {
  if (!a.square() || !b.square() || a.rows() != b.rows())
    throw MathError(ErrorKind::DimensionMismatch, what);
}

// span{P_a X P_b} = span of outer products (column basis of P_a) x (row basis of P_b).
Subspace block_span(const QMatrix& pa, const QMatrix& pb) {
  const std::size_t n = pa.rows();
  const auto cols = column_space(pa).basis();
  const auto rows = column_space(pb.transpose()).basis();
  std::vector<Vector> span;
  span.reserve(cols.size() * rows.size());
  for (const auto& c : cols)
    for (const auto& r : rows) {
      Vector x(n * n, Rational(0));
      for (std::size_t i = 0; i < n; ++i) {
        if (sgn(c[i]) == 0) continue;
        for (std::size_t j = 0; j < n; ++j)
          if (sgn(r[j]) != 0) x[i * n + j] = c[i] * r[j];
      }
      span.push_back(std::move(x));
    }
  return Subspace(n * n, span);
}

QMatrix ad_matrix(const QMatrix& f) {
  const std::size_t n = f.rows();
  QMatrix a(n * n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto col = bracket(f, QMatrix::elementary(n, i + 1, j + 1)).flatten();
      for (std::size_t k = 0; k < col.size(); ++k)
        if (sgn(col[k]) != 0) a(k, i * n + j) = col[k];
    }
  return a;
}

std::string t_label(const Rational& t) { return "t=" + to_string(t); }

void check(bool ok, const std::string& clause, std::vector<std::string>& verified) {
  if (!ok) throw MathError(ErrorKind::LemmaViolation, clause);
  if (std::find(verified.begin(), verified.end(), clause) == verified.end()) verified.push_back(clause);
}

bool brackets_inside(const Subspace& a, const Subspace& b, const Subspace& target) {
  const auto am = a.matrices();
  const auto bm = b.matrices();
  for (const auto& x : am)
    for (const auto& y : bm)
      if (!target.contains(bracket(x, y))) return false;
  return true;
}

bool direct_sum_equals(const Subspace& whole, const Subspace& a, const Subspace& b) {
  return a.dim() + b.dim() == whole.dim() && sum(a, b) == whole;
}

// Nonsingular trace pairing between two subspaces of equal dimension.
bool pairs_nondegenerately(const Subspace& a, const Subspace& b) {
  if (a.dim() != b.dim()) return false;
  if (a.is_zero()) return true;
  const auto am = a.matrices();
  const auto bm = b.matrices();
  QMatrix g(am.size(), bm.size());
  for (std::size_t i = 0; i < am.size(); ++i)
    for (std::size_t j = 0; j < bm.size(); ++j) g(i, j) = trace_product(am[i], bm[j]);
  return rank(g) == am.size();
}

}  // namespace

WhittakerPair make_whittaker_pair(QMatrix s, QMatrix f) {
  require_same_square(s, f, "Whittaker pair: S and f must be square of the same size");
  if (!is_rational_semisimple(s))
    throw MathError(ErrorKind::NotRationalSemisimple, "S must be diagonalizable with rational eigenvalues");
  if (bracket(s, f) != Rational(-2) * f)
    throw MathError(ErrorKind::PreconditionViolation, "[S, f] = -2 f fails");
  return {std::move(s), std::move(f)};
}

WhittakerTriple make_whittaker_triple(WhittakerPair pair, QMatrix f_prime) {
  require_same_square(pair.s, f_prime, "Whittaker triple: f' has the wrong size");
  for (const auto& [w, part] : weight_components(pair.s, f_prime))
    if (w <= -2)
      throw MathError(ErrorKind::PreconditionViolation,
                      "f' has a component of weight " + to_string(w) + " <= -2");
  return {std::move(pair), std::move(f_prime)};
}

Subspace centralizer(const QMatrix& f) {
  if (!f.square()) throw MathError(ErrorKind::DimensionMismatch, "centralizer of non-square matrix");
  return kernel(ad_matrix(f));
}

Subspace ad_image(const QMatrix& f) {
  if (!f.square()) throw MathError(ErrorKind::DimensionMismatch, "ad image of non-square matrix");
  return column_space(ad_matrix(f));
}

Subspace bracket_span(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw MathError(ErrorKind::DimensionMismatch, "bracket of subspaces");
  std::vector<Vector> span;
  const auto am = a.matrices();
  const auto bm = b.matrices();
  for (const auto& x : am)
    for (const auto& y : bm) span.push_back(bracket(x, y).flatten());
  return Subspace(a.ambient_dim(), span);
}

std::map<Rational, Subspace> ad_grading(const QMatrix& s) {
  const auto spec = spectral_decomposition(s);
  std::map<Rational, std::vector<Subspace>> parts;
  for (std::size_t a = 0; a < spec.projectors.size(); ++a)
    for (std::size_t b = 0; b < spec.projectors.size(); ++b)
      parts[spec.eigenvalues[a] - spec.eigenvalues[b]].push_back(
          block_span(spec.projectors[a], spec.projectors[b]));
  std::map<Rational, Subspace> out;
  for (auto& [w, list] : parts) out.emplace(w, sum(list, s.rows() * s.rows()));
  return out;
}

std::map<Rational, QMatrix> weight_components(const QMatrix& s, const QMatrix& m) {
  require_same_square(s, m, "weight components: S and M must be square of the same size");
  const auto spec = spectral_decomposition(s);
  std::map<Rational, QMatrix> out;
  for (std::size_t a = 0; a < spec.projectors.size(); ++a) {
    const QMatrix left = spec.projectors[a] * m;
    for (std::size_t b = 0; b < spec.projectors.size(); ++b) {
      QMatrix piece = left * spec.projectors[b];
      if (piece.is_zero()) continue;
      const Rational w = spec.eigenvalues[a] - spec.eigenvalues[b];
      auto it = out.find(w);
      if (it == out.end()) out.emplace(w, std::move(piece));
      else it->second += piece;
    }
  }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

std::map<WeightPair, QMatrix> BiGrading::decompose(const QMatrix& m) const {
  std::map<WeightPair, QMatrix> out;
  const auto& v = spectrum.values;
  const auto& p = spectrum.projectors;
  for (std::size_t a = 0; a < p.size(); ++a) {
    const QMatrix left = p[a] * m;
    for (std::size_t b = 0; b < p.size(); ++b) {
      QMatrix piece = left * p[b];
      if (piece.is_zero()) continue;
      const WeightPair w{v[a].first - v[b].first, v[a].second - v[b].second};
      auto it = out.find(w);
      if (it == out.end()) out.emplace(w, std::move(piece));
      else it->second += piece;
    }
  }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

BiGrading bigrading(const QMatrix& h, const QMatrix& z) {
  require_same_square(h, z, "bigrading: h and Z must be square of the same size");
  BiGrading g{h, z, {}, joint_spectrum(h, z)};
  std::map<WeightPair, std::vector<Subspace>> parts;
  const auto& v = g.spectrum.values;
  const auto& p = g.spectrum.projectors;
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = 0; b < p.size(); ++b)
      parts[{v[a].first - v[b].first, v[a].second - v[b].second}].push_back(block_span(p[a], p[b]));
  for (auto& [w, list] : parts) g.components.emplace(w, sum(list, h.rows() * h.rows()));
  return g;
}

NeutralityReport neutrality(const QMatrix& h, const QMatrix& f) {
  require_same_square(h, f, "neutrality: h and f must be square of the same size");
  NeutralityReport r;
  r.bracket = bracket(h, f) == Rational(-2) * f;
  r.in_image = ad_image(f).contains(h);

  if (const auto eig = rational_eigenvalues(h)) {
    std::map<Integer, std::size_t> mult;
    bool integral = true;
    for (const auto& e : *eig) {
      if (!is_integer(e.eigenvalue)) integral = false;
      mult[e.eigenvalue.get_num()] = e.space.dim();
    }
    auto m = [&](const Integer& j) {
      const auto it = mult.find(j);
      return it == mult.end() ? std::size_t{0} : it->second;
    };
    bool strings = integral;
    for (const auto& [j, k] : mult) {
      if (!strings) break;
      if (m(-j) != k) strings = false;
      if (j >= 0 && m(j + 2) > k) strings = false;
    }
    r.has_nil_positive = strings;
  }

  if (r.bracket && r.has_nil_positive) {
    const auto grading = ad_grading(h);
    const auto part = [&](int w) {
      const auto it = grading.find(Rational(w));
      return it == grading.end() ? Subspace(h.rows() * h.rows()) : it->second;
    };
    const Subspace g0 = part(0);
    const Subspace target = part(-2);
    std::vector<Vector> images;
    for (const auto& x : g0.matrices()) images.push_back(bracket(f, x).flatten());
    const Subspace img(h.rows() * h.rows(), images);
    r.surjective = img.dim() == target.dim() && target.contains(img);
  }

  r.by_definition = r.bracket && r.has_nil_positive && r.surjective;
  r.by_membership = r.bracket && r.in_image;
  if (r.by_definition != r.by_membership)
    throw MathError(ErrorKind::InternalCheckFailure,
                    "neutrality characterizations disagree (definition vs. membership in Im ad f)");
  return r;
}

bool is_neutral_pair(const QMatrix& h, const QMatrix& f) { return neutrality(h, f).by_definition; }

namespace {

struct NeutralSystem {
  RrefResult result;
  std::size_t n = 0;
};

// Unknown X in gl_n with h = [f, X]: [S, [f, X]] = 0 and [[f, X], f] = -2 f.
NeutralSystem neutral_system(const WhittakerPair& pair) {
  const std::size_t n = pair.s.rows();
  const std::size_t nn = n * n;
  QMatrix a(2 * nn, nn);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const QMatrix fx = bracket(pair.f, QMatrix::elementary(n, i + 1, j + 1));
      const auto top = bracket(pair.s, fx).flatten();
      const auto bottom = bracket(fx, pair.f).flatten();
      for (std::size_t k = 0; k < nn; ++k) {
        if (sgn(top[k]) != 0) a(k, i * n + j) = top[k];
        if (sgn(bottom[k]) != 0) a(nn + k, i * n + j) = bottom[k];
      }
    }
  Vector rhs(2 * nn, Rational(0));
  for (std::size_t k = 0; k < nn; ++k) rhs[nn + k] = Rational(-2) * pair.f.flatten()[k];
  return {rref_solve(a, rhs), n};
}

}  // namespace

Decomposition find_Z(const WhittakerPair& pair) {
  const auto sys = neutral_system(pair);
  if (!sys.result.solution)
    throw MathError(ErrorKind::NoSolution, "no h in Im ad f with [S, h] = 0 and [h, f] = -2 f");
  const QMatrix h = bracket(pair.f, QMatrix::from_flat(sys.n, *sys.result.solution));
  const QMatrix z = pair.s - h;
  if (!bracket(z, pair.f).is_zero())
    throw MathError(ErrorKind::InternalCheckFailure, "find_Z: [Z, f] != 0");
  if (!bracket(z, h).is_zero())
    throw MathError(ErrorKind::InternalCheckFailure, "find_Z: [Z, h] != 0");
  if (!is_neutral_pair(h, pair.f))
    throw MathError(ErrorKind::InternalCheckFailure, "find_Z: (h, f) is not neutral");
  return {h, z};
}

std::vector<QMatrix> find_Z_directions(const WhittakerPair& pair) {
  const auto sys = neutral_system(pair);
  std::vector<Vector> dirs;
  for (const auto& k : sys.result.kernel) dirs.push_back(bracket(pair.f, QMatrix::from_flat(sys.n, k)).flatten());
  return Subspace(sys.n * sys.n, dirs).matrices();
}

std::vector<Rational> critical_numbers(const BiGrading& grading) {
  std::set<Rational> out{Rational(0)};
  for (const auto& [w, space] : grading.components) {
    if (space.is_zero() || sgn(w.second) == 0) continue;
    const Rational t = (Rational(1) - w.first) / w.second;
    if (sgn(t) > 0) out.insert(t);
  }
  return {out.begin(), out.end()};
}

std::vector<Rational> critical_numbers(const QMatrix& h, const QMatrix& z, const QMatrix& f) {
  require_same_square(h, f, "critical numbers: f has the wrong size");
  return critical_numbers(bigrading(h, z));
}

std::string to_string(QuasiRule rule) { return rule == QuasiRule::WeightTwo ? "weight-two" : "weight-one-or-two"; }

QuasiRule parse_quasi_rule(const std::string& text) {
  if (text == "weight-two") return QuasiRule::WeightTwo;
  if (text == "weight-one-or-two") return QuasiRule::WeightOneOrTwo;
  throw ParseError("unknown quasi-critical rule '" + text + "' (weight-two | weight-one-or-two)");
}

QuasiCriticals quasi_criticals(const QMatrix& s, const QMatrix& f, const QMatrix& h, QuasiRule rule) {
  require_same_square(s, f, "quasi-criticals: S and f must be square of the same size");
  require_same_square(s, h, "quasi-criticals: S and h must be square of the same size");
  const auto grading = bigrading(h, s - h);
  std::set<Rational> out;
  for (const auto& [w, space] : grading.components) {
    if (space.is_zero() || sgn(w.second) == 0) continue;
    for (int target : {1, 2}) {
      if (target == 1 && rule == QuasiRule::WeightTwo) continue;
      const Rational t = (Rational(target) - w.first) / w.second;
      if (t > 1) out.insert(t);
    }
  }
  QuasiCriticals q;
  q.rule = rule;
  q.values.assign(out.begin(), out.end());
  q.in_invariant = q.values.size();
  return q;
}

Subspace graded_piece(const BiGrading& grading, const Rational& t, const Rational& weight) {
  return grading.collect([&](const Rational& a, const Rational& b) { return a + t * b == weight; });
}

SnapshotContext snapshot_context(const QMatrix& h, const QMatrix& z, const QMatrix& f) {
  require_same_square(h, f, "snapshot: f has the wrong size");
  SnapshotContext ctx{bigrading(h, z), f, centralizer(f), {}};
  const Subspace w = ctx.grading.collect(
      [](const Rational& a, const Rational& b) { return sgn(b) == 0 && a == 1; });
  ctx.m = skew_lagrangian(f, w);
  return ctx;
}

DeformationSnapshot snapshot(const SnapshotContext& ctx, const Rational& t) {
  if (sgn(t) < 0) throw MathError(ErrorKind::PreconditionViolation, "snapshot requires t >= 0");
  const auto& g = ctx.grading;
  DeformationSnapshot s;
  s.t = t;
  s.u = g.collect([&](const Rational& a, const Rational& b) { return a + t * b >= 1; });
  s.v = g.collect([&](const Rational& a, const Rational& b) { return a + t * b > 1; });
  s.w = graded_piece(g, t, Rational(1));
  s.rad = sum(s.v, intersect(s.w, ctx.centralizer));
  const Subspace neg = g.collect([&](const Rational& a, const Rational& b) { return sgn(b) < 0 && a + t * b >= 1; });
  const Subspace pos = g.collect([&](const Rational& a, const Rational& b) { return sgn(b) > 0 && a + t * b >= 1; });
  s.l = sum({ctx.m, neg, s.rad}, s.u.ambient_dim());
  s.r = sum({ctx.m, pos, s.rad}, s.u.ambient_dim());
  return s;
}

DeformationSnapshot snapshot(const QMatrix& h, const QMatrix& z, const QMatrix& f, const Rational& t) {
  return snapshot(snapshot_context(h, z, f), t);
}

ChainCertificate chain(const WhittakerPair& pair) {
  ChainCertificate cert;
  cert.pair = pair;
  const auto dz = find_Z(pair);
  cert.h = dz.h;
  cert.z = dz.z;
  cert.e = sl2_complete(pair.f, dz.h);
  auto& ok = cert.verified;
  const QMatrix& f = pair.f;
  const std::size_t nn = f.rows() * f.rows();

  const auto ctx = snapshot_context(dz.h, dz.z, f);
  const Subspace& cent = ctx.centralizer;

  // (i) ad(Z)-invariance: A^T G + G A = 0 on the standard basis of gl_n.
  {
    const Subspace all = Subspace::full(nn);
    const QMatrix gram = skew_gram(f, all);
    const QMatrix adz = ad_matrix(dz.z);
    check((adz.transpose() * gram + gram * adz).is_zero(), "omega is ad(Z)-invariant", ok);
    // (ii)
    check(skew_radical(f, all) == cent, "radical of omega equals the centralizer of f", ok);
    const auto hg = ad_grading(dz.h);
    std::vector<Subspace> nonpos;
    for (const auto& [w, space] : hg)
      if (sgn(w) <= 0) nonpos.push_back(space);
    check(sum(nonpos, nn).contains(cent), "centralizer of f lies in g^h_{<=0}", ok);
  }

  for (const auto& t : critical_numbers(ctx.grading))
    if (t <= 1) cert.criticals.push_back(t);
  std::vector<Rational> nodes = cert.criticals;
  if (nodes.back() != 1) nodes.push_back(Rational(1));

  for (const auto& t : nodes) {
    auto s = snapshot(ctx, t);
    const std::string at = " at " + t_label(t);
    const Subspace wc = intersect(s.w, cent);
    check(s.u.contains(s.v) && s.u.contains(s.w) && direct_sum_equals(s.u, s.v, s.w),
          "filtration: u = v + w direct" + at, ok);
    check(skew_radical(f, s.w) == wc, "Rad(omega|w) = w ∩ centralizer" + at, ok);
    check(skew_radical(f, s.u) == s.rad && direct_sum_equals(s.rad, s.v, wc),
          "Rad(omega|u) = v + (w ∩ centralizer)" + at, ok);
    for (const auto* sub : {&s.l, &s.r}) {
      const char* name = sub == &s.l ? "l" : "r";
      check(s.u.contains(*sub) && sub->contains(s.rad) && is_isotropic(f, *sub) &&
                2 * sub->dim() == s.u.dim() + s.rad.dim(),
            std::string("maximal isotropic: ") + name + " in u" + at, ok);
    }
    cert.snapshots.push_back(std::move(s));
  }

  // (v) w_t ∩ centralizer ⊆ u_T for nodes t < T.
  for (std::size_t i = 0; i < cert.snapshots.size(); ++i) {
    const Subspace wc = intersect(cert.snapshots[i].w, cent);
    for (std::size_t j = i + 1; j < cert.snapshots.size(); ++j)
      check(cert.snapshots[j].u.contains(wc),
            "w_t ∩ centralizer inside u_T for " + t_label(cert.snapshots[i].t) + ", T=" +
                to_string(cert.snapshots[j].t),
            ok);
  }

  for (std::size_t i = 0; i + 1 < cert.snapshots.size(); ++i) {
    const auto& lo = cert.snapshots[i];
    const auto& hi = cert.snapshots[i + 1];
    const std::string at = " for " + t_label(lo.t) + ", T=" + to_string(hi.t);
    const Subspace obs = intersect(hi.w, cent);
    check(hi.l.contains(lo.r), "r_t inside l_T" + at, ok);
    check(direct_sum_equals(hi.l, lo.r, obs), "l_T = r_t + (w_T ∩ centralizer) direct" + at, ok);
    check(lo.r.contains(hi.v), "v_T inside r_t" + at, ok);
    check(brackets_inside(hi.l, lo.r, lo.r), "r_t is an ideal of l_T" + at, ok);
    check(brackets_inside(hi.l, hi.l, lo.r), "[l_T, l_T] inside r_t" + at, ok);
    check(brackets_inside(lo.r, hi.v, hi.v), "[r_t, v_T] inside v_T" + at, ok);
    check(brackets_inside(lo.r, lo.r, hi.v), "[r_t, r_t] inside v_T" + at, ok);
    cert.inclusions.push_back({lo.t, hi.t, lo.r.dim(), hi.l.dim()});

    const Subspace lowest = graded_piece(ctx.grading, hi.t, Rational(-1));
    const Subspace dual = intersect(lowest, centralizer(cert.e));
    check(pairs_nondegenerately(obs, dual), "obstruction: trace pairing with ad(e)-highest dual" + at, ok);
    cert.obstructions.push_back({hi.t, obs, dual});
  }
  return cert;
}

ModelData model_data(const WhittakerPair& pair) {
  const std::size_t nn = pair.s.rows() * pair.s.rows();
  std::vector<Subspace> parts;
  for (const auto& [w, space] : ad_grading(pair.s))
    if (w >= 1) parts.push_back(space);
  ModelData m;
  m.u = sum(parts, nn);
  m.n_rad = skew_radical(pair.f, m.u);
  m.n_prime = intersect(m.n_rad, annihilator(Subspace(nn, {pair.f.transpose().flatten()})));
  return m;
}

QuasiModelData quasi_model_data(const WhittakerTriple& triple) {
  const QMatrix& s = triple.pair.s;
  const QMatrix& f = triple.pair.f;
  const QMatrix total = f + triple.f_prime;
  const std::size_t nn = s.rows() * s.rows();
  const auto grading = ad_grading(s);
  std::vector<Subspace> ge1, gt1;
  Subspace w1(nn);
  for (const auto& [w, space] : grading) {
    if (w >= 1) ge1.push_back(space);
    if (w > 1) gt1.push_back(space);
    if (w == 1) w1 = space;
  }
  QuasiModelData q;
  q.u = sum(ge1, nn);
  q.v = sum(gt1, nn);
  q.z = sum(q.v, intersect(w1, centralizer(f)));
  q.k = intersect(q.z, annihilator(Subspace(nn, {total.transpose().flatten()})));

  const auto fail = [](const std::string& clause) { throw MathError(ErrorKind::ShapeViolation, clause); };
  if (!brackets_inside(q.u, q.u, q.z)) fail("[u, u] inside z");
  if (!brackets_inside(q.u, q.z, q.k)) fail("[u, z] inside k");
  if (skew_radical(total, q.u) != q.z) fail("radical of omega_{f+f'} on u equals z");
  for (const auto& x : q.u.matrices())
    for (const auto& y : q.u.matrices())
      if (sgn(trace_product(triple.f_prime, bracket(x, y))) != 0) fail("f' vanishes on [u, u]");

  Rational a;
  bool found = false;
  for (const auto& [w, space] : grading)
    if (w > 1 && !space.is_zero()) {
      a = w;
      found = true;
      break;
    }
  if (found) {
    std::vector<Subspace> scaled;
    for (const auto& [w, space] : ad_grading(Rational(1) / a * s))
      if (w >= 1) scaled.push_back(space);
    if (sum(scaled, nn) != q.v) fail("g^{S/a}_{>=1} equals v for the first eigenvalue a > 1");
    q.v_grading_checked = true;
  }
  return q;
}

}  // namespace whitforge
