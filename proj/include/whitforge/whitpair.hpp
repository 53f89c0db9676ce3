#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "whitforge/eigen.hpp"
#include "whitforge/linalg.hpp"

namespace whitforge {

// Functionals are carried as matrices through the trace form,
// phi(X) = trace(f X), so ad*(S) phi = -2 phi  <=>  [S, f] = -2 f.
struct WhittakerPair {
  QMatrix s;
  QMatrix f;
};

struct WhittakerTriple {
  WhittakerPair pair;
  QMatrix f_prime;
};

// Validates S rational semisimple and [S, f] = -2 f; throws otherwise.
WhittakerPair make_whittaker_pair(QMatrix s, QMatrix f);
// Additionally requires every ad(S)-component of f' to have weight > -2.
WhittakerTriple make_whittaker_triple(WhittakerPair pair, QMatrix f_prime);

// Centralizer {X : [f, X] = 0} as a subspace of gl_n.
Subspace centralizer(const QMatrix& f);
// Image of ad(f) in gl_n.
Subspace ad_image(const QMatrix& f);
// span{[x, y] : x in A, y in B}
Subspace bracket_span(const Subspace& a, const Subspace& b);

// ad(S)-eigenspaces of gl_n keyed by weight.
std::map<Rational, Subspace> ad_grading(const QMatrix& s);
// M = sum M_r with [S, M_r] = r M_r; zero components omitted.
std::map<Rational, QMatrix> weight_components(const QMatrix& s, const QMatrix& m);

using WeightPair = std::pair<Rational, Rational>;  // (h-weight alpha, Z-weight beta)

struct BiGrading {
  QMatrix h;
  QMatrix z;
  std::map<WeightPair, Subspace> components;

  // Sum of the components whose weight pair satisfies `keep`.
  template <class Pred>
  Subspace collect(Pred keep) const {
    std::vector<Subspace> parts;
    for (const auto& [w, space] : components)
      if (keep(w.first, w.second)) parts.push_back(space);
    return sum(parts, h.rows() * h.rows());
  }
  // Joint component of M at each weight pair; zero components omitted.
  std::map<WeightPair, QMatrix> decompose(const QMatrix& m) const;

  JointSpectrum spectrum;
};

// Throws NotRationalSemisimple, NotCommuting.
BiGrading bigrading(const QMatrix& h, const QMatrix& z);

struct NeutralityReport {
  bool bracket = false;          // [h, f] = -2 f
  bool has_nil_positive = false; // eigenvalues of h form sl2 strings
  bool surjective = false;       // ad(f): g^h_0 -> g^h_{-2} onto
  bool in_image = false;         // h in Im ad(f)
  bool by_definition = false;    // bracket && has_nil_positive && surjective
  bool by_membership = false;    // bracket && in_image
};

// Evaluates both characterizations; throws InternalCheckFailure if they disagree.
NeutralityReport neutrality(const QMatrix& h, const QMatrix& f);
bool is_neutral_pair(const QMatrix& h, const QMatrix& f);

struct Decomposition {
  QMatrix h;
  QMatrix z;  // z = S - h
};

// Echelon-first solution of {h in Im ad f, [S, h] = 0, [h, f] = -2 f}.
Decomposition find_Z(const WhittakerPair& pair);
// Directions D with find_Z(pair).h + D also a solution (a spanning set).
std::vector<QMatrix> find_Z_directions(const WhittakerPair& pair);

// {0} together with every t > 0 at which u_t jumps.
std::vector<Rational> critical_numbers(const QMatrix& h, const QMatrix& z, const QMatrix& f);
std::vector<Rational> critical_numbers(const BiGrading& grading);

// Which S_t-weights leaving the Z-centralizer make t > 1 quasi-critical.
// WeightTwo counts weight-2 crossings only; WeightOneOrTwo is the
// literal two-clause definition and can report smaller values.
enum class QuasiRule { WeightTwo, WeightOneOrTwo };

struct QuasiCriticals {
  std::vector<Rational> values;  // ascending, all > 1
  std::size_t in_invariant = 0;
  QuasiRule rule = QuasiRule::WeightTwo;
};

QuasiCriticals quasi_criticals(const QMatrix& s, const QMatrix& f, const QMatrix& h,
                               QuasiRule rule = QuasiRule::WeightTwo);
std::string to_string(QuasiRule rule);
QuasiRule parse_quasi_rule(const std::string& text);

struct DeformationSnapshot {
  Rational t;
  Subspace u, v, w, rad, l, r;
};

// Shared per-chain data: the grading, the centralizer of f and the
// Lagrangian m chosen once inside g^Z_0 ∩ g^S_1.
struct SnapshotContext {
  BiGrading grading;
  QMatrix f;
  Subspace centralizer;
  Subspace m;
};

SnapshotContext snapshot_context(const QMatrix& h, const QMatrix& z, const QMatrix& f);
DeformationSnapshot snapshot(const SnapshotContext& ctx, const Rational& t);
DeformationSnapshot snapshot(const QMatrix& h, const QMatrix& z, const QMatrix& f, const Rational& t);

// Sum of the components with alpha + t beta == weight.
Subspace graded_piece(const BiGrading& grading, const Rational& t, const Rational& weight);

struct InclusionProof {
  Rational from, to;  // r_from ⊆ l_to
  std::size_t dim_r = 0, dim_l = 0;
};

struct Obstruction {
  Rational t;          // the upper end T of the step
  Subspace space;      // w_T ∩ centralizer(f)
  Subspace dual;       // g^{S_T}_{-1} ∩ ker ad(e), paired nondegenerately with `space`
};

struct ChainCertificate {
  WhittakerPair pair;
  QMatrix h, z, e;
  std::vector<Rational> criticals;           // critical numbers in [0, 1]
  std::vector<DeformationSnapshot> snapshots; // one per node: criticals plus 1
  std::vector<InclusionProof> inclusions;
  std::vector<Obstruction> obstructions;
  std::vector<std::string> verified;          // clauses checked during construction
};

// Builds and verifies the chain; throws LemmaViolation naming the failed clause.
ChainCertificate chain(const WhittakerPair& pair);

struct ModelData {
  Subspace u, n_rad, n_prime;
};

ModelData model_data(const WhittakerPair& pair);

struct QuasiModelData {
  Subspace u, v, z, k;
  bool v_grading_checked = false;  // false when S has no ad-eigenvalue above 1
};

// Throws ShapeViolation naming the failed containment.
QuasiModelData quasi_model_data(const WhittakerTriple& triple);

}  // namespace whitforge
