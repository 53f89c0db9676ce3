#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"
#include "whitforge/deform.hpp"
#include "whitforge/partitions.hpp"
#include "whitforge/whitpair.hpp"

namespace whitforge::io {

using Json = nlohmann::json;

// Sparse matrix text: sums of optionally scaled atoms, where an atom is
// E<i><j> (single-digit indices), E<i>,<j>, I, or diag(d1,...,dn).
// Examples: "E21+E43", "2*E11-1/2*E3,4", "diag(3,1,-1,-3)", "0".
// Throws ParseError.
QMatrix parse_e_notation(std::string_view text, std::size_t n);

// Either an E-notation string or a dense array of rows whose entries are
// rational strings or integers. Throws ParseError.
QMatrix matrix_from_json(const Json& value, std::optional<std::size_t> n);

// "3,1,1" (or space separated). Parts are sorted; throws ParseError on
// anything that is not a list of positive integers.
Partition parse_partition(std::string_view text);
Composition parse_composition(std::string_view text);

// Matrices of a pair-style input document {"n", "S", "f", "h"?, "f_prime"?}.
struct PairInput {
  std::size_t n = 0;
  QMatrix s, f;
  std::optional<QMatrix> h, f_prime;
};
PairInput read_pair_input(const Json& doc);

Json encode(const Rational& r);
Json encode(const QMatrix& m);
Json encode(const Subspace& s);  // flattened basis vectors
Json encode(const Partition& p);
Json encode(const std::vector<Rational>& values);
Json encode(const std::vector<NamedCheck>& checks);  // {name: passed}

Json encode(const DeformationSnapshot& s);
Json encode(const ChainCertificate& c);
Json encode(const DeformationCertificate& c);
Json encode(const ConditionNotMet& c);
Json encode(const ComparisonCertificate& c);
Json encode(const QuasiCriticals& q);
Json encode(const ModelData& m);
Json encode(const QuasiModelData& m);
Json encode(const NeutralityReport& r);
Json encode(const SlOrbitClass& c);

// Canonical text: sorted keys, two-space indent, trailing newline.
std::string dump(const Json& doc);

}  // namespace whitforge::io
