#include "whitforge/io.hpp"

#include <cctype>

#include "whitforge/errors.hpp"

namespace whitforge::io {
namespace {

class ENotationParser {
 public:
  ENotationParser(std::string_view text, std::size_t n) : n_(n) {
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) text_.push_back(c);
  }

  QMatrix parse() {
    if (text_.empty()) fail("empty matrix");
    QMatrix out = QMatrix::zero(n_);
    bool first = true;
    while (pos_ < text_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      out += Rational(sign) * term();
      first = false;
    }
    return out;
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("E-notation: " + what + " at offset " + std::to_string(pos_) + " in '" + text_ + "'");
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  Rational number() {
    std::string lit = digits();
    if (lit.empty()) fail("expected a number");
    if (peek() == '/') {
      ++pos_;
      const std::string den = digits();
      if (den.empty()) fail("expected a denominator");
      lit += "/" + den;
    }
    return parse_rational(lit);
  }

  std::size_t index(const std::string& lit) const {
    const unsigned long v = std::stoul(lit);
    if (v < 1 || v > n_) fail("index " + lit + " outside 1.." + std::to_string(n_));
    return v;
  }

  QMatrix atom() {
    if (text_.compare(pos_, 5, "diag(") == 0) {
      pos_ += 5;
      const std::size_t close = text_.find(')', pos_);
      if (close == std::string::npos) fail("unclosed diag(");
      Vector d;
      std::size_t start = pos_;
      for (std::size_t k = pos_; k <= close; ++k)
        if (k == close || text_[k] == ',') {
          d.push_back(parse_rational(text_.substr(start, k - start)));
          start = k + 1;
        }
      if (d.size() != n_) fail("diag needs " + std::to_string(n_) + " entries");
      pos_ = close + 1;
      return QMatrix::diagonal(d);
    }
    if (peek() == 'I') {
      ++pos_;
      return QMatrix::identity(n_);
    }
    if (peek() != 'E') fail("expected E, I or diag(");
    ++pos_;
    const std::string first = digits();
    if (peek() == ',') {
      ++pos_;
      const std::string second = digits();
      if (first.empty() || second.empty()) fail("expected E<i>,<j>");
      return QMatrix::elementary(n_, index(first), index(second));
    }
    if (first.size() != 2) fail("write E<i>,<j> when an index has more than one digit");
    return QMatrix::elementary(n_, index(first.substr(0, 1)), index(first.substr(1, 1)));
  }

  QMatrix term() {
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      const Rational c = number();
      if (peek() == '*') ++pos_;
      else if (peek() == '\0' || peek() == '+' || peek() == '-') {
        if (sgn(c) != 0) fail("bare scalar (write c*I for a scalar matrix)");
        return QMatrix::zero(n_);
      }
      return c * atom();
    }
    return atom();
  }

  std::string text_;
  std::size_t n_;
  std::size_t pos_ = 0;
};

std::vector<int> parse_parts(std::string_view text) {
  std::vector<int> parts;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) return;
    if (cur.size() > 6 || !std::all_of(cur.begin(), cur.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw ParseError("not a positive integer: '" + cur + "'");
    const int v = std::stoi(cur);
    if (v <= 0) throw ParseError("parts must be positive");
    parts.push_back(v);
    cur.clear();
  };
  for (char c : text) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) flush();
    else cur.push_back(c);
  }
  flush();
  if (parts.empty()) throw ParseError("empty partition");
  return parts;
}

Rational entry_from_json(const Json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long>());
  throw ParseError("matrix entries must be rational strings or integers");
}

Json encode_vector(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(encode(x));
  return out;
}

}  // namespace

QMatrix parse_e_notation(std::string_view text, std::size_t n) {
  if (n == 0) throw ParseError("matrix size must be positive");
  return ENotationParser(text, n).parse();
}

QMatrix matrix_from_json(const Json& value, std::optional<std::size_t> n) {
  if (value.is_string()) {
    if (!n) throw ParseError("E-notation needs the size \"n\"");
    return parse_e_notation(value.get<std::string>(), *n);
  }
  if (!value.is_array() || value.empty()) throw ParseError("matrix must be a string or a nonempty array of rows");
  const std::size_t rows = value.size();
  if (n && rows != *n) throw ParseError("matrix has " + std::to_string(rows) + " rows, expected " + std::to_string(*n));
  QMatrix m(rows, rows);
  for (std::size_t i = 0; i < rows; ++i) {
    const Json& row = value[i];
    if (!row.is_array() || row.size() != rows) throw ParseError("matrix must be square");
    for (std::size_t j = 0; j < rows; ++j) m(i, j) = entry_from_json(row[j]);
  }
  return m;
}

Partition parse_partition(std::string_view text) { return Partition::sorted(parse_parts(text)); }

Composition parse_composition(std::string_view text) { return Composition(parse_parts(text)); }

PairInput read_pair_input(const Json& doc) {
  if (!doc.is_object()) throw ParseError("input must be a JSON object");
  std::optional<std::size_t> n;
  if (doc.contains("n")) {
    if (!doc["n"].is_number_integer() || doc["n"].get<long>() <= 0) throw ParseError("\"n\" must be a positive integer");
    n = doc["n"].get<std::size_t>();
  }
  for (const char* key : {"S", "f"})
    if (!doc.contains(key)) throw ParseError(std::string("input lacks \"") + key + "\"");
  PairInput in;
  in.s = matrix_from_json(doc["S"], n);
  if (!n) n = in.s.rows();
  in.n = *n;
  in.f = matrix_from_json(doc["f"], n);
  if (doc.contains("h")) in.h = matrix_from_json(doc["h"], n);
  if (doc.contains("f_prime")) in.f_prime = matrix_from_json(doc["f_prime"], n);
  return in;
}

Json encode(const Rational& r) { return to_string(r); }

Json encode(const QMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(encode_vector(m.row(i)));
  return out;
}

Json encode(const Subspace& s) {
  Json out = Json::array();
  for (const auto& v : s.basis()) out.push_back(encode_vector(v));
  return out;
}

Json encode(const Partition& p) { return p.parts(); }

Json encode(const std::vector<Rational>& values) { return encode_vector(values); }

Json encode(const std::vector<NamedCheck>& checks) {
  Json out = Json::object();
  for (const auto& c : checks) out[c.name] = c.passed;
  return out;
}

Json encode(const DeformationSnapshot& s) {
  return Json{{"t", encode(s.t)},
              {"dims", {{"u", s.u.dim()}, {"v", s.v.dim()}, {"w", s.w.dim()}, {"rad", s.rad.dim()},
                        {"l", s.l.dim()}, {"r", s.r.dim()}}},
              {"u", encode(s.u)},
              {"v", encode(s.v)},
              {"w", encode(s.w)},
              {"rad", encode(s.rad)},
              {"l", encode(s.l)},
              {"r", encode(s.r)}};
}

Json encode(const ChainCertificate& c) {
  Json snapshots = Json::array(), inclusions = Json::array(), obstructions = Json::array();
  for (const auto& s : c.snapshots) snapshots.push_back(encode(s));
  for (const auto& i : c.inclusions)
    inclusions.push_back({{"from", encode(i.from)}, {"to", encode(i.to)}, {"dim_r", i.dim_r}, {"dim_l", i.dim_l}});
  for (const auto& o : c.obstructions)
    obstructions.push_back({{"t", encode(o.t)}, {"space", encode(o.space)}, {"dual", encode(o.dual)}});
  return Json{{"pair", {{"S", encode(c.pair.s)}, {"f", encode(c.pair.f)}}},
              {"h", encode(c.h)},
              {"Z", encode(c.z)},
              {"e", encode(c.e)},
              {"criticals", encode(c.criticals)},
              {"snapshots", snapshots},
              {"inclusions", inclusions},
              {"obstructions", obstructions},
              {"verified", c.verified}};
}

Json encode(const DeformationCertificate& c) {
  return Json{{"n", c.n},          {"mu", encode(c.mu)}, {"lambda", encode(c.lambda)},
              {"h", encode(c.h)},  {"f", encode(c.f)},   {"Z", encode(c.z)},
              {"psi", encode(c.psi)}, {"checks", encode(c.checks)}};
}

Json encode(const ConditionNotMet& c) {
  return Json{{"condition_not_met", {{"d", c.d}, {"a_class", c.a_class.get_str()}}}};
}

Json encode(const ComparisonCertificate& c) {
  return Json{{"h", encode(c.h)}, {"f", encode(c.f)}, {"S", encode(c.s)}, {"F", encode(c.F)},
              {"checks", encode(c.checks)}};
}

Json encode(const QuasiCriticals& q) {
  return Json{{"values", encode(q.values)}, {"in_invariant", q.in_invariant}, {"rule", to_string(q.rule)}};
}

Json encode(const ModelData& m) {
  return Json{{"u", encode(m.u)}, {"n_rad", encode(m.n_rad)}, {"n_prime", encode(m.n_prime)},
              {"dims", {{"u", m.u.dim()}, {"n_rad", m.n_rad.dim()}, {"n_prime", m.n_prime.dim()}}}};
}

Json encode(const QuasiModelData& m) {
  return Json{{"u", encode(m.u)},
              {"v", encode(m.v)},
              {"z", encode(m.z)},
              {"k", encode(m.k)},
              {"v_grading_checked", m.v_grading_checked},
              {"dims", {{"u", m.u.dim()}, {"v", m.v.dim()}, {"z", m.z.dim()}, {"k", m.k.dim()}}}};
}

Json encode(const NeutralityReport& r) {
  return Json{{"bracket", r.bracket},       {"has_nil_positive", r.has_nil_positive},
              {"surjective", r.surjective}, {"in_image", r.in_image},
              {"by_definition", r.by_definition}, {"by_membership", r.by_membership}};
}

Json encode(const SlOrbitClass& c) {
  return Json{{"lambda", encode(c.lambda)}, {"d", c.d}, {"a_class", c.a_class.get_str()}};
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace whitforge::io
