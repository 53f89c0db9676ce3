#include "whitforge/partitions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "whitforge/errors.hpp"

namespace whitforge {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw MathError(ErrorKind::PreconditionViolation, "partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw MathError(ErrorKind::PreconditionViolation, "partition parts must be weakly decreasing");
    n_ += parts_[i];
  }
}

Partition Partition::sorted(std::vector<int> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

int Partition::multiplicity(int value) const noexcept {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), value));
}

int Partition::gcd() const noexcept {
  int g = 0;
  for (int p : parts_) g = std::gcd(g, p);
  return g;
}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p <= 0) throw MathError(ErrorKind::PreconditionViolation, "composition parts must be positive");
    n_ += p;
  }
}

namespace {
std::string join(const std::vector<int>& parts) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < parts.size(); ++i) out << (i ? "," : "") << parts[i];
  out << ")";
  return out.str();
}
}  // namespace

std::string to_string(const Partition& p) { return join(p.parts()); }
std::string to_string(const Composition& c) { return join(c.parts()); }

std::string to_string(GroupTag tag) {
  switch (tag) {
    case GroupTag::GL: return "GL";
    case GroupTag::SL: return "SL";
    case GroupTag::Sp: return "Sp";
    case GroupTag::O: return "O";
    case GroupTag::SO: return "SO";
    case GroupTag::U: return "U";
    case GroupTag::SU: return "SU";
  }
  return "?";
}

std::string to_string(FieldFlavor field) { return field == FieldFlavor::Real ? "real" : "padic"; }

GroupTag parse_group_tag(const std::string& text) {
  for (auto tag : {GroupTag::GL, GroupTag::SL, GroupTag::Sp, GroupTag::O, GroupTag::SO, GroupTag::U, GroupTag::SU})
    if (to_string(tag) == text) return tag;
  throw ParseError("unknown group tag '" + text + "'");
}

FieldFlavor parse_field_flavor(const std::string& text) {
  if (text == "real") return FieldFlavor::Real;
  if (text == "padic") return FieldFlavor::PAdic;
  throw ParseError("unknown field flavor '" + text + "'");
}

bool dominance_leq(const Partition& mu, const Partition& lambda) {
  if (mu.size() != lambda.size())
    throw MathError(ErrorKind::SizeMismatch, "dominance order compares partitions of the same n");
  int sum_mu = 0, sum_lambda = 0;
  for (std::size_t j = 1; j <= std::max(mu.length(), lambda.length()); ++j) {
    sum_mu += mu.part(j);
    sum_lambda += lambda.part(j);
    if (sum_lambda < sum_mu) return false;
  }
  return true;
}

bool closure_leq(const Composition& eta, const Composition& gamma) {
  if (eta.size() != gamma.size())
    throw MathError(ErrorKind::SizeMismatch, "closure order compares compositions of the same n");
  return dominance_leq(eta.sorted(), gamma.sorted());
}

Partition transpose(const Partition& lambda) {
  std::vector<int> t;
  for (int k = 1; k <= lambda.part(1); ++k) {
    int count = 0;
    for (int p : lambda.parts())
      if (p >= k) ++count;
    t.push_back(count);
  }
  return Partition(std::move(t));
}

bool is_type_valid(const GroupType& g, const Partition& lambda) {
  switch (g.tag) {
    case GroupTag::Sp:
      for (int p : lambda.parts())
        if (p % 2 == 1 && lambda.multiplicity(p) % 2 != 0) return false;
      return true;
    case GroupTag::O:
    case GroupTag::SO:
      for (int p : lambda.parts())
        if (p % 2 == 0 && lambda.multiplicity(p) % 2 != 0) return false;
      return true;
    default:
      return true;
  }
}

bool oht_admissible(const Partition& lambda) {
  for (int row : lambda.parts()) {
    int count = 0;
    if (row % 2 == 0) {
      for (int other : lambda.parts())
        if (other % 2 == 1 && other < row) ++count;
    } else {
      for (int other : lambda.parts())
        if (other % 2 == 0 && other > row) ++count;
    }
    if (count % 2 != 0) return false;
  }
  return true;
}

Classification classify(const GroupType& g, const Partition& lambda) {
  if (!is_type_valid(g, lambda))
    throw MathError(ErrorKind::InvalidPartitionForType,
                    "partition " + to_string(lambda) + " does not label a " + to_string(g.tag) + " orbit");
  Classification c;
  switch (g.tag) {
    case GroupTag::Sp:
    case GroupTag::O:
    case GroupTag::SO: {
      const bool v = oht_admissible(lambda);
      c.special = v;
      c.admissible = v;
      c.quasi_admissible = v;
      break;
    }
    case GroupTag::GL:
    case GroupTag::SL:
      c.special = true;
      c.admissible = true;
      c.quasi_admissible = true;
      break;
    case GroupTag::U:
      c.special = true;
      c.quasi_admissible = true;
      c.admissible = g.field == FieldFlavor::Real ? oht_admissible(lambda) : true;
      break;
    case GroupTag::SU:
      c.special = true;
      c.quasi_admissible = true;
      if (g.field == FieldFlavor::PAdic) c.admissible = true;
      break;
  }
  return c;
}

bool require_admissible(const GroupType& g, const Partition& lambda) {
  const auto c = classify(g, lambda);
  if (!c.admissible)
    throw MathError(ErrorKind::UnsupportedQuery, "admissibility criterion for real SU(p,q) is not available");
  return *c.admissible;
}

bool distinguished_gl(const Partition& lambda) { return lambda.length() == 1; }

bool distinguished(const GroupType& g, const Partition& lambda) {
  if (g.tag != GroupTag::GL && g.tag != GroupTag::SL)
    throw MathError(ErrorKind::UnsupportedQuery, "distinguished orbits are decided for GL/SL only");
  return distinguished_gl(lambda);
}

std::size_t lemma_part_index(const Partition& lambda, const Partition& mu) {
  if (!dominance_leq(mu, lambda))
    throw MathError(ErrorKind::NotDominated, to_string(mu) + " is not dominated by " + to_string(lambda));
  for (std::size_t i = 1; i <= lambda.length(); ++i)
    if (lambda.part(i) >= mu.part(i) && mu.part(i) >= lambda.part(i + 1)) return i;
  throw MathError(ErrorKind::InternalCheckFailure, "part index: no index found for a dominated pair");
}

std::vector<Partition> all_partitions(int n) {
  std::vector<Partition> out;
  if (n <= 0) return out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      current.push_back(p);
      rec(remaining - p, p);
      current.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<Partition> enumerate_orbits(const GroupType& g, int n) {
  std::vector<Partition> out;
  for (auto& p : all_partitions(n))
    if (is_type_valid(g, p)) out.push_back(std::move(p));
  return out;
}

}  // namespace whitforge
