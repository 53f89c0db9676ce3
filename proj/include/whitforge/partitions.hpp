#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace whitforge {

// Weakly decreasing sequence of positive integers.
class Partition {
 public:
  Partition() = default;
  // Throws PreconditionViolation unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);
  // Sorts arbitrary positive parts into a partition.
  static Partition sorted(std::vector<int> parts);
  static Partition single(int n) { return Partition({n}); }
  static Partition ones(int n) { return Partition(std::vector<int>(static_cast<std::size_t>(n), 1)); }

  const std::vector<int>& parts() const noexcept { return parts_; }
  std::size_t length() const noexcept { return parts_.size(); }
  int size() const noexcept { return n_; }
  // 1-based part access; 0 past the end.
  int part(std::size_t i) const noexcept { return i >= 1 && i <= parts_.size() ? parts_[i - 1] : 0; }
  int multiplicity(int value) const noexcept;
  int gcd() const noexcept;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

// Sequence of positive integers (any order).
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  std::size_t length() const noexcept { return parts_.size(); }
  int size() const noexcept { return n_; }
  Partition sorted() const { return Partition::sorted(parts_); }

  friend bool operator==(const Composition&, const Composition&) = default;

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

std::string to_string(const Partition& p);
std::string to_string(const Composition& c);

enum class GroupTag { GL, SL, Sp, O, SO, U, SU };
enum class FieldFlavor { Real, PAdic };

struct GroupType {
  GroupTag tag = GroupTag::GL;
  FieldFlavor field = FieldFlavor::Real;
};

std::string to_string(GroupTag tag);
std::string to_string(FieldFlavor field);
GroupTag parse_group_tag(const std::string& text);
FieldFlavor parse_field_flavor(const std::string& text);

// Partial sums of lambda dominate those of mu. Throws SizeMismatch.
bool dominance_leq(const Partition& mu, const Partition& lambda);
// Closure order of nilpotent gl_n orbits, labelled by compositions.
bool closure_leq(const Composition& eta, const Composition& gamma);
Partition transpose(const Partition& lambda);

bool is_type_valid(const GroupType& g, const Partition& lambda);

// Every even row has an even number of strictly shorter odd rows, and every
// odd row has an even number of strictly longer even rows.
bool oht_admissible(const Partition& lambda);

struct Classification {
  bool special = false;
  std::optional<bool> admissible;  // nullopt: no criterion available for this group
  bool quasi_admissible = false;
};

// Throws InvalidPartitionForType.
Classification classify(const GroupType& g, const Partition& lambda);
// Admissibility or UnsupportedQuery.
bool require_admissible(const GroupType& g, const Partition& lambda);

// Regular orbit check for gl_n.
bool distinguished_gl(const Partition& lambda);
// GL/SL only; other groups throw UnsupportedQuery.
bool distinguished(const GroupType& g, const Partition& lambda);

// Smallest 1-based i <= length(lambda) with lambda_i >= mu_i >= lambda_{i+1}.
// Throws NotDominated unless mu <= lambda.
std::size_t lemma_part_index(const Partition& lambda, const Partition& mu);

// All partitions of n, lexicographically descending.
std::vector<Partition> all_partitions(int n);
// Type-valid partitions of n, lexicographically descending.
std::vector<Partition> enumerate_orbits(const GroupType& g, int n);

}  // namespace whitforge
