#include <algorithm>
#include <set>

#include "doctest.h"
#include "whitforge/errors.hpp"
#include "whitforge/partitions.hpp"

using namespace whitforge;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

// Independent dominance oracle: lambda - mu must be a nonnegative
// combination of raising operators e_i - e_j (i < j), i.e. the partial sums
// of the padded difference stay nonnegative. Written with explicit padding.
bool dominated_by_sums(const Partition& mu, const Partition& lambda) {
  const std::size_t len = std::max(mu.length(), lambda.length());
  long diff = 0;
  for (std::size_t i = 1; i <= len; ++i) {
    diff += lambda.part(i) - mu.part(i);
    if (diff < 0) return false;
  }
  return diff == 0;
}

const GroupType kSp{GroupTag::Sp, FieldFlavor::Real};

}  // namespace

TEST_CASE("partition validation") {
  CHECK_THROWS_AS(P({1, 2}), MathError);
  CHECK_THROWS_AS(P({2, 0}), MathError);
  CHECK(Partition::sorted({1, 3, 2}) == P({3, 2, 1}));
  CHECK(Composition({1, 3}).sorted() == P({3, 1}));
  CHECK(P({4, 2, 2}).gcd() == 2);
  CHECK(P({4, 2, 2}).multiplicity(2) == 2);
  CHECK(to_string(P({3, 1})) == "(3,1)");
}

TEST_CASE("dominance and closure order examples") {
  CHECK(dominance_leq(P({2, 2}), P({3, 1})));
  CHECK(dominance_leq(P({3, 1}), P({3, 1})));
  CHECK(!dominance_leq(P({3, 1}), P({2, 2})));
  CHECK_THROWS_AS(dominance_leq(P({2}), P({3})), MathError);
  CHECK(closure_leq(Composition({1, 3}), Composition({3, 1})));
  CHECK(closure_leq(Composition({2, 2}), Composition({4})));
  CHECK(!closure_leq(Composition({4}), Composition({2, 2})));
}

TEST_CASE("dominance is a partial order matching the oracle, n <= 10") {
  for (int n = 1; n <= 10; ++n) {
    const auto all = all_partitions(n);
    for (const auto& a : all) {
      CHECK(dominance_leq(a, a));
      CHECK(dominance_leq(Partition::ones(n), a));
      CHECK(dominance_leq(a, Partition::single(n)));
      CHECK(transpose(transpose(a)) == a);
      for (const auto& b : all) {
        const bool ab = dominance_leq(a, b);
        CHECK(ab == dominated_by_sums(a, b));
        if (ab && dominance_leq(b, a)) CHECK(a == b);
        CHECK(ab == dominance_leq(transpose(b), transpose(a)));
      }
    }
    if (n <= 7)
      for (const auto& a : all)
        for (const auto& b : all)
          for (const auto& c : all)
            if (dominance_leq(a, b) && dominance_leq(b, c)) CHECK(dominance_leq(a, c));
  }
}

TEST_CASE("transpose examples") {
  CHECK(transpose(P({3, 1})) == P({2, 1, 1}));
  CHECK(transpose(Partition::single(5)) == Partition::ones(5));
  CHECK(transpose(Partition::ones(5)) == Partition::single(5));
}

TEST_CASE("type validity and enumeration") {
  CHECK(is_type_valid(kSp, P({2, 1, 1})));
  CHECK(!is_type_valid(kSp, P({3, 1})));
  CHECK(is_type_valid({GroupTag::O, FieldFlavor::Real}, P({3, 1})));
  CHECK(!is_type_valid({GroupTag::O, FieldFlavor::Real}, P({2, 1})));

  const std::vector<Partition> gl3{P({3}), P({2, 1}), P({1, 1, 1})};
  CHECK(enumerate_orbits({GroupTag::GL, FieldFlavor::Real}, 3) == gl3);
  const std::vector<Partition> sp4{P({4}), P({2, 2}), P({2, 1, 1}), P({1, 1, 1, 1})};
  CHECK(enumerate_orbits(kSp, 4) == sp4);
  const std::vector<Partition> o3{P({3}), P({1, 1, 1})};
  CHECK(enumerate_orbits({GroupTag::O, FieldFlavor::Real}, 3) == o3);
  // Partition counts p(n).
  const std::vector<std::size_t> counts{1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int n = 1; n <= 10; ++n) CHECK(all_partitions(n).size() == counts[static_cast<std::size_t>(n - 1)]);
}

TEST_CASE("row-parity admissibility criterion") {
  CHECK(oht_admissible(P({2, 2})));
  CHECK(!oht_admissible(P({2, 1, 1})));
  CHECK(oht_admissible(P({1, 1, 1})));
  CHECK(oht_admissible(P({4})));
  CHECK(oht_admissible(P({1, 1, 1, 1})));
}

TEST_CASE("classifier") {
  const auto sp22 = classify(kSp, P({2, 2}));
  CHECK(sp22.special);
  CHECK(sp22.admissible == true);
  CHECK(sp22.quasi_admissible);
  const auto sp211 = classify(kSp, P({2, 1, 1}));
  CHECK(!sp211.special);
  CHECK(sp211.admissible == false);
  CHECK(!sp211.quasi_admissible);
  CHECK_THROWS_AS(classify(kSp, P({3, 1})), MathError);

  for (int n = 1; n <= 6; ++n)
    for (const auto& l : all_partitions(n)) {
      const auto c = classify({GroupTag::GL, FieldFlavor::PAdic}, l);
      CHECK((c.special && *c.admissible && c.quasi_admissible));
    }

  const GroupType su_real{GroupTag::SU, FieldFlavor::Real};
  CHECK(!classify(su_real, P({2, 1})).admissible);
  try {
    require_admissible(su_real, P({2, 1}));
    FAIL("expected UnsupportedQuery");
  } catch (const MathError& e) {
    CHECK(e.kind() == ErrorKind::UnsupportedQuery);
  }
  CHECK(require_admissible({GroupTag::SU, FieldFlavor::PAdic}, P({2, 1})));
  CHECK(!require_admissible({GroupTag::U, FieldFlavor::Real}, P({2, 1, 1})));
}

TEST_CASE("classifier invariants for n <= 16") {
  const std::vector<GroupTag> tags{GroupTag::GL, GroupTag::SL, GroupTag::Sp, GroupTag::O,
                                   GroupTag::SO, GroupTag::U, GroupTag::SU};
  for (int n = 1; n <= 16; ++n)
    for (const auto& l : all_partitions(n))
      for (auto tag : tags)
        for (auto field : {FieldFlavor::Real, FieldFlavor::PAdic}) {
          const GroupType g{tag, field};
          if (!is_type_valid(g, l)) continue;
          const auto c = classify(g, l);
          if (c.admissible && *c.admissible) CHECK(c.quasi_admissible);
          if (tag == GroupTag::Sp || tag == GroupTag::O || tag == GroupTag::SO) {
            CHECK(c.special == *c.admissible);
            CHECK(c.special == c.quasi_admissible);
          }
        }
}

TEST_CASE("distinguished orbits") {
  CHECK(distinguished_gl(P({4})));
  CHECK(!distinguished_gl(P({2, 2})));
  CHECK(distinguished_gl(P({1})));
  CHECK(distinguished({GroupTag::SL, FieldFlavor::Real}, P({3})));
  CHECK_THROWS_AS(distinguished(kSp, P({2})), MathError);
}

TEST_CASE("lemma_part_index") {
  CHECK(lemma_part_index(P({3, 1}), P({2, 2})) == 1);
  CHECK(lemma_part_index(P({3, 1}), P({3, 1})) == 1);
  CHECK(lemma_part_index(P({4, 2, 1}), P({3, 2, 2})) == 1);
  CHECK_THROWS_AS(lemma_part_index(P({2, 2}), P({3, 1})), MathError);

  // With no part value shared by lambda and mu, the index is strict.
  for (int n = 1; n <= 10; ++n) {
    const auto all = all_partitions(n);
    for (const auto& l : all)
      for (const auto& m : all) {
        if (!dominance_leq(m, l)) continue;
        const auto i = lemma_part_index(l, m);
        CHECK(l.part(i) >= m.part(i));
        CHECK(m.part(i) >= l.part(i + 1));
        std::set<int> lv(l.parts().begin(), l.parts().end());
        const bool disjoint = std::none_of(m.parts().begin(), m.parts().end(),
                                           [&](int p) { return lv.count(p) > 0; });
        if (disjoint) {
          CHECK(l.part(i) > m.part(i));
          CHECK(m.part(i) > l.part(i + 1));
        }
      }
  }
}

TEST_CASE("removing a shared part value preserves dominance, n <= 12") {
  for (int n = 2; n <= 12; ++n) {
    const auto all = all_partitions(n);
    for (const auto& l : all)
      for (const auto& m : all) {
        if (l == m || !dominance_leq(m, l)) continue;
        for (int v : std::set<int>(l.parts().begin(), l.parts().end())) {
          if (m.multiplicity(v) == 0) continue;
          auto lp = l.parts();
          auto mp = m.parts();
          lp.erase(std::find(lp.begin(), lp.end(), v));
          mp.erase(std::find(mp.begin(), mp.end(), v));
          CHECK(dominance_leq(Partition(mp), Partition(lp)));
        }
      }
  }
}
