#include <doctest.h>

#include <algorithm>

#include "hsg/constructions.hpp"
#include "hsg/io.hpp"
#include "hsg/semigroup.hpp"

using namespace hsg;

namespace {

FiniteSemigroup z2() { return cyclic_group(2); }
FiniteSemigroup two_chain() { return chain_semilattice(2); }
FiniteSemigroup b_z1_2() { return brandt(cyclic_group(1), 2); }
FiniteSemigroup z2_zero() { return attach_zero(cyclic_group(2)); }

// brute-force associativity oracle: least failing triple
std::optional<std::array<int, 3>> assoc_oracle(int n, const std::vector<int>& t) {
  auto at = [&](int a, int b) { return t[static_cast<std::size_t>(a) * n + b]; };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (at(at(i, j), k) != at(i, at(j, k))) return std::array<int, 3>{i, j, k};
  return std::nullopt;
}

}  // namespace

TEST_CASE("table validation accepts groups and semilattices") {
  CHECK(FiniteSemigroup::checked(2, {0, 1, 1, 0}).size() == 2);
  CHECK(FiniteSemigroup::checked(2, {0, 0, 0, 1}).size() == 2);
}

TEST_CASE("table validation rejects a non-associative square with the least witness") {
  std::vector<int> bad = {1, 0, 0, 0};
  auto expected = assoc_oracle(2, bad);
  REQUIRE(expected.has_value());
  CHECK(*expected == std::array<int, 3>{0, 0, 1});
  try {
    FiniteSemigroup::checked(2, bad);
    FAIL("expected a rejection");
  } catch (const AssociativityError& e) {
    CHECK(e.triple == *expected);
  }
}

TEST_CASE("table validation rejects bad shapes") {
  CHECK_THROWS_AS(FiniteSemigroup::checked(0, {}), Error);
  CHECK_THROWS_AS(FiniteSemigroup::checked(2, {0, 1, 1, 2}), Error);
  CHECK_THROWS_AS(FiniteSemigroup::checked(2, {0, 1, 1}), Error);
}

TEST_CASE("class flags on the named examples") {
  ClassFlags g = class_flags(z2());
  CHECK(g.commutative);
  CHECK(g.group);
  CHECK(!g.semilattice);
  CHECK(g.regular);
  CHECK(g.inverse);
  CHECK(g.clifford);

  ClassFlags c = class_flags(two_chain());
  CHECK(c.semilattice);
  CHECK(c.inverse);
  CHECK(c.clifford);
  CHECK(!c.group);

  ClassFlags b = class_flags(b_z1_2());
  CHECK(b.regular);
  CHECK(b.inverse);
  CHECK(!b.clifford);
  CHECK(!b.commutative);
}

TEST_CASE("regular witnesses by exhaustive scan") {
  CHECK(regular_witnesses(z2(), 1) == std::vector<int>{1});
  // 2-chain: f*e*f = f, e*f*e = f, so e's only witness is e itself
  CHECK(regular_witnesses(two_chain(), 1) == std::vector<int>{1});
  // the zero of a Brandt semigroup is absorbed by everything
  auto b = b_z1_2();
  CHECK(regular_witnesses(b, 4) == std::vector<int>{0, 1, 2, 3, 4});
}

TEST_CASE("unique inverses") {
  CHECK(inverse_of(cyclic_group(4), 1) == 3);
  // (0,e,1)^-1 = (1,e,0)
  CHECK(inverse_of(b_z1_2(), 1) == 2);
  auto e3 = e3_semilattice();
  for (int x = 0; x < 3; ++x) CHECK(inverse_of(e3, x) == x);
}

TEST_CASE("inverse_of reports ambiguity on a non-inverse semigroup") {
  // left-zero semigroup: x*y = x; every element is an inverse of every other
  auto lz = FiniteSemigroup::checked(2, {0, 0, 1, 1});
  CHECK_THROWS_WITH_AS(inverse_of(lz, 0),
                       doctest::Contains("two distinct inverses"), Error);
}

TEST_CASE("maximal subgroups") {
  auto s = z2_zero();
  CHECK(maximal_subgroup(s, 0) == std::vector<int>{0, 1});
  CHECK(maximal_subgroup(s, 2) == std::vector<int>{2});
  CHECK(maximal_subgroup(b_z1_2(), 0) == std::vector<int>{0});
  CHECK_THROWS_AS(maximal_subgroup(b_z1_2(), 1), Error);
}

TEST_CASE("idempotent poset of the 3-element semilattice") {
  auto e3 = e3_semilattice();
  IdempotentPoset p(e3);
  CHECK(p.idempotents() == std::vector<int>{0, 1, 2});
  CHECK(p.leq(2, 0));
  CHECK(p.leq(2, 1));
  CHECK(!p.leq(0, 1));
  CHECK(!p.leq(1, 0));
  CHECK(p.up(2) == std::vector<int>{0, 1, 2});
  CHECK(p.up(0) == std::vector<int>{0});
}

TEST_CASE("idempotent poset of a group is trivial") {
  IdempotentPoset p(cyclic_group(3));
  CHECK(p.idempotents() == std::vector<int>{0});
  CHECK(p.leq(0, 0));
}

TEST_CASE("conjugated elements") {
  auto b = b_z1_2();
  // (0,e,0) and (1,e,1) are swapped by z = (0,e,1)
  CHECK(conjugated(b, 0, 3));
  CHECK(conjugated(b, 3, 0));  // symmetric
  CHECK(!conjugated(b, 4, 0));
  for (int e : b.idempotents()) CHECK(conjugated(b, e, e));

  auto e3 = e3_semilattice();
  CHECK(!conjugated(e3, 0, 1));
}

TEST_CASE("incomparable idempotents") {
  auto e3 = e3_semilattice();
  CHECK(incomparable(e3, 0, 1));
  CHECK(!incomparable(two_chain(), 0, 1));
  CHECK(!incomparable(e3, 0, 0));
}

TEST_CASE("obstruction report on the 5-element Brandt semigroup") {
  auto b = b_z1_2();
  ObstructionReport rep = class_h_obstructions(b);
  REQUIRE(rep.applicable);
  CHECK(rep.inverse);
  CHECK(!rep.clear());
  REQUIRE(rep.square_inverse.has_value());
  // witness (0,e,1): its square is the zero, so x^2 x^-1 is idempotent
  CHECK(rep.square_inverse->first == 1);
  CHECK(rep.square_inverse->second == 4);
  CHECK(!rep.noncommuting_idempotents);
  CHECK(!rep.conjugated_comparable);
}

TEST_CASE("obstruction report is empty where an embedding exists") {
  CHECK(class_h_obstructions(z2_zero()).clear());
  CHECK(class_h_obstructions(cyclic_group(5)).clear());
  CHECK(class_h_obstructions(e3_semilattice()).clear());
}

TEST_CASE("obstruction test is silent on non-regular input") {
  // 3-element monogenic semigroup with x, x^2, x^3 = x^2: x is not regular
  auto s = FiniteSemigroup::checked(3, {1, 2, 2, 2, 2, 2, 2, 2, 2});
  CHECK(!class_flags(s).regular);
  CHECK(!class_h_obstructions(s).applicable);
}

TEST_CASE("inverse flag matches the regular + commuting-idempotents criterion") {
  for (const auto& s : {z2(), two_chain(), b_z1_2(), z2_zero(), e3_semilattice(),
                        symmetric_group_3(), holomorph(e3_semilattice())}) {
    ClassFlags fl = class_flags(s);
    auto idem = s.idempotents();
    bool commute = true;
    for (int e : idem)
      for (int f : idem) commute = commute && s.prod(e, f) == s.prod(f, e);
    CHECK(fl.inverse == (fl.regular && commute));
  }
}

TEST_CASE("inverse_of is an involution and an anti-homomorphism on inverse semigroups") {
  for (const auto& s : {z2(), cyclic_group(6), two_chain(), b_z1_2(), z2_zero(),
                        e3_semilattice(), holomorph(e3_semilattice())}) {
    REQUIRE(class_flags(s).inverse);
    auto inv = unique_inverse_map(s);
    for (int x = 0; x < s.size(); ++x) CHECK(inv[inv[x]] == x);
    for (int x = 0; x < s.size(); ++x)
      for (int y = 0; y < s.size(); ++y)
        CHECK(inv[s.prod(x, y)] == s.prod(inv[y], inv[x]));
  }
}

TEST_CASE("clifford flag on inverse semigroups matches the two-sided retraction test") {
  for (const auto& s : {z2(), two_chain(), b_z1_2(), z2_zero(), e3_semilattice(),
                        holomorph(e3_semilattice()), cyclic_group(5)}) {
    ClassFlags fl = class_flags(s);
    if (!fl.inverse) continue;
    auto inv = unique_inverse_map(s);
    bool central = true;
    for (int x = 0; x < s.size(); ++x)
      central = central && s.prod(x, inv[x]) == s.prod(inv[x], x);
    CHECK(fl.clifford == central);
  }
}

TEST_CASE("maximal subgroups validate as groups at every idempotent") {
  for (const auto& s : {b_z1_2(), z2_zero(), e3_semilattice(), holomorph(e3_semilattice())}) {
    for (int e : s.idempotents()) {
      auto h = maximal_subgroup(s, e);
      // restricted table is a group with identity e
      std::vector<int> local(h.size() * h.size());
      for (std::size_t i = 0; i < h.size(); ++i)
        for (std::size_t j = 0; j < h.size(); ++j) {
          int p = s.prod(h[i], h[j]);
          auto it = std::lower_bound(h.begin(), h.end(), p);
          REQUIRE(it != h.end());
          REQUIRE(*it == p);
          local[i * h.size() + j] = static_cast<int>(it - h.begin());
        }
      auto g = FiniteSemigroup::checked(static_cast<int>(h.size()), local);
      auto facts = group_facts(g);
      REQUIRE(facts.has_value());
      CHECK(h[facts->identity] == e);
    }
  }
}

TEST_CASE("conjugation is symmetric and reflexive on idempotents") {
  for (const auto& s : {b_z1_2(), z2_zero(), e3_semilattice(), cyclic_group(4),
                        holomorph(e3_semilattice())}) {
    REQUIRE(class_flags(s).inverse);
    for (int x = 0; x < s.size(); ++x)
      for (int y = 0; y < s.size(); ++y)
        CHECK(conjugated(s, x, y) == conjugated(s, y, x));
    for (int e : s.idempotents()) CHECK(conjugated(s, e, e));
  }
}

TEST_CASE("a semigroup the search embeds somewhere has a clear report") {
  // soundness from the search side: 2-chain embeds into exp(Z2)
  CHECK(class_h_obstructions(two_chain()).clear());
}

TEST_CASE("idempotent powers land in the eventual cycle") {
  auto b = b_z1_2();
  CHECK(idempotent_power(b, 1) == 4);  // (0,e,1)^2 = 0
  CHECK(idempotent_power(b, 0) == 0);
  CHECK(idempotent_power(cyclic_group(6), 1) == 0);
  CHECK(cycle_index_period(cyclic_group(6), 1) == std::pair<int, int>{1, 6});
  CHECK(cycle_index_period(b, 1) == std::pair<int, int>{2, 1});
}
