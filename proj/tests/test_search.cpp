#include <doctest.h>

#include <numeric>

#include "hsg/clifford.hpp"
#include "hsg/constructions.hpp"
#include "hsg/hyperspace.hpp"
#include "hsg/search.hpp"

using namespace hsg;

TEST_CASE("the 2-chain embeds into exp(Z2) with the least witness") {
  auto target = power_semigroup(cyclic_group(2)).sem;
  SearchResult r = find_embedding(chain_semilattice(2), target);
  REQUIRE(r.status == SearchStatus::Found);
  // bottom -> whole group, top -> trivial subgroup; unique, hence least
  CHECK(r.morphism->map == std::vector<int>{2, 0});
  CHECK(r.morphism->homomorphism);
  CHECK(r.morphism->injective);
}

TEST_CASE("a source larger than the target is settled without search") {
  auto b = brandt(cyclic_group(1), 2);
  SearchResult r = find_embedding(b, power_semigroup(cyclic_group(2)).sem);
  CHECK(r.status == SearchStatus::NoneExhaustive);
  CHECK(r.nodes == 0);
}

TEST_CASE("the 5-element Brandt semigroup does not embed into exp(Z4)") {
  auto b = brandt(cyclic_group(1), 2);
  SearchResult r = find_embedding(b, power_semigroup(cyclic_group(4)).sem);
  CHECK(r.status == SearchStatus::NoneExhaustive);
}

TEST_CASE("budget exhaustion is reported as its own outcome") {
  auto b = brandt(cyclic_group(2), 2);
  auto target = power_semigroup(symmetric_group_3()).sem;
  SearchResult r = find_embedding(b, target, SearchBudget{3});
  CHECK(r.status == SearchStatus::NoneBudget);
  CHECK(r.nodes > 3);
}

TEST_CASE("the quotient of the holomorph is the 5-element Brandt semigroup") {
  auto q = rees_quotient(holomorph(e3_semilattice()), Bitset::of(6, {4, 5}));
  SearchResult r = is_isomorphic(q, brandt(cyclic_group(1), 2));
  REQUIRE(r.status == SearchStatus::Found);
  CHECK(r.morphism->surjective);
}

TEST_CASE("groups of order 4 are told apart by element orders") {
  SearchResult r = is_isomorphic(cyclic_group(4), klein_group());
  CHECK(r.status == SearchStatus::NoneExhaustive);
  CHECK(r.nodes == 0);  // settled by the invariant multiset
}

TEST_CASE("self-isomorphism finds the identity first") {
  for (const auto& s : {holomorph(e3_semilattice()), brandt(cyclic_group(1), 2),
                        symmetric_group_3()}) {
    SearchResult r = is_isomorphic(s, s);
    REQUIRE(r.status == SearchStatus::Found);
    std::vector<int> identity(s.size());
    std::iota(identity.begin(), identity.end(), 0);
    CHECK(r.morphism->map == identity);
  }
}

TEST_CASE("homomorphism enumeration on the 2-chain") {
  HomEnumeration homs =
      enumerate_homomorphisms(chain_semilattice(2), attach_zero(cyclic_group(1)));
  CHECK(homs.complete);
  CHECK(homs.maps == std::vector<std::vector<int>>{{0, 0}, {1, 0}, {1, 1}});
}

TEST_CASE("only the trivial homomorphism maps Z2 into Z3") {
  HomEnumeration homs = enumerate_homomorphisms(cyclic_group(2), cyclic_group(3));
  CHECK(homs.complete);
  CHECK(homs.maps == std::vector<std::vector<int>>{{0, 0}});
}

TEST_CASE("exactly one homomorphism into the trivial semigroup") {
  HomEnumeration homs = enumerate_homomorphisms(brandt(cyclic_group(2), 2), cyclic_group(1));
  CHECK(homs.complete);
  CHECK(homs.maps.size() == 1);
}

TEST_CASE("the result cap is reported as incomplete") {
  HomEnumeration homs =
      enumerate_homomorphisms(chain_semilattice(2), attach_zero(cyclic_group(1)), 2);
  CHECK(!homs.complete);
  CHECK(homs.maps.size() == 2);
}

TEST_CASE("search agrees with constructed certificates") {
  for (const auto& s : {attach_zero(cyclic_group(2)), e3_semilattice()}) {
    EmbeddingCertificate cert = embed_clifford(s);
    SubsetEmbedding emb = as_subset_embedding(cert);
    auto target = power_semigroup(emb.ground).sem;
    CHECK(find_embedding(s, target).status == SearchStatus::Found);
  }
}

TEST_CASE("search agrees with the obstruction report at small orders") {
  auto b = brandt(cyclic_group(1), 2);
  REQUIRE(!class_h_obstructions(b).clear());
  for (int n = 1; n <= 4; ++n) {
    SearchResult r = find_embedding(b, power_semigroup(cyclic_group(n)).sem);
    CHECK(r.status == SearchStatus::NoneExhaustive);
  }
}

TEST_CASE("identical runs return identical results") {
  auto target = power_semigroup(klein_group()).sem;
  SearchResult a = find_embedding(attach_zero(cyclic_group(2)), target);
  SearchResult b = find_embedding(attach_zero(cyclic_group(2)), target);
  REQUIRE(a.status == SearchStatus::Found);
  CHECK(a.morphism->map == b.morphism->map);
  CHECK(a.nodes == b.nodes);
}
