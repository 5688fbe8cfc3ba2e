#pragma once

#include <optional>
#include <vector>

#include "hsg/morphism.hpp"
#include "hsg/semigroup.hpp"

namespace hsg {

struct SearchBudget {
  long long max_nodes = 10'000'000;  // decision nodes (candidate attempts)
};

// NoneExhaustive means the full space was searched; only that outcome is a
// mathematical result. NoneBudget means max_nodes was hit first.
enum class SearchStatus { Found, NoneExhaustive, NoneBudget };

struct SearchResult {
  SearchStatus status = SearchStatus::NoneExhaustive;
  std::optional<Morphism> morphism;
  long long nodes = 0;
};

// Injective homomorphism S -> T by backtracking. Elements are assigned in a
// fixed order (idempotents first, then the rest, each ascending); every
// product of mapped elements is forced immediately, so the first found
// witness is the least one in assignment order.
SearchResult find_embedding(const FiniteSemigroup& s, const FiniteSemigroup& t,
                            SearchBudget budget = {});

// Bijective homomorphism, with pruning on element invariants (idempotency,
// cycle index/period, maximal-subgroup size).
SearchResult is_isomorphic(const FiniteSemigroup& s, const FiniteSemigroup& t,
                           SearchBudget budget = {});

struct HomEnumeration {
  std::vector<std::vector<int>> maps;  // lexicographically sorted
  bool complete = true;                // false when the cap was hit
  long long nodes = 0;
};

HomEnumeration enumerate_homomorphisms(const FiniteSemigroup& s,
                                       const FiniteSemigroup& t,
                                       long long max_results = 100000,
                                       SearchBudget budget = {});

}  // namespace hsg
