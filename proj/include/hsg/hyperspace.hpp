#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hsg/bitset.hpp"
#include "hsg/caps.hpp"
#include "hsg/morphism.hpp"
#include "hsg/semigroup.hpp"

namespace hsg {

// Non-empty subsets of a ground semigroup are plain bit vectors; ground
// identity is carried by the call sites, mismatched sizes are rejected.
using Subset = Bitset;

Subset subset_product(const FiniteSemigroup& ground, const Subset& a, const Subset& b);

// The power semigroup of a finite group: all 2^n - 1 non-empty subsets
// under the setwise product. Element index = bit pattern - 1.
struct PowerSemigroup {
  FiniteSemigroup base;
  GroupFacts base_facts;
  FiniteSemigroup sem;

  int index_of(const Subset& k) const;
  Subset subset_of(int index) const;
};

PowerSemigroup power_semigroup(const FiniteSemigroup& group,
                               const Caps& caps = default_caps());

// All subgroups, in canonical subset order.
std::vector<Subset> subgroups(const FiniteSemigroup& group);

// Coset-form classification of a subset of a group, following the
// characterization of regular elements of the power semigroup: K is
// regular iff K = Hx for a subgroup H, a group element iff additionally
// xH = Hx, an idempotent iff K itself is a subgroup.
struct SubsetClassification {
  bool is_idempotent = false;
  std::optional<std::pair<Subset, int>> coset;  // (H, x) with K = Hx
  bool is_group_element = false;
  std::optional<Subset> unique_inverse;         // x^-1 H
};

SubsetClassification classify_subset(const FiniteSemigroup& group, const Subset& k);

// Definition-based regularity: scans every non-empty A for K A K = K.
// Independent of classify_subset; used to validate it.
bool regular_oracle(const FiniteSemigroup& group, const Subset& k);

}  // namespace hsg
