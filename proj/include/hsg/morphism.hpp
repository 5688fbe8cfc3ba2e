#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hsg/bitset.hpp"
#include "hsg/semigroup.hpp"

namespace hsg {

// A map between two finite semigroups with its verified flags.
struct Morphism {
  std::vector<int> map;
  bool homomorphism = false;
  bool injective = false;
  bool surjective = false;
};

// Least pair (x, y) with map[x*y] != map[x]*map[y], if any.
std::optional<std::pair<int, int>> hom_gap(const FiniteSemigroup& source,
                                           const FiniteSemigroup& target,
                                           const std::vector<int>& map);

Morphism analyze_morphism(const FiniteSemigroup& source,
                          const FiniteSemigroup& target, std::vector<int> map);

// A map from a semigroup into the power semigroup of a ground group,
// stored as one non-empty subset of the ground per source element. The
// power semigroup itself is never materialized.
struct SubsetEmbedding {
  FiniteSemigroup source;
  FiniteSemigroup ground;
  std::vector<Bitset> images;
  bool homomorphism = false;
  bool injective = false;
};

std::optional<std::pair<int, int>> subset_hom_gap(const FiniteSemigroup& source,
                                                  const FiniteSemigroup& ground,
                                                  const std::vector<Bitset>& images);

SubsetEmbedding make_subset_embedding(FiniteSemigroup source, FiniteSemigroup ground,
                                      std::vector<Bitset> images);

// Union H of all image subsets (the minimal subgroup carrying the image).
// Throws on a closure violation, which signals an invalid embedding.
Bitset union_tighten(const SubsetEmbedding& emb);

}  // namespace hsg
