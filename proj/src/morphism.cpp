#include "hsg/morphism.hpp"

#include <sstream>

namespace hsg {

std::optional<std::pair<int, int>> hom_gap(const FiniteSemigroup& source,
                                           const FiniteSemigroup& target,
                                           const std::vector<int>& map) {
  int n = source.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (map[source.prod(x, y)] != target.prod(map[x], map[y]))
        return std::make_pair(x, y);
  return std::nullopt;
}

Morphism analyze_morphism(const FiniteSemigroup& source,
                          const FiniteSemigroup& target, std::vector<int> map) {
  if (map.size() != static_cast<std::size_t>(source.size()))
    throw Error("morphism map size does not match source");
  for (int v : map)
    if (v < 0 || v >= target.size()) throw Error("morphism image out of range");

  Morphism m;
  m.map = std::move(map);
  m.homomorphism = !hom_gap(source, target, m.map).has_value();

  std::vector<char> hit(target.size(), 0);
  m.injective = true;
  for (int v : m.map) {
    if (hit[v]) m.injective = false;
    hit[v] = 1;
  }
  m.surjective = true;
  for (char h : hit) m.surjective = m.surjective && h;
  return m;
}

std::optional<std::pair<int, int>> subset_hom_gap(const FiniteSemigroup& source,
                                                  const FiniteSemigroup& ground,
                                                  const std::vector<Bitset>& images) {
  int n = source.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (images[source.prod(x, y)] != product_bits(ground, images[x], images[y]))
        return std::make_pair(x, y);
  return std::nullopt;
}

SubsetEmbedding make_subset_embedding(FiniteSemigroup source, FiniteSemigroup ground,
                                      std::vector<Bitset> images) {
  if (images.size() != static_cast<std::size_t>(source.size()))
    throw Error("image count does not match source");
  for (const auto& b : images) {
    if (b.size() != ground.size()) throw Error("image subset over a different ground");
    if (b.none()) throw Error("image subsets must be non-empty");
  }
  SubsetEmbedding e;
  e.homomorphism = !subset_hom_gap(source, ground, images).has_value();
  e.injective = true;
  for (std::size_t i = 0; i < images.size() && e.injective; ++i)
    for (std::size_t j = i + 1; j < images.size() && e.injective; ++j)
      e.injective = !(images[i] == images[j]);
  e.source = std::move(source);
  e.ground = std::move(ground);
  e.images = std::move(images);
  return e;
}

Bitset union_tighten(const SubsetEmbedding& emb) {
  if (!emb.homomorphism)
    throw Error("union_tighten requires a verified homomorphism");
  Bitset u(emb.ground.size());
  for (const auto& b : emb.images) u |= b;
  if (auto gap = closure_gap(emb.ground, u)) {
    std::ostringstream os;
    os << "image union is not closed: " << gap->first << "*" << gap->second
       << " escapes";
    throw Error(os.str());
  }
  for (const auto& b : emb.images)
    if (!b.is_subset_of(u)) throw Error("internal: image escapes its own union");
  return u;
}

}  // namespace hsg
