#include "hsg/hyperspace.hpp"

#include <sstream>

#include "hsg/io.hpp"

namespace hsg {

namespace {

// Right-translate tables: tr[b][mask] = {x*b : x in mask} for masks over a
// ground of at most 16 elements.
std::vector<std::vector<std::uint32_t>> translate_tables(const FiniteSemigroup& g) {
  int n = g.size();
  std::uint32_t total = std::uint32_t{1} << n;
  std::vector<std::vector<std::uint32_t>> tr(n);
  for (int b = 0; b < n; ++b) {
    auto& t = tr[b];
    t.assign(total, 0);
    for (std::uint32_t mask = 1; mask < total; ++mask) {
      int low = std::countr_zero(mask);
      t[mask] = t[mask & (mask - 1)] | (std::uint32_t{1} << g.prod(low, b));
    }
  }
  return tr;
}

std::uint32_t mask_product(const std::vector<std::vector<std::uint32_t>>& tr,
                           std::uint32_t a, std::uint32_t b) {
  std::uint32_t r = 0;
  while (b) {
    int e = std::countr_zero(b);
    r |= tr[e][a];
    b &= b - 1;
  }
  return r;
}

}  // namespace

Subset subset_product(const FiniteSemigroup& ground, const Subset& a, const Subset& b) {
  if (a.size() != ground.size() || b.size() != ground.size())
    throw Error("subset product: ground mismatch");
  if (a.none() || b.none()) throw Error("subset product: subsets must be non-empty");
  return product_bits(ground, a, b);
}

int PowerSemigroup::index_of(const Subset& k) const {
  if (k.size() != base.size()) throw Error("subset over a different ground");
  if (k.none()) throw Error("the power semigroup holds non-empty subsets only");
  return static_cast<int>(k.mask()) - 1;
}

Subset PowerSemigroup::subset_of(int index) const {
  if (index < 0 || index >= sem.size()) throw Error("power-semigroup index out of range");
  return Bitset::from_mask(base.size(), static_cast<std::uint64_t>(index) + 1);
}

PowerSemigroup power_semigroup(const FiniteSemigroup& group, const Caps& caps) {
  auto facts = group_facts(group);
  if (!facts) throw Error("power semigroup requires a group");
  int n = group.size();
  if (n > 16) throw CapError("power semigroup limited to ground order 16");
  long long total = (1LL << n) - 1;
  if (total > caps.max_table) {
    std::ostringstream os;
    os << "power semigroup of a " << n << "-element group needs " << total
       << " rows, above the table cap " << caps.max_table
       << " (use subset products directly or raise HSG_MAX_TABLE)";
    throw CapError(os.str());
  }

  auto tr = translate_tables(group);
  std::vector<int> table(static_cast<std::size_t>(total) * total);
  for (std::uint32_t a = 1; a <= total; ++a) {
    std::size_t row = static_cast<std::size_t>(a - 1) * total;
    for (std::uint32_t b = 1; b <= total; ++b)
      table[row + b - 1] = static_cast<int>(mask_product(tr, a, b)) - 1;
  }
  std::vector<std::string> labels(total);
  for (long long m = 1; m <= total; ++m)
    labels[m - 1] = subset_text(Bitset::from_mask(n, static_cast<std::uint64_t>(m)));

  PowerSemigroup p{group, *facts,
                   FiniteSemigroup::constructed(static_cast<int>(total),
                                                std::move(table), std::move(labels))};
  return p;
}

std::vector<Subset> subgroups(const FiniteSemigroup& group) {
  auto facts = group_facts(group);
  if (!facts) throw Error("subgroup enumeration requires a group");
  int n = group.size();
  if (n > 20) throw CapError("subgroup enumeration limited to order 20");
  std::uint32_t total = std::uint32_t{1} << n;
  std::uint32_t idbit = std::uint32_t{1} << facts->identity;

  std::vector<Subset> out;
  for (std::uint32_t mask = 1; mask < total; ++mask) {
    if (!(mask & idbit)) continue;
    if (n % std::popcount(mask) != 0) continue;  // Lagrange pruning
    Bitset s = Bitset::from_mask(n, mask);
    if (!closure_gap(group, s)) out.push_back(s);
  }
  return out;
}

SubsetClassification classify_subset(const FiniteSemigroup& group, const Subset& k) {
  auto facts = group_facts(group);
  if (!facts) throw Error("subset classification requires a group");
  if (k.size() != group.size()) throw Error("subset over a different ground");
  if (k.none()) throw Error("subset must be non-empty");

  SubsetClassification c;
  c.is_idempotent = subset_product(group, k, k) == k;

  // K = Hx for a subgroup H iff D = {a^-1 b : a,b in K} is a subgroup of
  // size |K|; then H = K x^-1 for any x in K.
  Bitset d(group.size());
  k.for_each([&](int a) {
    int ai = facts->inverse[a];
    k.for_each([&](int b) { d.set(group.prod(ai, b)); });
  });
  bool coset = d.count() == k.count() && !closure_gap(group, d).has_value();
  if (coset) {
    int x = c.is_idempotent ? facts->identity : k.members().front();
    Bitset h = product_bits(group, k, Bitset::single(group.size(), facts->inverse[x]));
    if (closure_gap(group, h) || product_bits(group, h, Bitset::single(group.size(), x)) != k)
      throw Error("internal: coset reconstruction failed");
    Bitset xh = product_bits(group, Bitset::single(group.size(), x), h);
    Bitset hx = k;
    c.is_group_element = xh == hx;
    c.unique_inverse =
        product_bits(group, Bitset::single(group.size(), facts->inverse[x]), h);
    c.coset = std::make_pair(std::move(h), x);
  }
  return c;
}

bool regular_oracle(const FiniteSemigroup& group, const Subset& k) {
  if (k.size() != group.size()) throw Error("subset over a different ground");
  if (k.none()) throw Error("subset must be non-empty");
  int n = group.size();
  if (n > 16) throw CapError("regular oracle limited to ground order 16");
  auto tr = translate_tables(group);
  std::uint32_t km = static_cast<std::uint32_t>(k.mask());
  std::uint32_t total = std::uint32_t{1} << n;
  for (std::uint32_t a = 1; a < total; ++a)
    if (mask_product(tr, mask_product(tr, km, a), km) == km) return true;
  return false;
}

}  // namespace hsg
