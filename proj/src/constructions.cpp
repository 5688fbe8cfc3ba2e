#include "hsg/constructions.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "hsg/hyperspace.hpp"
#include "hsg/search.hpp"

namespace hsg {

namespace {

constexpr int kAutSearchCap = 12;

std::string tuple_label(const std::vector<FiniteSemigroup>& parts,
                        const std::vector<int>& coords) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) os << ',';
    os << parts[i].label(coords[i]);
  }
  os << ')';
  return os.str();
}

std::string fresh_zero_label(const std::vector<std::string>& taken) {
  for (const std::string& cand : {std::string("0"), std::string("zero")})
    if (std::find(taken.begin(), taken.end(), cand) == taken.end()) return cand;
  int k = 0;
  while (true) {
    std::string cand = "zero" + std::to_string(k++);
    if (std::find(taken.begin(), taken.end(), cand) == taken.end()) return cand;
  }
}

}  // namespace

FiniteSemigroup cyclic_group(int n) {
  if (n <= 0) throw Error("cyclic group order must be positive");
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table[static_cast<std::size_t>(i) * n + j] = (i + j) % n;
  return FiniteSemigroup::constructed(n, std::move(table));
}

FiniteSemigroup klein_group() { return direct_product({cyclic_group(2), cyclic_group(2)}); }

FiniteSemigroup symmetric_group_3() {
  // permutations of {0,1,2} in lexicographic one-line order; product
  // p*q applies q first
  const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                           {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  auto index_of = [&](const int* p) {
    for (int i = 0; i < 6; ++i)
      if (perms[i][0] == p[0] && perms[i][1] == p[1] && perms[i][2] == p[2]) return i;
    throw Error("internal: permutation lookup failed");
  };
  std::vector<int> table(36);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      int comp[3];
      for (int x = 0; x < 3; ++x) comp[x] = perms[i][perms[j][x]];
      table[static_cast<std::size_t>(i) * 6 + j] = index_of(comp);
    }
  std::vector<std::string> labels;
  for (int i = 0; i < 6; ++i) {
    std::string l;
    for (int x = 0; x < 3; ++x) l += static_cast<char>('0' + perms[i][x]);
    labels.push_back(l);
  }
  return FiniteSemigroup::constructed(6, std::move(table), std::move(labels));
}

FiniteSemigroup e3_semilattice() {
  return FiniteSemigroup::constructed(3, {0, 2, 2, 2, 1, 2, 2, 2, 2},
                                      {"e", "f", "ef"});
}

FiniteSemigroup chain_semilattice(int k) {
  if (k <= 0) throw Error("chain length must be positive");
  std::vector<int> table(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      table[static_cast<std::size_t>(i) * k + j] = std::min(i, j);
  return FiniteSemigroup::constructed(k, std::move(table));
}

FiniteSemigroup direct_product(const std::vector<FiniteSemigroup>& parts,
                               const Caps& caps) {
  if (parts.empty()) throw Error("direct product needs at least one factor");
  long long n = 1;
  for (const auto& p : parts) {
    n *= p.size();
    if (n > caps.max_table) throw CapError("direct product exceeds the table cap");
  }
  int total = static_cast<int>(n);
  std::size_t k = parts.size();

  auto decode = [&](int idx, std::vector<int>& coords) {
    for (std::size_t i = k; i-- > 0;) {
      coords[i] = idx % parts[i].size();
      idx /= parts[i].size();
    }
  };
  auto encode = [&](const std::vector<int>& coords) {
    int idx = 0;
    for (std::size_t i = 0; i < k; ++i) idx = idx * parts[i].size() + coords[i];
    return idx;
  };

  std::vector<int> table(static_cast<std::size_t>(total) * total);
  std::vector<int> a(k), b(k), c(k);
  for (int i = 0; i < total; ++i) {
    decode(i, a);
    for (int j = 0; j < total; ++j) {
      decode(j, b);
      for (std::size_t f = 0; f < k; ++f) c[f] = parts[f].prod(a[f], b[f]);
      table[static_cast<std::size_t>(i) * total + j] = encode(c);
    }
  }
  std::vector<std::string> labels(total);
  for (int i = 0; i < total; ++i) {
    decode(i, a);
    labels[i] = tuple_label(parts, a);
  }
  return FiniteSemigroup::constructed(total, std::move(table), std::move(labels));
}

FiniteSemigroup attach_zero(const FiniteSemigroup& s) {
  int n = s.size();
  int m = n + 1;
  std::vector<int> table(static_cast<std::size_t>(m) * m, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table[static_cast<std::size_t>(i) * m + j] = s.prod(i, j);
  std::vector<std::string> labels;
  if (s.has_labels()) {
    labels = s.labels();
    labels.push_back(fresh_zero_label(labels));
  }
  return FiniteSemigroup::constructed(m, std::move(table), std::move(labels));
}

void validate_action(const FiniteSemigroup& s, const FiniteSemigroup& g,
                     const GroupAction& a) {
  auto facts = group_facts(g);
  if (!facts) throw Error("actions must be by a group");
  if (a.perms.size() != static_cast<std::size_t>(g.size()))
    throw Error("action needs one permutation per group element");
  int n = s.size();
  for (int ge = 0; ge < g.size(); ++ge) {
    const auto& p = a.perms[ge];
    if (p.size() != static_cast<std::size_t>(n))
      throw Error("action permutation has the wrong length");
    std::vector<char> hit(n, 0);
    for (int v : p) {
      if (v < 0 || v >= n || hit[v]) throw Error("action entry is not a permutation");
      hit[v] = 1;
    }
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (p[s.prod(x, y)] != s.prod(p[x], p[y])) {
          std::ostringstream os;
          os << "action of " << g.label(ge) << " is not an automorphism: breaks "
             << s.label(x) << "*" << s.label(y);
          throw Error(os.str());
        }
  }
  for (int x = 0; x < n; ++x)
    if (a.perms[facts->identity][x] != x)
      throw Error("action of the identity must be trivial");
  for (int g1 = 0; g1 < g.size(); ++g1)
    for (int g2 = 0; g2 < g.size(); ++g2) {
      const auto& p12 = a.perms[g.prod(g1, g2)];
      for (int x = 0; x < n; ++x)
        if (p12[x] != a.perms[g1][a.perms[g2][x]]) {
          std::ostringstream os;
          os << "action is not a homomorphism at (" << g.label(g1) << ","
             << g.label(g2) << ")";
          throw Error(os.str());
        }
    }
}

FiniteSemigroup semidirect_product(const FiniteSemigroup& s, const FiniteSemigroup& g,
                                   const GroupAction& a, const Caps& caps) {
  validate_action(s, g, a);
  long long n = static_cast<long long>(s.size()) * g.size();
  if (n > caps.max_table) throw CapError("semidirect product exceeds the table cap");
  int total = static_cast<int>(n);
  int gn = g.size();
  std::vector<int> table(static_cast<std::size_t>(total) * total);
  for (int s1 = 0; s1 < s.size(); ++s1)
    for (int g1 = 0; g1 < gn; ++g1) {
      int i = s1 * gn + g1;
      for (int s2 = 0; s2 < s.size(); ++s2)
        for (int g2 = 0; g2 < gn; ++g2)
          table[static_cast<std::size_t>(i) * total + s2 * gn + g2] =
              s.prod(s1, a.perms[g1][s2]) * gn + g.prod(g1, g2);
    }
  std::vector<std::string> labels(total);
  for (int s1 = 0; s1 < s.size(); ++s1)
    for (int g1 = 0; g1 < gn; ++g1)
      labels[s1 * gn + g1] = "(" + s.label(s1) + "," + g.label(g1) + ")";
  return FiniteSemigroup::constructed(total, std::move(table), std::move(labels));
}

AutomorphismGroup automorphism_group(const FiniteSemigroup& s) {
  if (s.size() > kAutSearchCap)
    throw CapError("automorphism search limited to 12 elements");
  // all bijective self-homomorphisms; pruned inside the searcher by
  // idempotency, cycle structure and maximal-subgroup sizes
  HomEnumeration homs = enumerate_homomorphisms(s, s, 1 << 20);
  if (!homs.complete) throw Error("internal: automorphism enumeration incomplete");
  std::vector<std::vector<int>> perms;
  for (auto& m : homs.maps) {
    std::vector<char> hit(s.size(), 0);
    bool bij = true;
    for (int v : m) {
      if (hit[v]) bij = false;
      hit[v] = 1;
    }
    if (bij) perms.push_back(m);
  }
  std::sort(perms.begin(), perms.end());

  int n = static_cast<int>(perms.size());
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < n; ++i) index[perms[i]] = i;
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<int> comp(s.size());
      for (int x = 0; x < s.size(); ++x) comp[x] = perms[i][perms[j][x]];
      auto it = index.find(comp);
      if (it == index.end()) throw Error("internal: automorphisms not closed");
      table[static_cast<std::size_t>(i) * n + j] = it->second;
    }
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) {
    bool is_id = true;
    for (int x = 0; x < s.size(); ++x) is_id = is_id && perms[i][x] == x;
    labels[i] = is_id ? "id" : "a" + std::to_string(i);
  }
  AutomorphismGroup out{FiniteSemigroup::constructed(n, std::move(table), std::move(labels)),
                        GroupAction{std::move(perms)}};
  validate_action(s, out.group, out.action);
  return out;
}

FiniteSemigroup holomorph(const FiniteSemigroup& s, const Caps& caps) {
  AutomorphismGroup aut = automorphism_group(s);
  return semidirect_product(s, aut.group, aut.action, caps);
}

FiniteSemigroup brandt(const FiniteSemigroup& h, int kappa, const Caps& caps) {
  auto facts = group_facts(h);
  if (!facts) throw Error("Brandt semigroup requires a group");
  if (kappa < 1) throw Error("Brandt index set must be non-empty");
  long long n = static_cast<long long>(kappa) * kappa * h.size() + 1;
  if (n > caps.max_table) throw CapError("Brandt semigroup exceeds the table cap");
  int total = static_cast<int>(n);
  int zero = total - 1;
  auto idx = [&](int al, int hh, int be) { return (al * h.size() + hh) * kappa + be; };

  std::vector<int> table(static_cast<std::size_t>(total) * total, zero);
  for (int a1 = 0; a1 < kappa; ++a1)
    for (int h1 = 0; h1 < h.size(); ++h1)
      for (int b1 = 0; b1 < kappa; ++b1)
        for (int a2 = 0; a2 < kappa; ++a2)
          for (int h2 = 0; h2 < h.size(); ++h2)
            for (int b2 = 0; b2 < kappa; ++b2)
              if (b1 == a2)
                table[static_cast<std::size_t>(idx(a1, h1, b1)) * total +
                      idx(a2, h2, b2)] = idx(a1, h.prod(h1, h2), b2);

  std::vector<std::string> labels(total);
  for (int a1 = 0; a1 < kappa; ++a1)
    for (int h1 = 0; h1 < h.size(); ++h1)
      for (int b1 = 0; b1 < kappa; ++b1)
        labels[idx(a1, h1, b1)] = "(" + std::to_string(a1) + "," + h.label(h1) +
                                  "," + std::to_string(b1) + ")";
  labels[zero] = "0";
  return FiniteSemigroup::constructed(total, std::move(table), std::move(labels));
}

FiniteSemigroup rees_quotient(const FiniteSemigroup& s, const Bitset& ideal) {
  if (ideal.size() != s.size()) throw Error("ideal over a different carrier");
  if (ideal.none()) throw Error("ideal must be non-empty");
  for (int x = 0; x < s.size(); ++x)
    ideal.for_each([&](int i) {
      if (!ideal.test(s.prod(x, i)) || !ideal.test(s.prod(i, x))) {
        std::ostringstream os;
        os << "not an ideal: witness pair (" << s.label(x) << "," << s.label(i) << ")";
        throw Error(os.str());
      }
    });

  std::vector<int> keep;
  for (int x = 0; x < s.size(); ++x)
    if (!ideal.test(x)) keep.push_back(x);
  int total = static_cast<int>(keep.size()) + 1;
  int zero = total - 1;
  std::vector<int> to_new(s.size(), zero);
  for (int i = 0; i < static_cast<int>(keep.size()); ++i) to_new[keep[i]] = i;

  std::vector<int> table(static_cast<std::size_t>(total) * total, zero);
  for (int i = 0; i < static_cast<int>(keep.size()); ++i)
    for (int j = 0; j < static_cast<int>(keep.size()); ++j)
      table[static_cast<std::size_t>(i) * total + j] = to_new[s.prod(keep[i], keep[j])];

  std::vector<std::string> labels;
  if (s.has_labels()) {
    for (int x : keep) labels.push_back(s.labels()[x]);
    labels.push_back(fresh_zero_label(labels));
  }
  return FiniteSemigroup::constructed(total, std::move(table), std::move(labels));
}

ProductGroup::ProductGroup(std::vector<FiniteSemigroup> factors)
    : factors_(std::move(factors)) {
  if (factors_.empty()) throw Error("product group needs at least one factor");
  for (const auto& f : factors_) {
    auto ff = group_facts(f);
    if (!ff) throw Error("product group factors must be groups");
    facts_.push_back(*ff);
  }
  stride_.assign(factors_.size(), 1);
  for (std::size_t i = factors_.size(); i-- > 0;) {
    if (i + 1 < factors_.size()) stride_[i] = stride_[i + 1] * factors_[i + 1].size();
    order_ = order_ * factors_[i].size();
    if (order_ > (1LL << 30)) throw CapError("product group order too large");
  }
  long long id = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i)
    id += facts_[i].identity * stride_[i];
  identity_ = static_cast<int>(id);
}

int ProductGroup::prod(int a, int b) const {
  long long r = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    int ai = static_cast<int>((a / stride_[i]) % factors_[i].size());
    int bi = static_cast<int>((b / stride_[i]) % factors_[i].size());
    r += static_cast<long long>(factors_[i].prod(ai, bi)) * stride_[i];
  }
  return static_cast<int>(r);
}

int ProductGroup::inverse(int a) const {
  long long r = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    int ai = static_cast<int>((a / stride_[i]) % factors_[i].size());
    r += static_cast<long long>(facts_[i].inverse[ai]) * stride_[i];
  }
  return static_cast<int>(r);
}

int ProductGroup::encode(const std::vector<int>& coords) const {
  if (coords.size() != factors_.size()) throw Error("coordinate count mismatch");
  long long r = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (coords[i] < 0 || coords[i] >= factors_[i].size())
      throw Error("coordinate out of range");
    r += static_cast<long long>(coords[i]) * stride_[i];
  }
  return static_cast<int>(r);
}

std::vector<int> ProductGroup::decode(int index) const {
  std::vector<int> coords(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i)
    coords[i] = static_cast<int>((index / stride_[i]) % factors_[i].size());
  return coords;
}

Bitset box_product(const ProductGroup& target, const std::vector<Bitset>& tuple) {
  if (tuple.size() != target.factors().size())
    throw Error("box product needs one subset per factor");
  std::vector<std::vector<int>> members;
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (tuple[i].size() != target.factors()[i].size())
      throw Error("box product factor over a different ground");
    if (tuple[i].none()) throw Error("box product factors must be non-empty");
    members.push_back(tuple[i].members());
  }
  Bitset out(target.size());
  std::vector<int> pick(tuple.size(), 0), coords(tuple.size());
  while (true) {
    for (std::size_t i = 0; i < tuple.size(); ++i) coords[i] = members[i][pick[i]];
    out.set(target.encode(coords));
    std::size_t i = tuple.size();
    while (i-- > 0) {
      if (++pick[i] < static_cast<int>(members[i].size())) break;
      pick[i] = 0;
      if (i == 0) return out;
    }
  }
}

BoxEmbedding box_embedding_morphism(const std::vector<FiniteSemigroup>& groups,
                                    const Caps& caps) {
  std::vector<FiniteSemigroup> exps;
  for (const auto& g : groups) exps.push_back(power_semigroup(g, caps).sem);
  FiniteSemigroup domain = direct_product(exps, caps);
  ProductGroup pg{groups};
  FiniteSemigroup product = direct_product(groups, caps);
  FiniteSemigroup target = power_semigroup(product, caps).sem;

  std::vector<int> map(domain.size());
  std::vector<int> radices;
  for (const auto& e : exps) radices.push_back(e.size());
  for (int idx = 0; idx < domain.size(); ++idx) {
    int rest = idx;
    std::vector<Bitset> tuple(groups.size());
    for (std::size_t i = groups.size(); i-- > 0;) {
      int ei = rest % radices[i];
      rest /= radices[i];
      tuple[i] = Bitset::from_mask(groups[i].size(), static_cast<std::uint64_t>(ei) + 1);
    }
    Bitset box = box_product(pg, tuple);
    map[idx] = static_cast<int>(box.mask()) - 1;
  }
  Morphism m = analyze_morphism(domain, target, std::move(map));
  return BoxEmbedding{std::move(domain), std::move(target), std::move(m)};
}

SubsetEmbedding zero_embedding(const SubsetEmbedding& f) {
  if (!f.homomorphism || !f.injective)
    throw Error("zero extension requires a verified embedding");
  Bitset u = union_tighten(f);
  if (u.count() == f.ground.size())
    throw Error("image union already covers the whole group; pick a larger group");
  std::vector<Bitset> images = f.images;
  images.push_back(Bitset::full(f.ground.size()));
  SubsetEmbedding out =
      make_subset_embedding(attach_zero(f.source), f.ground, std::move(images));
  if (!out.homomorphism || !out.injective)
    throw Error("internal: zero extension failed verification");
  return out;
}

GroupAction power_shift_action(const FiniteSemigroup& g, int power_size) {
  int copies = g.size();
  long long order = 1;
  for (int i = 0; i < copies; ++i) {
    order *= power_size;
    if (order > (1LL << 30)) throw CapError("power carrier too large for a shift action");
  }
  std::vector<long long> stride(copies, 1);
  for (int i = copies - 2; i >= 0; --i) stride[i] = stride[i + 1] * power_size;

  GroupAction a;
  a.perms.assign(copies, std::vector<int>(static_cast<std::size_t>(order)));
  for (int ge = 0; ge < copies; ++ge)
    for (long long t = 0; t < order; ++t) {
      long long image = 0;
      for (int al = 0; al < copies; ++al) {
        long long digit = (t / stride[g.prod(ge, al)]) % power_size;
        image += digit * stride[al];
      }
      a.perms[ge][static_cast<std::size_t>(t)] = static_cast<int>(image);
    }
  return a;
}

Bitset cross_with_group_element(int sprime_n, int group_n, const Bitset& k, int g) {
  if (k.size() != sprime_n) throw Error("cross map: subset over a different ground");
  if (g < 0 || g >= group_n) throw Error("cross map: group element out of range");
  Bitset out(sprime_n * group_n);
  k.for_each([&](int s) { out.set(s * group_n + g); });
  return out;
}

std::vector<Bitset> equivariant_diagonal(const SubsetEmbedding& f,
                                         const FiniteSemigroup& g,
                                         const GroupAction& sigma,
                                         const ProductGroup& power) {
  std::vector<Bitset> diag(f.source.size());
  for (int s = 0; s < f.source.size(); ++s) {
    std::vector<Bitset> tuple;
    for (int al = 0; al < g.size(); ++al) tuple.push_back(f.images[sigma.perms[al][s]]);
    diag[s] = box_product(power, tuple);
  }
  return diag;
}

SemidirectHyperResult semidirect_hyper_embedding(const SubsetEmbedding& f,
                                                 const FiniteSemigroup& g,
                                                 const GroupAction& sigma,
                                                 bool attempt_nonabelian,
                                                 const Caps& caps) {
  if (!f.homomorphism || !f.injective)
    throw Error("composite embedding requires a verified base embedding");
  if (!group_facts(g)) throw Error("composite embedding requires a group");
  validate_action(f.source, g, sigma);

  bool abelian = class_flags(g).commutative;
  if (!abelian && !attempt_nonabelian)
    throw Error("the acting group must be abelian (pass the attempt flag to try anyway)");

  long long power_order = 1;
  for (int i = 0; i < g.size(); ++i) {
    power_order *= f.ground.size();
    if (power_order > caps.max_table)
      throw CapError("power carrier exceeds the table cap; construction not materialized");
  }

  SemidirectHyperResult r;
  r.source = semidirect_product(f.source, g, sigma, caps);
  r.power = direct_product(std::vector<FiniteSemigroup>(g.size(), f.ground), caps);
  r.shift = power_shift_action(g, f.ground.size());
  try {
    validate_action(r.power, g, r.shift);
  } catch (const Error& e) {
    if (!attempt_nonabelian) throw;
    r.constructed = false;
    r.failure = std::string("shift action invalid: ") + e.what();
    return r;
  }
  r.target = semidirect_product(r.power, g, r.shift, caps);
  ProductGroup pg{std::vector<FiniteSemigroup>(g.size(), f.ground)};
  r.diagonal = equivariant_diagonal(f, g, sigma, pg);

  std::vector<Bitset> images(r.source.size());
  for (int s = 0; s < f.source.size(); ++s)
    for (int ge = 0; ge < g.size(); ++ge)
      images[s * g.size() + ge] =
          cross_with_group_element(r.power.size(), g.size(), r.diagonal[s], ge);
  r.embedding = make_subset_embedding(r.source, r.target, std::move(images));
  r.constructed = true;
  if (abelian && (!r.embedding.homomorphism || !r.embedding.injective))
    throw Error("internal: composite embedding failed verification");
  return r;
}

}  // namespace hsg
