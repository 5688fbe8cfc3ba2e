#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hsg/bitset.hpp"
#include "hsg/caps.hpp"
#include "hsg/morphism.hpp"
#include "hsg/semigroup.hpp"

namespace hsg {

// Canned structures used throughout the corpus and tests.
FiniteSemigroup cyclic_group(int n);
FiniteSemigroup klein_group();
FiniteSemigroup symmetric_group_3();
FiniteSemigroup e3_semilattice();          // {e, f, ef}
FiniteSemigroup chain_semilattice(int k);  // min on 0..k-1, 0 is the bottom

// Coordinatewise product with mixed-radix indexing, rightmost factor
// fastest. Labels are tuples of the factor labels.
FiniteSemigroup direct_product(const std::vector<FiniteSemigroup>& parts,
                               const Caps& caps = default_caps());

// S plus a fresh absorbing element at index n.
FiniteSemigroup attach_zero(const FiniteSemigroup& s);

// An action of a group G on S by automorphisms: one permutation of S per
// group element, with perm[g*h] = perm[g] o perm[h] and perm[identity] = id.
struct GroupAction {
  std::vector<std::vector<int>> perms;
};

void validate_action(const FiniteSemigroup& s, const FiniteSemigroup& g,
                     const GroupAction& a);

// Carrier S x G with (s,g)(s',g') = (s * g(s'), g g'); index = s*|G| + g.
FiniteSemigroup semidirect_product(const FiniteSemigroup& s, const FiniteSemigroup& g,
                                   const GroupAction& a,
                                   const Caps& caps = default_caps());

struct AutomorphismGroup {
  FiniteSemigroup group;  // composition table over the sorted automorphisms
  GroupAction action;     // tautological action on S
};

// All automorphisms by backtracking, sorted lexicographically (so the
// identity is element 0).
AutomorphismGroup automorphism_group(const FiniteSemigroup& s);

FiniteSemigroup holomorph(const FiniteSemigroup& s, const Caps& caps = default_caps());

// Matrix-type inverse semigroup over a group: elements (a, h, b) from
// kappa x H x kappa plus a zero at the last index; (a,h,b)(a',h',b') is
// (a, h h', b') when b = a' and zero otherwise.
FiniteSemigroup brandt(const FiniteSemigroup& h, int kappa,
                       const Caps& caps = default_caps());

// Collapse an ideal to a single zero. Validates S*I and I*S stay in I.
FiniteSemigroup rees_quotient(const FiniteSemigroup& s, const Bitset& ideal);

// Direct product of groups with on-demand products (the full table is
// never materialized; used as the ground of large embedding targets).
class ProductGroup {
 public:
  explicit ProductGroup(std::vector<FiniteSemigroup> factors);

  long long order() const { return order_; }
  int size() const { return static_cast<int>(order_); }
  int prod(int a, int b) const;
  int identity() const { return identity_; }
  int inverse(int a) const;

  int encode(const std::vector<int>& coords) const;
  std::vector<int> decode(int index) const;
  const std::vector<FiniteSemigroup>& factors() const { return factors_; }

 private:
  std::vector<FiniteSemigroup> factors_;
  std::vector<GroupFacts> facts_;
  std::vector<long long> stride_;
  long long order_ = 1;
  int identity_ = 0;
};

// Box product of one subset per factor: {(a_0,...,a_k) : a_i in tuple[i]},
// as a subset of the mixed-radix product carrier.
Bitset box_product(const ProductGroup& target, const std::vector<Bitset>& tuple);

// The map (K_0,...,K_k) -> K_0 x ... x K_k as a morphism between the
// materialized power semigroups, exp(H_0) x ... x exp(H_k) -> exp(prod H_i).
// Returns (domain, target, morphism).
struct BoxEmbedding {
  FiniteSemigroup domain;  // direct product of the exp(H_i)
  FiniteSemigroup target;  // exp of the product group
  Morphism morphism;
};
BoxEmbedding box_embedding_morphism(const std::vector<FiniteSemigroup>& groups,
                                    const Caps& caps = default_caps());

// Extend an embedding S -> exp(G) to S^0 by sending the new zero to the
// whole group. Requires the image union to be a proper subgroup of G.
SubsetEmbedding zero_embedding(const SubsetEmbedding& f);

// The coordinate-shift action of G on H^G, (g, t)_a = t_{g a}. A group
// homomorphism exactly when G is abelian.
GroupAction power_shift_action(const FiniteSemigroup& g, int power_size);

// K x {g} inside the carrier of S' x G (index = s*|G| + g).
Bitset cross_with_group_element(int sprime_n, int group_n, const Bitset& k, int g);

// F(s) = prod_a f(a s), the equivariant diagonal into exp(H^G).
std::vector<Bitset> equivariant_diagonal(const SubsetEmbedding& f,
                                         const FiniteSemigroup& g,
                                         const GroupAction& sigma,
                                         const ProductGroup& power);

// The composite embedding (S x| G) -> exp(H^G x| G) built from the shift
// action, the equivariant diagonal and the cross map. G must be abelian;
// with attempt_nonabelian the construction is tried anyway and the result
// carries the reason it failed, if it did.
struct SemidirectHyperResult {
  bool constructed = false;   // false only on a failed non-abelian attempt
  std::string failure;        // reason when not constructed
  FiniteSemigroup source;     // S x| G
  FiniteSemigroup power;      // H^G
  FiniteSemigroup target;     // H^G x| G
  GroupAction shift;
  std::vector<Bitset> diagonal;  // F(s) per s
  SubsetEmbedding embedding;
};

SemidirectHyperResult semidirect_hyper_embedding(const SubsetEmbedding& f,
                                                 const FiniteSemigroup& g,
                                                 const GroupAction& sigma,
                                                 bool attempt_nonabelian = false,
                                                 const Caps& caps = default_caps());

}  // namespace hsg
