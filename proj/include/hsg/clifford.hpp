#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hsg/bitset.hpp"
#include "hsg/caps.hpp"
#include "hsg/constructions.hpp"
#include "hsg/morphism.hpp"
#include "hsg/semigroup.hpp"

namespace hsg {

// Structure of a finite Clifford inverse semigroup: the disjoint union of
// its maximal subgroups over the idempotent semilattice.
struct CliffordDecomposition {
  FiniteSemigroup s;
  std::vector<int> idempotents;            // E, ascending
  std::vector<int> inv;                    // x^-1
  std::vector<int> pi;                     // pi[x] = x x^-1 = x^-1 x
  std::vector<std::vector<int>> groups;    // H_e members per idempotent position
  std::vector<std::vector<int>> filters;   // principal filter of e, per position
  // On a finite discrete carrier every filter is open, so the locally
  // minimal idempotents are all of E and no component is collapsed.

  int position_of(int e) const;  // index into `idempotents`
};

CliffordDecomposition clifford_decompose(const FiniteSemigroup& s);

// Image of s under the component map into H_e with an adjoined zero:
// local index in groups[e_pos] for e*s when pi(s) lies in the filter of e,
// otherwise |H_e| (the zero).
int component_hom(const CliffordDecomposition& dec, int e_pos, int s);

// H_e with an adjoined zero, as a table over local indices.
FiniteSemigroup component_monoid(const CliffordDecomposition& dec, int e_pos);

struct DiagonalEmbedding {
  FiniteSemigroup target;  // product of the component monoids
  Morphism morphism;
};

// Diagonal of all component maps; injectivity is verified, not assumed.
DiagonalEmbedding diagonal_embedding(const CliffordDecomposition& dec);

// One factor of the embedding target: the maximal subgroup itself when it
// is non-trivial, otherwise the 2-element group.
struct PaddedFactor {
  int idempotent = -1;       // element index of e in S
  FiniteSemigroup group;     // the padded group H~_e
  GroupFacts facts;
  bool padded = false;
  std::vector<int> members;  // H_e as S-indices, ascending
  std::vector<int> inject;   // local H_e index -> index in `group`
};

std::vector<PaddedFactor> pad_groups(const CliffordDecomposition& dec);

// f_e: the singleton {h} for a group element, the whole padded group for
// the adjoined zero. `v` is a local index of the component monoid.
Bitset singleton_embedding(const PaddedFactor& factor, int v);

// A verified embedding of S into the power semigroup of the product of
// the padded maximal subgroups. The map is always stored factorwise; it
// is additionally materialized as subsets of the product group while the
// target order stays within caps.max_target_order.
struct EmbeddingCertificate {
  FiniteSemigroup source;
  std::vector<PaddedFactor> factors;
  long long target_order = 0;
  bool materialized = false;
  std::vector<Bitset> map;                      // over target_order, if materialized
  std::vector<std::vector<Bitset>> factor_map;  // [s][factor], over factor groups
  std::vector<std::vector<int>> trace;          // [factor][s] component values
  bool homomorphism = false;
  bool injective = false;
};

EmbeddingCertificate embed_clifford(const FiniteSemigroup& s,
                                    const Caps& caps = default_caps());

struct CertificateReport {
  bool pass = false;
  bool homomorphism = false;
  bool injective = false;
  bool union_closed = false;
  std::optional<Bitset> tightened_union;  // materialized certificates only
  std::string detail;
};

// Re-verifies a certificate from scratch, using only subset products over
// the target (directly when materialized, factorwise otherwise), and
// tightens the target to the union subgroup where possible.
CertificateReport verify_certificate(const EmbeddingCertificate& cert);

ProductGroup certificate_target_group(const EmbeddingCertificate& cert);

// View a materialized certificate as a subset embedding over the product
// group with an explicit table (requires the order to fit the table cap).
SubsetEmbedding as_subset_embedding(const EmbeddingCertificate& cert,
                                    const Caps& caps = default_caps());

// Text form:
//   embedding-certificate v1
//   source: <n>
//   target: product
//   factor e=<idx> group=<descriptor> padded=<yes|no>
//   map:                     (or map-factorwise:)
//   i -> {j1,j2,...}         (or i -> {..}|{..}|...)
//   verified: homomorphism=<yes|no> injective=<yes|no>
void write_certificate(std::ostream& os, const EmbeddingCertificate& cert);
std::string certificate_text(const EmbeddingCertificate& cert);
EmbeddingCertificate read_certificate(std::istream& in, const FiniteSemigroup& source);

}  // namespace hsg
