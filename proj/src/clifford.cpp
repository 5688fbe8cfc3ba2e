#include "hsg/clifford.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "hsg/io.hpp"

namespace hsg {

namespace {

std::string flag_failure(const ClassFlags& fl) {
  std::ostringstream os;
  os << "not a Clifford inverse semigroup:";
  if (!fl.regular) os << " regular=no";
  if (!fl.inverse) os << " inverse=no";
  if (!fl.clifford) os << " clifford=no";
  return os.str();
}

}  // namespace

int CliffordDecomposition::position_of(int e) const {
  auto it = std::lower_bound(idempotents.begin(), idempotents.end(), e);
  if (it == idempotents.end() || *it != e)
    throw Error("element is not an idempotent of the decomposition");
  return static_cast<int>(it - idempotents.begin());
}

CliffordDecomposition clifford_decompose(const FiniteSemigroup& s) {
  ClassFlags fl = class_flags(s);
  if (!fl.inverse || !fl.clifford) throw Error(flag_failure(fl));

  CliffordDecomposition dec;
  dec.s = s;
  dec.idempotents = s.idempotents();
  dec.inv = unique_inverse_map(s);
  dec.pi.resize(s.size());
  for (int x = 0; x < s.size(); ++x) {
    int left = s.prod(x, dec.inv[x]);
    int right = s.prod(dec.inv[x], x);
    if (left != right) throw Error("internal: retraction is two-sided on Clifford input");
    dec.pi[x] = left;
  }
  IdempotentPoset poset(s);
  for (int e : dec.idempotents) {
    dec.groups.push_back(maximal_subgroup(s, e));
    dec.filters.push_back(poset.up(e));
  }
  // the maximal subgroups partition the carrier
  std::vector<int> seen(s.size(), 0);
  for (const auto& g : dec.groups)
    for (int x : g) ++seen[x];
  for (int x = 0; x < s.size(); ++x)
    if (seen[x] != 1) throw Error("internal: carrier is not partitioned by subgroups");
  return dec;
}

int component_hom(const CliffordDecomposition& dec, int e_pos, int s) {
  int e = dec.idempotents[e_pos];
  const auto& members = dec.groups[e_pos];
  const auto& filter = dec.filters[e_pos];
  int p = dec.pi[s];
  if (!std::binary_search(filter.begin(), filter.end(), p))
    return static_cast<int>(members.size());  // adjoined zero
  int es = dec.s.prod(e, s);
  auto it = std::lower_bound(members.begin(), members.end(), es);
  if (it == members.end() || *it != es)
    throw Error("internal: component image escapes its subgroup");
  return static_cast<int>(it - members.begin());
}

FiniteSemigroup component_monoid(const CliffordDecomposition& dec, int e_pos) {
  const auto& members = dec.groups[e_pos];
  int k = static_cast<int>(members.size());
  std::vector<int> table(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      int p = dec.s.prod(members[i], members[j]);
      auto it = std::lower_bound(members.begin(), members.end(), p);
      table[static_cast<std::size_t>(i) * k + j] = static_cast<int>(it - members.begin());
    }
  std::vector<std::string> labels;
  if (dec.s.has_labels()) {
    for (int m : members) labels.push_back(dec.s.labels()[m]);
  }
  FiniteSemigroup group = FiniteSemigroup::constructed(k, std::move(table), std::move(labels));
  return attach_zero(group);
}

DiagonalEmbedding diagonal_embedding(const CliffordDecomposition& dec) {
  std::vector<FiniteSemigroup> parts;
  for (std::size_t e = 0; e < dec.idempotents.size(); ++e)
    parts.push_back(component_monoid(dec, static_cast<int>(e)));
  FiniteSemigroup target = direct_product(parts);

  std::vector<int> map(dec.s.size());
  for (int x = 0; x < dec.s.size(); ++x) {
    int idx = 0;
    for (std::size_t e = 0; e < parts.size(); ++e)
      idx = idx * parts[e].size() + component_hom(dec, static_cast<int>(e), x);
    map[x] = idx;
  }
  Morphism m = analyze_morphism(dec.s, target, std::move(map));
  if (!m.homomorphism) throw Error("internal: diagonal map is not a homomorphism");
  if (!m.injective) {
    for (int x = 0; x < dec.s.size(); ++x)
      for (int y = x + 1; y < dec.s.size(); ++y)
        if (m.map[x] == m.map[y]) {
          std::ostringstream os;
          os << "internal: diagonal map identifies " << dec.s.label(x) << " and "
             << dec.s.label(y);
          throw Error(os.str());
        }
  }
  return DiagonalEmbedding{std::move(target), std::move(m)};
}

std::vector<PaddedFactor> pad_groups(const CliffordDecomposition& dec) {
  std::vector<PaddedFactor> out;
  for (std::size_t e = 0; e < dec.idempotents.size(); ++e) {
    PaddedFactor f;
    f.idempotent = dec.idempotents[e];
    f.members = dec.groups[e];
    int k = static_cast<int>(f.members.size());
    if (k >= 2) {
      std::vector<int> table(static_cast<std::size_t>(k) * k);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
          int p = dec.s.prod(f.members[i], f.members[j]);
          auto it = std::lower_bound(f.members.begin(), f.members.end(), p);
          table[static_cast<std::size_t>(i) * k + j] =
              static_cast<int>(it - f.members.begin());
        }
      f.group = FiniteSemigroup::constructed(k, std::move(table));
      f.padded = false;
      f.inject.resize(k);
      for (int i = 0; i < k; ++i) f.inject[i] = i;
    } else {
      f.group = cyclic_group(2);
      f.padded = true;
      f.inject = {0};  // the lone element lands on the identity
    }
    auto facts = group_facts(f.group);
    if (!facts) throw Error("internal: padded factor is not a group");
    f.facts = *facts;
    out.push_back(std::move(f));
  }
  return out;
}

Bitset singleton_embedding(const PaddedFactor& factor, int v) {
  int k = static_cast<int>(factor.members.size());
  if (v < 0 || v > k) throw Error("component value out of range");
  if (v == k) return Bitset::full(factor.group.size());
  return Bitset::single(factor.group.size(), factor.inject[v]);
}

ProductGroup certificate_target_group(const EmbeddingCertificate& cert) {
  std::vector<FiniteSemigroup> factors;
  for (const auto& f : cert.factors) factors.push_back(f.group);
  return ProductGroup{std::move(factors)};
}

EmbeddingCertificate embed_clifford(const FiniteSemigroup& s, const Caps& caps) {
  CliffordDecomposition dec = clifford_decompose(s);

  EmbeddingCertificate cert;
  cert.source = s;
  cert.factors = pad_groups(dec);
  cert.target_order = 1;
  bool overflow = false;
  for (const auto& f : cert.factors) {
    cert.target_order *= f.group.size();
    if (cert.target_order > caps.max_target_order) {
      overflow = true;
      break;
    }
  }
  cert.materialized = !overflow;

  std::size_t nf = cert.factors.size();
  cert.trace.assign(nf, std::vector<int>(s.size()));
  cert.factor_map.assign(s.size(), std::vector<Bitset>(nf));
  for (std::size_t e = 0; e < nf; ++e)
    for (int x = 0; x < s.size(); ++x) {
      int v = component_hom(dec, static_cast<int>(e), x);
      cert.trace[e][x] = v;
      cert.factor_map[x][e] = singleton_embedding(cert.factors[e], v);
    }

  if (cert.materialized) {
    ProductGroup target = certificate_target_group(cert);
    cert.map.resize(s.size());
    for (int x = 0; x < s.size(); ++x) cert.map[x] = box_product(target, cert.factor_map[x]);
  }

  CertificateReport rep = verify_certificate(cert);
  cert.homomorphism = rep.homomorphism;
  cert.injective = rep.injective;
  if (!rep.pass) throw Error("internal: constructed certificate failed verification: " +
                             rep.detail);
  return cert;
}

CertificateReport verify_certificate(const EmbeddingCertificate& cert) {
  CertificateReport rep;
  const FiniteSemigroup& s = cert.source;
  int n = s.size();
  std::ostringstream detail;

  if (cert.materialized) {
    if (cert.map.size() != static_cast<std::size_t>(n)) {
      rep.detail = "materialized map has the wrong length";
      return rep;
    }
    ProductGroup target = certificate_target_group(cert);
    rep.homomorphism = true;
    for (int x = 0; x < n && rep.homomorphism; ++x)
      for (int y = 0; y < n && rep.homomorphism; ++y)
        if (cert.map[s.prod(x, y)] != product_bits(target, cert.map[x], cert.map[y])) {
          rep.homomorphism = false;
          detail << "product check fails at (" << s.label(x) << "," << s.label(y) << ")";
        }
    rep.injective = true;
    for (int x = 0; x < n && rep.injective; ++x)
      for (int y = x + 1; y < n && rep.injective; ++y)
        if (cert.map[x] == cert.map[y]) {
          rep.injective = false;
          detail << "images of " << s.label(x) << " and " << s.label(y) << " coincide";
        }
    if (rep.homomorphism) {
      Bitset u(target.size());
      for (const auto& b : cert.map) u |= b;
      auto gap = closure_gap(target, u);
      rep.union_closed = !gap.has_value();
      if (rep.union_closed)
        rep.tightened_union = u;
      else
        detail << "; image union not closed at (" << gap->first << "," << gap->second << ")";
    }
  } else {
    // factorwise: box products multiply coordinatewise, so the map is a
    // homomorphism iff every factor map is, and injective iff the factor
    // tuples are pairwise distinct
    if (cert.factor_map.size() != static_cast<std::size_t>(n)) {
      rep.detail = "factor map has the wrong length";
      return rep;
    }
    rep.homomorphism = true;
    for (std::size_t e = 0; e < cert.factors.size() && rep.homomorphism; ++e) {
      const FiniteSemigroup& g = cert.factors[e].group;
      for (int x = 0; x < n && rep.homomorphism; ++x)
        for (int y = 0; y < n && rep.homomorphism; ++y)
          if (cert.factor_map[s.prod(x, y)][e] !=
              product_bits(g, cert.factor_map[x][e], cert.factor_map[y][e])) {
            rep.homomorphism = false;
            detail << "factor " << e << " fails at (" << s.label(x) << ","
                   << s.label(y) << ")";
          }
    }
    rep.injective = true;
    for (int x = 0; x < n && rep.injective; ++x)
      for (int y = x + 1; y < n && rep.injective; ++y)
        if (cert.factor_map[x] == cert.factor_map[y]) {
          rep.injective = false;
          detail << "images of " << s.label(x) << " and " << s.label(y) << " coincide";
        }
    if (rep.homomorphism) {
      rep.union_closed = true;
      for (std::size_t e = 0; e < cert.factors.size() && rep.union_closed; ++e) {
        Bitset u(cert.factors[e].group.size());
        for (int x = 0; x < n; ++x) u |= cert.factor_map[x][e];
        rep.union_closed = !closure_gap(cert.factors[e].group, u).has_value();
        if (!rep.union_closed) detail << "; factor " << e << " union not closed";
      }
    }
  }

  rep.pass = rep.homomorphism && rep.injective && rep.union_closed;
  rep.detail = detail.str();
  return rep;
}

SubsetEmbedding as_subset_embedding(const EmbeddingCertificate& cert, const Caps& caps) {
  if (!cert.materialized)
    throw Error("certificate is factorwise; target too large to view as one ground");
  std::vector<FiniteSemigroup> factors;
  for (const auto& f : cert.factors) factors.push_back(f.group);
  FiniteSemigroup ground = direct_product(factors, caps);
  return make_subset_embedding(cert.source, std::move(ground), cert.map);
}

namespace {

const char* yesno(bool b) { return b ? "yes" : "no"; }

std::string factor_descriptor(const PaddedFactor& f) {
  if (f.padded) return "Z2";
  return "H(" + std::to_string(f.idempotent) + "):" + std::to_string(f.group.size());
}

}  // namespace

void write_certificate(std::ostream& os, const EmbeddingCertificate& cert) {
  os << "embedding-certificate v1\n";
  os << "source: " << cert.source.size() << "\n";
  os << "target: product\n";
  for (const auto& f : cert.factors)
    os << "factor e=" << f.idempotent << " group=" << factor_descriptor(f)
       << " padded=" << yesno(f.padded) << "\n";
  if (cert.materialized) {
    os << "map:\n";
    for (int x = 0; x < cert.source.size(); ++x)
      os << x << " -> " << subset_text(cert.map[x]) << "\n";
  } else {
    os << "map-factorwise:\n";
    for (int x = 0; x < cert.source.size(); ++x) {
      os << x << " -> ";
      for (std::size_t e = 0; e < cert.factors.size(); ++e) {
        if (e) os << '|';
        os << subset_text(cert.factor_map[x][e]);
      }
      os << "\n";
    }
  }
  os << "verified: homomorphism=" << yesno(cert.homomorphism)
     << " injective=" << yesno(cert.injective) << "\n";
}

std::string certificate_text(const EmbeddingCertificate& cert) {
  std::ostringstream os;
  write_certificate(os, cert);
  return os.str();
}

namespace {

std::vector<std::string> content_lines(std::istream& in) {
  std::vector<std::string> out;
  std::string raw;
  while (std::getline(in, raw)) {
    std::size_t i = raw.find_first_not_of(" \t\r");
    if (i == std::string::npos || raw[i] == '#') continue;
    if (raw.back() == '\r') raw.pop_back();
    out.push_back(raw);
  }
  return out;
}

bool parse_yesno(const std::string& t) {
  if (t == "yes") return true;
  if (t == "no") return false;
  throw Error("expected yes/no, found '" + t + "'");
}

}  // namespace

EmbeddingCertificate read_certificate(std::istream& in, const FiniteSemigroup& source) {
  auto lines = content_lines(in);
  std::size_t li = 0;
  auto need = [&](const char* what) -> const std::string& {
    if (li >= lines.size()) throw Error(std::string("certificate truncated before ") + what);
    return lines[li++];
  };

  if (need("header") != "embedding-certificate v1")
    throw Error("not an embedding certificate");
  {
    std::istringstream is(need("source"));
    std::string kw;
    int n;
    if (!(is >> kw >> n) || kw != "source:")
      throw Error("certificate: bad source line");
    if (n != source.size())
      throw Error("certificate source size does not match the given semigroup");
  }
  if (need("target") != "target: product") throw Error("certificate: bad target line");

  EmbeddingCertificate cert;
  cert.source = source;

  CliffordDecomposition dec = clifford_decompose(source);
  std::vector<PaddedFactor> all = pad_groups(dec);

  while (li < lines.size() && lines[li].rfind("factor ", 0) == 0) {
    std::istringstream is(lines[li++]);
    std::string kw, epart, gpart, ppart;
    is >> kw >> epart >> gpart >> ppart;
    if (epart.rfind("e=", 0) != 0 || gpart.rfind("group=", 0) != 0 ||
        ppart.rfind("padded=", 0) != 0)
      throw Error("certificate: bad factor line");
    int e = std::stoi(epart.substr(2));
    bool padded = parse_yesno(ppart.substr(7));
    const PaddedFactor* found = nullptr;
    for (const auto& f : all)
      if (f.idempotent == e) found = &f;
    if (!found) throw Error("certificate names a factor at a non-idempotent");
    if (found->padded != padded || factor_descriptor(*found) != gpart.substr(6))
      throw Error("certificate factor does not match the source structure");
    cert.factors.push_back(*found);
  }
  if (cert.factors.empty()) throw Error("certificate lists no factors");

  cert.target_order = 1;
  for (const auto& f : cert.factors) cert.target_order *= f.group.size();

  const std::string& mode = need("map header");
  bool factorwise;
  if (mode == "map:")
    factorwise = false;
  else if (mode == "map-factorwise:")
    factorwise = true;
  else
    throw Error("certificate: expected a map section");
  cert.materialized = !factorwise;

  int n = source.size();
  std::optional<ProductGroup> target;
  if (cert.materialized) {
    if (cert.target_order > (1LL << 30))
      throw Error("certificate target too large to parse materialized");
    target.emplace(certificate_target_group(cert));
    cert.map.resize(n);
  }
  cert.factor_map.assign(n, std::vector<Bitset>(cert.factors.size()));
  for (int x = 0; x < n; ++x) {
    std::istringstream is(need("map row"));
    int i;
    std::string arrow, rest;
    if (!(is >> i >> arrow >> rest) || arrow != "->" || i != x)
      throw Error("certificate: bad map row " + std::to_string(x));
    if (factorwise) {
      std::istringstream parts(rest);
      std::string piece;
      std::size_t e = 0;
      while (std::getline(parts, piece, '|')) {
        if (e >= cert.factors.size()) throw Error("certificate: too many factor subsets");
        cert.factor_map[x][e] = parse_subset(piece, cert.factors[e].group.size());
        ++e;
      }
      if (e != cert.factors.size()) throw Error("certificate: missing factor subsets");
    } else {
      cert.map[x] = parse_subset(rest, static_cast<int>(cert.target_order));
      // recover the factor decomposition; auxiliary data only,
      // verification runs on cert.map
      std::vector<Bitset> fs(cert.factors.size());
      for (std::size_t e = 0; e < cert.factors.size(); ++e)
        fs[e] = Bitset(cert.factors[e].group.size());
      cert.map[x].for_each([&](int v) {
        auto coords = target->decode(v);
        for (std::size_t e = 0; e < coords.size(); ++e) fs[e].set(coords[e]);
      });
      cert.factor_map[x] = std::move(fs);
    }
  }

  {
    std::istringstream is(need("footer"));
    std::string kw, hpart, ipart;
    if (!(is >> kw >> hpart >> ipart) || kw != "verified:" ||
        hpart.rfind("homomorphism=", 0) != 0 || ipart.rfind("injective=", 0) != 0)
      throw Error("certificate: bad footer");
    cert.homomorphism = parse_yesno(hpart.substr(13));
    cert.injective = parse_yesno(ipart.substr(10));
  }
  return cert;
}

}  // namespace hsg
