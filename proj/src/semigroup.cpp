#include "hsg/semigroup.hpp"

#include <algorithm>
#include <sstream>

namespace hsg {

namespace {

std::string describe_triple(const FiniteSemigroup& s, int i, int j, int k) {
  std::ostringstream os;
  os << "associativity fails at (" << i << "," << j << "," << k << "): ("
     << i << "*" << j << ")*" << k << " = " << s.prod(s.prod(i, j), k)
     << " but " << i << "*(" << j << "*" << k << ") = "
     << s.prod(i, s.prod(j, k));
  return os.str();
}

}  // namespace

void FiniteSemigroup::validate_shape(int n, const std::vector<int>& table,
                                     const std::vector<std::string>& labels) {
  if (n <= 0) throw Error("semigroup must be non-empty");
  if (table.size() != static_cast<std::size_t>(n) * n)
    throw Error("table size does not match element count");
  for (int v : table)
    if (v < 0 || v >= n) throw Error("table entry out of range");
  if (!labels.empty() && labels.size() != static_cast<std::size_t>(n))
    throw Error("label count does not match element count");
}

FiniteSemigroup FiniteSemigroup::checked(int n, std::vector<int> table,
                                         std::vector<std::string> labels) {
  validate_shape(n, table, labels);
  FiniteSemigroup s(n, std::move(table), std::move(labels));
  if (auto t = s.find_nonassociative_triple())
    throw AssociativityError(describe_triple(s, (*t)[0], (*t)[1], (*t)[2]),
                             (*t)[0], (*t)[1], (*t)[2]);
  return s;
}

FiniteSemigroup FiniteSemigroup::constructed(int n, std::vector<int> table,
                                             std::vector<std::string> labels) {
  validate_shape(n, table, labels);
  FiniteSemigroup s(n, std::move(table), std::move(labels));
  if (n <= 128) {
    if (auto t = s.find_nonassociative_triple())
      throw AssociativityError(describe_triple(s, (*t)[0], (*t)[1], (*t)[2]),
                               (*t)[0], (*t)[1], (*t)[2]);
  } else {
    int step = std::max(1, n / 100);
    for (int i = 0; i < n; i += step)
      for (int j = 0; j < n; j += step)
        for (int k = 0; k < n; k += step)
          if (s.prod(s.prod(i, j), k) != s.prod(i, s.prod(j, k)))
            throw AssociativityError(describe_triple(s, i, j, k), i, j, k);
  }
  return s;
}

std::string FiniteSemigroup::label(int i) const {
  if (has_labels()) return labels_[i];
  return std::to_string(i);
}

std::vector<int> FiniteSemigroup::idempotents() const {
  std::vector<int> e;
  for (int x = 0; x < n_; ++x)
    if (is_idempotent(x)) e.push_back(x);
  return e;
}

std::optional<std::array<int, 3>> FiniteSemigroup::find_nonassociative_triple() const {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      int ij = prod(i, j);
      for (int k = 0; k < n_; ++k)
        if (prod(ij, k) != prod(i, prod(j, k)))
          return std::array<int, 3>{i, j, k};
    }
  return std::nullopt;
}

std::optional<GroupFacts> group_facts(const FiniteSemigroup& s) {
  int n = s.size();
  int identity = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      ok = s.prod(e, x) == x && s.prod(x, e) == x;
    if (ok) {
      identity = e;
      break;
    }
  }
  if (identity < 0) return std::nullopt;
  GroupFacts f;
  f.identity = identity;
  f.inverse.assign(n, -1);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y)
      if (s.prod(x, y) == identity && s.prod(y, x) == identity) {
        f.inverse[x] = y;
        break;
      }
    if (f.inverse[x] < 0) return std::nullopt;
  }
  return f;
}

std::vector<int> regular_witnesses(const FiniteSemigroup& s, int x) {
  std::vector<int> ws;
  for (int y = 0; y < s.size(); ++y)
    if (s.prod(s.prod(x, y), x) == x) ws.push_back(y);
  return ws;
}

std::vector<int> all_inverses(const FiniteSemigroup& s, int x) {
  std::vector<int> ws;
  for (int y = 0; y < s.size(); ++y)
    if (s.prod(s.prod(x, y), x) == x && s.prod(s.prod(y, x), y) == y)
      ws.push_back(y);
  return ws;
}

int inverse_of(const FiniteSemigroup& s, int x) {
  auto ws = all_inverses(s, x);
  if (ws.empty()) {
    std::ostringstream os;
    os << "element " << s.label(x) << " is not regular";
    throw Error(os.str());
  }
  if (ws.size() > 1) {
    std::ostringstream os;
    os << "element " << s.label(x) << " has two distinct inverses "
       << s.label(ws[0]) << " and " << s.label(ws[1]);
    throw Error(os.str());
  }
  return ws[0];
}

std::vector<int> unique_inverse_map(const FiniteSemigroup& s) {
  std::vector<int> inv(s.size());
  for (int x = 0; x < s.size(); ++x) inv[x] = inverse_of(s, x);
  return inv;
}

int idempotent_power(const FiniteSemigroup& s, int x) {
  std::vector<char> seen(s.size(), 0);
  int p = x;
  while (!seen[p]) {
    if (s.is_idempotent(p)) return p;
    seen[p] = 1;
    p = s.prod(p, x);
  }
  // the eventual cycle of a finite cyclic subsemigroup contains exactly one
  // idempotent, so the loop above always returns
  throw Error("internal: no idempotent power found");
}

std::pair<int, int> cycle_index_period(const FiniteSemigroup& s, int x) {
  std::vector<int> first(s.size(), -1);
  int p = x;
  int step = 1;
  while (first[p] < 0) {
    first[p] = step;
    p = s.prod(p, x);
    ++step;
  }
  int index = first[p];
  int period = step - first[p];
  return {index, period};
}

std::vector<int> maximal_subgroup(const FiniteSemigroup& s, int e) {
  if (!s.is_idempotent(e)) {
    std::ostringstream os;
    os << "element " << s.label(e) << " is not idempotent";
    throw Error(os.str());
  }
  int n = s.size();
  std::vector<int> members;
  for (int x = 0; x < n; ++x) {
    if (s.prod(x, e) != x || s.prod(e, x) != x) continue;
    bool invertible = false;
    for (int y = 0; y < n && !invertible; ++y)
      invertible = s.prod(x, y) == e && s.prod(y, x) == e;
    if (invertible) members.push_back(x);
  }
  // sanity: the result is a group with identity e
  std::vector<char> in(n, 0);
  for (int m : members) in[m] = 1;
  if (!in[e]) throw Error("internal: idempotent missing from its own subgroup");
  for (int a : members)
    for (int b : members)
      if (!in[s.prod(a, b)])
        throw Error("internal: maximal subgroup not closed");
  return members;
}

IdempotentPoset::IdempotentPoset(const FiniteSemigroup& s) : idem_(s.idempotents()) {
  std::size_t m = idem_.size();
  leq_.assign(m * m, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      leq_[i * m + j] = s.prod(idem_[i], idem_[j]) == idem_[i];
}

int IdempotentPoset::pos_of(int x) const {
  auto it = std::lower_bound(idem_.begin(), idem_.end(), x);
  if (it == idem_.end() || *it != x) return -1;
  return static_cast<int>(it - idem_.begin());
}

bool IdempotentPoset::leq(int e, int f) const {
  int i = pos_of(e), j = pos_of(f);
  if (i < 0 || j < 0) throw Error("leq arguments must be idempotents");
  return leq_[static_cast<std::size_t>(i) * idem_.size() + j];
}

std::vector<int> IdempotentPoset::up(int e) const {
  int i = pos_of(e);
  if (i < 0) throw Error("up argument must be idempotent");
  std::vector<int> fs;
  for (std::size_t j = 0; j < idem_.size(); ++j)
    if (leq_[static_cast<std::size_t>(i) * idem_.size() + j]) fs.push_back(idem_[j]);
  return fs;
}

IdempotentPoset idempotent_poset(const FiniteSemigroup& s) { return IdempotentPoset(s); }

bool conjugated(const FiniteSemigroup& s, int x, int y) {
  auto inv = unique_inverse_map(s);
  for (int z = 0; z < s.size(); ++z) {
    int zi = inv[z];
    if (s.prod(s.prod(z, y), zi) == x && s.prod(s.prod(zi, x), z) == y) return true;
  }
  return false;
}

bool incomparable(const FiniteSemigroup& s, int e, int f) {
  int p = s.prod(e, f);
  return p != e && p != f;
}

ClassFlags class_flags(const FiniteSemigroup& s) {
  int n = s.size();
  ClassFlags fl;

  fl.commutative = true;
  for (int x = 0; x < n && fl.commutative; ++x)
    for (int y = x + 1; y < n && fl.commutative; ++y)
      fl.commutative = s.prod(x, y) == s.prod(y, x);

  fl.group = group_facts(s).has_value();

  fl.semilattice = fl.commutative;
  for (int x = 0; x < n && fl.semilattice; ++x)
    fl.semilattice = s.is_idempotent(x);

  fl.regular = true;
  for (int x = 0; x < n && fl.regular; ++x) {
    bool found = false;
    for (int y = 0; y < n && !found; ++y)
      found = s.prod(s.prod(x, y), x) == x;
    fl.regular = found;
  }

  // inverse <=> regular with pairwise commuting idempotents
  auto idem = s.idempotents();
  bool idem_commute = true;
  for (std::size_t i = 0; i < idem.size() && idem_commute; ++i)
    for (std::size_t j = i + 1; j < idem.size() && idem_commute; ++j)
      idem_commute = s.prod(idem[i], idem[j]) == s.prod(idem[j], idem[i]);
  fl.inverse = fl.regular && idem_commute;

  // Clifford: every element lies in a subgroup, tested through the
  // idempotent power of x and membership in the maximal subgroup there.
  fl.clifford = true;
  for (int x = 0; x < n && fl.clifford; ++x) {
    int e = idempotent_power(s, x);
    if (s.prod(x, e) != x || s.prod(e, x) != x) {
      fl.clifford = false;
      break;
    }
    bool invertible = false;
    for (int y = 0; y < n && !invertible; ++y)
      invertible = s.prod(x, y) == e && s.prod(y, x) == e;
    fl.clifford = invertible;
  }

  return fl;
}

ObstructionReport class_h_obstructions(const FiniteSemigroup& s) {
  ObstructionReport rep;
  ClassFlags fl = class_flags(s);
  if (!fl.regular) return rep;  // not applicable
  rep.applicable = true;

  auto idem = s.idempotents();
  for (std::size_t i = 0; i < idem.size() && !rep.noncommuting_idempotents; ++i)
    for (std::size_t j = i + 1; j < idem.size(); ++j)
      if (s.prod(idem[i], idem[j]) != s.prod(idem[j], idem[i])) {
        rep.noncommuting_idempotents = std::make_pair(idem[i], idem[j]);
        break;
      }
  for (int x = 0; x < s.size() && !rep.nonunique_inverse; ++x) {
    auto ws = all_inverses(s, x);
    if (ws.size() > 1) rep.nonunique_inverse = std::array<int, 3>{x, ws[0], ws[1]};
  }
  rep.inverse = !rep.noncommuting_idempotents && !rep.nonunique_inverse;
  if (!rep.inverse) return rep;  // remaining tests need unique inverses

  auto inv = unique_inverse_map(s);

  // non-idempotent x whose x^2 x^-1 is idempotent
  for (int x = 0; x < s.size(); ++x) {
    if (s.is_idempotent(x)) continue;
    int t = s.prod(s.prod(x, x), inv[x]);
    if (s.is_idempotent(t)) {
      rep.square_inverse = std::make_pair(x, t);
      break;
    }
  }

  // distinct conjugated idempotents that are comparable
  for (std::size_t i = 0; i < idem.size() && !rep.conjugated_comparable; ++i)
    for (std::size_t j = i + 1; j < idem.size() && !rep.conjugated_comparable; ++j) {
      int e = idem[i], f = idem[j];
      if (incomparable(s, e, f)) continue;
      for (int z = 0; z < s.size(); ++z) {
        int zi = inv[z];
        if (s.prod(s.prod(z, f), zi) == e && s.prod(s.prod(zi, e), z) == f) {
          rep.conjugated_comparable = std::array<int, 3>{e, f, z};
          break;
        }
      }
    }

  return rep;
}

}  // namespace hsg
