#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hsg {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CapError : Error {
  using Error::Error;
};

struct AssociativityError : Error {
  AssociativityError(const std::string& msg, int i, int j, int k)
      : Error(msg), triple{i, j, k} {}
  std::array<int, 3> triple;
};

// A finite semigroup on elements 0..n-1 given by its Cayley table.
// Labels are display metadata only; all algorithms work on indices.
class FiniteSemigroup {
 public:
  FiniteSemigroup() = default;  // empty placeholder; factories make valid instances

  // Validates shape, range and all n^3 associativity triples. Throws
  // AssociativityError with the least failing triple.
  static FiniteSemigroup checked(int n, std::vector<int> table,
                                 std::vector<std::string> labels = {});

  // For tables whose construction already guarantees associativity: full
  // validation up to 128 elements, deterministic grid sample above.
  static FiniteSemigroup constructed(int n, std::vector<int> table,
                                     std::vector<std::string> labels = {});

  int size() const { return n_; }
  int prod(int a, int b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }

  const std::vector<int>& table() const { return table_; }
  const std::vector<std::string>& labels() const { return labels_; }
  bool has_labels() const { return !labels_.empty(); }
  std::string label(int i) const;

  bool is_idempotent(int x) const { return prod(x, x) == x; }
  std::vector<int> idempotents() const;

  // Least witness (i,j,k) with (ij)k != i(jk), scanning all triples.
  std::optional<std::array<int, 3>> find_nonassociative_triple() const;

  friend bool operator==(const FiniteSemigroup& a, const FiniteSemigroup& b) {
    return a.n_ == b.n_ && a.table_ == b.table_ && a.labels_ == b.labels_;
  }

 private:
  FiniteSemigroup(int n, std::vector<int> table, std::vector<std::string> labels)
      : n_(n), table_(std::move(table)), labels_(std::move(labels)) {}
  static void validate_shape(int n, const std::vector<int>& table,
                             const std::vector<std::string>& labels);

  int n_ = 0;
  std::vector<int> table_;
  std::vector<std::string> labels_;
};

struct GroupFacts {
  int identity = -1;
  std::vector<int> inverse;
};

// Present exactly when S is a group.
std::optional<GroupFacts> group_facts(const FiniteSemigroup& s);

struct ClassFlags {
  bool commutative = false;
  bool group = false;
  bool semilattice = false;
  bool regular = false;
  bool inverse = false;
  bool clifford = false;
};

ClassFlags class_flags(const FiniteSemigroup& s);

// All y with x*y*x = x.
std::vector<int> regular_witnesses(const FiniteSemigroup& s, int x);

// All y with x*y*x = x and y*x*y = y.
std::vector<int> all_inverses(const FiniteSemigroup& s, int x);

// The unique inverse of x; throws with two witnesses when ambiguous and
// when x is not regular.
int inverse_of(const FiniteSemigroup& s, int x);

// inverse_of for every element at once (same failure behaviour).
std::vector<int> unique_inverse_map(const FiniteSemigroup& s);

// The unique idempotent among the powers of x.
int idempotent_power(const FiniteSemigroup& s, int x);

// (index, period) of the cyclic subsemigroup generated by x.
std::pair<int, int> cycle_index_period(const FiniteSemigroup& s, int x);

// H_e = {x : xe = ex = x and exists y with xy = yx = e}; validated to be a
// group with identity e. Throws if e is not idempotent.
std::vector<int> maximal_subgroup(const FiniteSemigroup& s, int e);

class IdempotentPoset {
 public:
  IdempotentPoset() = default;
  IdempotentPoset(const FiniteSemigroup& s);

  const std::vector<int>& idempotents() const { return idem_; }
  bool is_idempotent(int x) const { return pos_of(x) >= 0; }

  // e <= f  iff  e*f = e  (arguments are element indices of idempotents).
  bool leq(int e, int f) const;
  std::vector<int> up(int e) const;  // principal filter, ascending

 private:
  int pos_of(int x) const;
  std::vector<int> idem_;
  std::vector<char> leq_;  // positions, row-major
};

IdempotentPoset idempotent_poset(const FiniteSemigroup& s);

// True iff some z satisfies x = z y z^-1 and y = z^-1 x z. Requires an
// inverse semigroup (z^-1 must be defined).
bool conjugated(const FiniteSemigroup& s, int x, int y);

// e*f differs from both e and f.
bool incomparable(const FiniteSemigroup& s, int e, int f);

// Necessary-condition report for embeddability into a power semigroup of a
// group. Applicable only to regular semigroups; an empty report is not a
// proof of embeddability.
struct ObstructionReport {
  bool applicable = false;
  bool inverse = false;
  std::optional<std::pair<int, int>> noncommuting_idempotents;
  std::optional<std::array<int, 3>> nonunique_inverse;      // x, y1, y2
  std::optional<std::pair<int, int>> square_inverse;        // x, x^2 x^-1
  std::optional<std::array<int, 3>> conjugated_comparable;  // e, f, z
  bool clear() const {
    return applicable && !noncommuting_idempotents && !nonunique_inverse &&
           !square_inverse && !conjugated_comparable;
  }
};

ObstructionReport class_h_obstructions(const FiniteSemigroup& s);

}  // namespace hsg
