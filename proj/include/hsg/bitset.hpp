#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace hsg {

// Fixed-width dynamic bit vector used for subsets of semigroup elements.
// Subsets compare by their bit pattern read as a binary integer (bit i =
// element i), which is the canonical subset order used throughout.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int n) : n_(n), w_((n + 63) / 64, 0) {}

  static Bitset full(int n) {
    Bitset b(n);
    for (int i = 0; i < n; ++i) b.set(i);
    return b;
  }
  static Bitset single(int n, int i) {
    Bitset b(n);
    b.set(i);
    return b;
  }
  static Bitset of(int n, const std::vector<int>& members) {
    Bitset b(n);
    for (int i : members) b.set(i);
    return b;
  }
  static Bitset from_mask(int n, std::uint64_t mask) {
    Bitset b(n);
    if (!b.w_.empty()) b.w_[0] = mask;
    return b;
  }

  int size() const { return n_; }
  void set(int i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

  int count() const {
    int c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
  }
  bool any() const {
    for (auto w : w_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  std::uint64_t mask() const { return w_.empty() ? 0 : w_[0]; }  // valid for n <= 64

  Bitset& operator|=(const Bitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }

  friend bool operator==(const Bitset& a, const Bitset& b) {
    return a.n_ == b.n_ && a.w_ == b.w_;
  }
  friend bool operator!=(const Bitset& a, const Bitset& b) { return !(a == b); }

  // Binary-integer order on equal-length patterns; shorter patterns first.
  friend bool operator<(const Bitset& a, const Bitset& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    for (std::size_t i = a.w_.size(); i-- > 0;)
      if (a.w_[i] != b.w_[i]) return a.w_[i] < b.w_[i];
    return false;
  }

  bool is_subset_of(const Bitset& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t wi = 0; wi < w_.size(); ++wi) {
      std::uint64_t w = w_[wi];
      while (w) {
        int b = std::countr_zero(w);
        f(static_cast<int>(wi * 64 + b));
        w &= w - 1;
      }
    }
  }

  std::vector<int> members() const {
    std::vector<int> m;
    m.reserve(count());
    for_each([&](int i) { m.push_back(i); });
    return m;
  }

 private:
  int n_ = 0;
  std::vector<std::uint64_t> w_;
};

template <class G>
concept GroundLike = requires(const G& g, int a, int b) {
  { g.size() } -> std::convertible_to<int>;
  { g.prod(a, b) } -> std::convertible_to<int>;
};

// Setwise product AB = {ab : a in A, b in B} over a ground semigroup.
template <GroundLike G>
Bitset product_bits(const G& ground, const Bitset& a, const Bitset& b) {
  Bitset r(ground.size());
  a.for_each([&](int x) { b.for_each([&](int y) { r.set(ground.prod(x, y)); }); });
  return r;
}

// Least pair (a, b) inside `s` whose product escapes `s`, if any.
template <GroundLike G>
std::optional<std::pair<int, int>> closure_gap(const G& ground, const Bitset& s) {
  auto mem = s.members();
  for (int a : mem)
    for (int b : mem)
      if (!s.test(ground.prod(a, b))) return std::make_pair(a, b);
  return std::nullopt;
}

}  // namespace hsg
