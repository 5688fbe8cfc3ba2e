#include "hsg/search.hpp"

#include <algorithm>
#include <map>

namespace hsg {

namespace {

struct ElemInfo {
  bool idem = false;
  int index = 0;
  int period = 0;
  int hsize = 0;  // |H_e| for idempotents, 0 otherwise
};

std::vector<ElemInfo> invariants(const FiniteSemigroup& s, bool with_hsize) {
  std::vector<ElemInfo> inf(s.size());
  for (int x = 0; x < s.size(); ++x) {
    inf[x].idem = s.is_idempotent(x);
    auto [index, period] = cycle_index_period(s, x);
    inf[x].index = index;
    inf[x].period = period;
    if (with_hsize && inf[x].idem)
      inf[x].hsize = static_cast<int>(maximal_subgroup(s, x).size());
  }
  return inf;
}

enum class Mode { Embed, Iso, AllHoms };

class Backtracker {
 public:
  Backtracker(const FiniteSemigroup& s, const FiniteSemigroup& t, Mode mode,
              SearchBudget budget, long long max_results)
      : s_(s), t_(t), mode_(mode), budget_(budget), max_results_(max_results) {
    bool hs = mode == Mode::Iso;
    sinf_ = invariants(s, hs);
    tinf_ = invariants(t, hs);
    // idempotents first, then the rest, each ascending
    for (int x = 0; x < s.size(); ++x)
      if (sinf_[x].idem) order_.push_back(x);
    for (int x = 0; x < s.size(); ++x)
      if (!sinf_[x].idem) order_.push_back(x);
  }

  SearchStatus run() {
    std::vector<int> map(s_.size(), -1);
    std::vector<char> used(t_.size(), 0);
    std::vector<int> mapped;
    exhausted_ = true;
    dfs(map, used, mapped);
    if (!solutions_.empty() &&
        (mode_ == Mode::Embed || mode_ == Mode::Iso))
      return SearchStatus::Found;
    if (!exhausted_) return SearchStatus::NoneBudget;
    return SearchStatus::NoneExhaustive;
  }

  const std::vector<std::vector<int>>& solutions() const { return solutions_; }
  long long nodes() const { return nodes_; }
  bool complete() const { return exhausted_; }

 private:
  bool compatible(int x, int tcand) const {
    const ElemInfo& a = sinf_[x];
    const ElemInfo& b = tinf_[tcand];
    switch (mode_) {
      case Mode::Iso:
        return a.idem == b.idem && a.index == b.index && a.period == b.period &&
               a.hsize == b.hsize;
      case Mode::Embed:
        // injective homomorphisms preserve idempotency and the cyclic
        // structure of every element exactly
        return a.idem == b.idem && a.index == b.index && a.period == b.period;
      case Mode::AllHoms:
        return !a.idem || b.idem;
    }
    return true;
  }

  bool injective() const { return mode_ != Mode::AllHoms; }

  // Close the partial map under products; false on contradiction.
  bool propagate(std::vector<int>& map, std::vector<char>& used,
                 std::vector<int>& mapped) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i < mapped.size(); ++i)
        for (std::size_t j = 0; j < mapped.size(); ++j) {
          int a = mapped[i], b = mapped[j];
          int p = s_.prod(a, b);
          int tp = t_.prod(map[a], map[b]);
          if (map[p] < 0) {
            if (injective() && used[tp]) return false;
            map[p] = tp;
            if (injective()) used[tp] = 1;
            mapped.push_back(p);
            changed = true;
          } else if (map[p] != tp) {
            return false;
          }
        }
    }
    return true;
  }

  // true = stop the whole search
  bool dfs(const std::vector<int>& map, const std::vector<char>& used,
           const std::vector<int>& mapped) {
    int var = -1;
    for (int x : order_)
      if (map[x] < 0) {
        var = x;
        break;
      }
    if (var < 0) {
      solutions_.push_back(map);
      if (mode_ != Mode::AllHoms) return true;
      if (static_cast<long long>(solutions_.size()) >= max_results_) {
        exhausted_ = false;
        return true;
      }
      return false;
    }
    for (int cand = 0; cand < t_.size(); ++cand) {
      if (injective() && used[cand]) continue;
      if (!compatible(var, cand)) continue;
      if (++nodes_ > budget_.max_nodes) {
        exhausted_ = false;
        return true;
      }
      std::vector<int> m2 = map;
      std::vector<char> u2 = used;
      std::vector<int> list2 = mapped;
      m2[var] = cand;
      if (injective()) u2[cand] = 1;
      list2.push_back(var);
      if (propagate(m2, u2, list2) && dfs(m2, u2, list2)) return true;
    }
    return false;
  }

  const FiniteSemigroup& s_;
  const FiniteSemigroup& t_;
  Mode mode_;
  SearchBudget budget_;
  long long max_results_;
  std::vector<ElemInfo> sinf_, tinf_;
  std::vector<int> order_;
  std::vector<std::vector<int>> solutions_;
  long long nodes_ = 0;
  bool exhausted_ = true;
};

SearchResult finish(const FiniteSemigroup& s, const FiniteSemigroup& t,
                    Backtracker& bt, bool want_bijective) {
  SearchResult r;
  r.status = bt.run();
  r.nodes = bt.nodes();
  if (r.status == SearchStatus::Found) {
    Morphism m = analyze_morphism(s, t, bt.solutions().front());
    if (!m.homomorphism || !m.injective || (want_bijective && !m.surjective))
      throw Error("internal: search returned an invalid morphism");
    r.morphism = std::move(m);
  }
  return r;
}

}  // namespace

SearchResult find_embedding(const FiniteSemigroup& s, const FiniteSemigroup& t,
                            SearchBudget budget) {
  if (s.size() > t.size()) return {SearchStatus::NoneExhaustive, std::nullopt, 0};
  Backtracker bt(s, t, Mode::Embed, budget, 1);
  return finish(s, t, bt, false);
}

SearchResult is_isomorphic(const FiniteSemigroup& s, const FiniteSemigroup& t,
                           SearchBudget budget) {
  if (s.size() != t.size()) return {SearchStatus::NoneExhaustive, std::nullopt, 0};
  // invariant multisets must agree
  auto key = [](const FiniteSemigroup& x) {
    std::map<std::tuple<bool, int, int, int>, int> k;
    for (int e = 0; e < x.size(); ++e) {
      bool idem = x.is_idempotent(e);
      auto [index, period] = cycle_index_period(x, e);
      int hsize = idem ? static_cast<int>(maximal_subgroup(x, e).size()) : 0;
      ++k[{idem, index, period, hsize}];
    }
    return k;
  };
  if (key(s) != key(t)) return {SearchStatus::NoneExhaustive, std::nullopt, 0};
  Backtracker bt(s, t, Mode::Iso, budget, 1);
  return finish(s, t, bt, true);
}

HomEnumeration enumerate_homomorphisms(const FiniteSemigroup& s,
                                       const FiniteSemigroup& t,
                                       long long max_results, SearchBudget budget) {
  Backtracker bt(s, t, Mode::AllHoms, budget, max_results);
  SearchStatus st = bt.run();
  HomEnumeration e;
  e.maps = bt.solutions();
  e.nodes = bt.nodes();
  e.complete = bt.complete() && st != SearchStatus::NoneBudget;
  for (const auto& m : e.maps)
    if (hom_gap(s, t, m)) throw Error("internal: enumerated map is not a homomorphism");
  std::sort(e.maps.begin(), e.maps.end());
  return e;
}

}  // namespace hsg
