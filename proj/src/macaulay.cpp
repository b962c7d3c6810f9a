#include "macposets/macaulay.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace macposets {

namespace {

using Clock = std::chrono::steady_clock;

struct timeout_signal {};

struct Deadline {
  Clock::time_point at;
  bool expired() const { return Clock::now() >= at; }
  void check() const {
    if (expired()) throw timeout_signal{};
  }
};

Deadline make_deadline(const SearchBudget& budget) {
  if (budget.max_time <= std::chrono::milliseconds::zero())
    fail(errc::invalid_size, "search budget must be positive");
  return Deadline{Clock::now() + budget.max_time};
}

}  // namespace

std::vector<int> LevelOrder::flat() const {
  std::vector<int> out;
  for (const auto& lvl : levels) out.insert(out.end(), lvl.begin(), lvl.end());
  return out;
}

std::vector<std::string> LevelOrder::flat_labels(const Poset& p) const {
  std::vector<std::string> out;
  for (int id : flat()) out.push_back(p.label(id));
  return out;
}

std::vector<int> upper_shadow(const Poset& p, std::span<const int> a) {
  DynBitset seen(p.size());
  for (int v : a) {
    if (v < 0 || v >= p.size()) fail(errc::unknown_label, "element id out of range");
    for (int w : p.upper_covers(v)) seen.set(w);
  }
  return seen.to_vector();
}

std::vector<int> lower_shadow(const Poset& p, std::span<const int> a) {
  DynBitset seen(p.size());
  for (int v : a) {
    if (v < 0 || v >= p.size()) fail(errc::unknown_label, "element id out of range");
    for (int w : p.lower_covers(v)) seen.set(w);
  }
  return seen.to_vector();
}

namespace {

std::vector<int> ids_of(const Poset& p, const std::vector<std::string>& labels) {
  std::vector<int> ids;
  ids.reserve(labels.size());
  for (const auto& l : labels) ids.push_back(p.index_of(l));
  return ids;
}

std::vector<std::string> labels_of(const Poset& p, const std::vector<int>& ids) {
  std::vector<std::string> out;
  out.reserve(ids.size());
  for (int i : ids) out.push_back(p.label(i));
  return out;
}

}  // namespace

std::vector<std::string> upper_shadow(const Poset& p, const std::vector<std::string>& a) {
  return labels_of(p, upper_shadow(p, std::span<const int>(ids_of(p, a))));
}

std::vector<std::string> lower_shadow(const Poset& p, const std::vector<std::string>& a) {
  return labels_of(p, lower_shadow(p, std::span<const int>(ids_of(p, a))));
}

std::vector<int> initial_segment(const Poset& p, const LevelOrder& o, int d, int s) {
  if (d < 0 || d >= static_cast<int>(o.levels.size()) || d > p.ranks().top())
    fail(errc::size_out_of_range, "rank " + std::to_string(d) + " out of range");
  const auto& lvl = o.levels[d];
  if (s < 0 || s > static_cast<int>(lvl.size()))
    fail(errc::size_out_of_range,
         "segment size " + std::to_string(s) + " exceeds level of size " +
             std::to_string(lvl.size()));
  return {lvl.end() - s, lvl.end()};
}

namespace {

// Per-level shadow masks plus the memoized exact minimum-shadow oracle.
class ShadowOracle {
 public:
  explicit ShadowOracle(const Poset& p) : p_(p) {
    const auto& ra = p.ranks();  // throws not_ranked
    const int top = ra.top();
    local_.assign(p.size(), -1);
    levels_ = ra.levels;
    masks_.resize(levels_.size());
    for (int d = 0; d <= top; ++d)
      for (size_t i = 0; i < levels_[d].size(); ++i) local_[levels_[d][i]] = static_cast<int>(i);
    for (int d = 0; d <= top; ++d) {
      int next = d + 1 <= top ? static_cast<int>(levels_[d + 1].size()) : 0;
      masks_[d].assign(levels_[d].size(), DynBitset(next));
      for (size_t i = 0; i < levels_[d].size(); ++i)
        for (int w : p.upper_covers(levels_[d][i])) masks_[d][i].set(local_[w]);
    }
  }

  int level_count() const { return static_cast<int>(levels_.size()); }
  const std::vector<int>& level(int d) const { return levels_[d]; }
  int local_index(int v) const { return local_[v]; }
  const DynBitset& mask(int d, int local) const { return masks_[d][local]; }
  int next_level_size(int d) const {
    return d + 1 < level_count() ? static_cast<int>(levels_[d + 1].size()) : 0;
  }

  // Exact min |upper shadow| over size-s subsets of level d, branch and bound.
  int min_shadow(int d, int s, const Deadline* deadline = nullptr) {
    if (s == 0) return 0;
    auto key = std::make_pair(d, s);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const auto& ms = masks_[d];
    const int k = static_cast<int>(ms.size());
    std::vector<int> order(k);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return ms[a].count() < ms[b].count(); });

    DynBitset greedy(next_level_size(d));
    for (int i = 0; i < s; ++i) greedy |= ms[order[i]];
    int best = greedy.count();

    DynBitset cur(next_level_size(d));
    long long nodes = 0;
    auto rec = [&](auto&& self, int idx, int chosen, const DynBitset& acc) -> void {
      if (deadline && (++nodes & 1023) == 0) deadline->check();
      if (chosen == s) {
        best = std::min(best, acc.count());
        return;
      }
      if (k - idx < s - chosen) return;
      if (acc.count() >= best) return;  // shadow only grows
      for (int i = idx; i <= k - (s - chosen); ++i) {
        DynBitset next = acc;
        next |= ms[order[i]];
        self(self, i + 1, chosen + 1, next);
      }
    };
    rec(rec, 0, 0, cur);
    memo_.emplace(key, best);
    return best;
  }

 private:
  const Poset& p_;
  std::vector<std::vector<int>> levels_;
  std::vector<int> local_;
  std::vector<std::vector<DynBitset>> masks_;
  std::map<std::pair<int, int>, int> memo_;
};

void check_complete_order(const Poset& p, const LevelOrder& o) {
  const auto& ra = p.ranks();
  if (o.levels.size() != ra.levels.size())
    fail(errc::incomplete_order, "order has " + std::to_string(o.levels.size()) +
                                     " levels, poset has " + std::to_string(ra.levels.size()));
  for (size_t d = 0; d < ra.levels.size(); ++d) {
    auto a = o.levels[d];
    auto b = ra.levels[d];
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b)
      fail(errc::incomplete_order,
           "order at rank " + std::to_string(d) + " is not a permutation of the level");
  }
}

VerifyResult verify_with(const Poset& p, const LevelOrder& o, ShadowOracle& oracle) {
  check_complete_order(p, o);
  const int top = static_cast<int>(o.levels.size()) - 1;
  for (int d = 0; d <= top; ++d) {
    const auto& lvl = o.levels[d];
    const int k = static_cast<int>(lvl.size());
    DynBitset shadow(oracle.next_level_size(d));
    for (int s = 1; s <= k; ++s) {
      shadow |= oracle.mask(d, oracle.local_index(lvl[k - s]));
      int size = shadow.count();
      if (size != oracle.min_shadow(d, s)) return {false, VerifyFailure{d, s, 1}};
      if (d < top) {
        // the shadow must be exactly the top |shadow| elements of level d+1
        const auto& next = o.levels[d + 1];
        bool initial = true;
        for (int t = 0; t < size && initial; ++t)
          if (!shadow.test(oracle.local_index(next[next.size() - 1 - t]))) initial = false;
        if (!initial) return {false, VerifyFailure{d, s, 2}};
      }
    }
  }
  return {true, std::nullopt};
}

}  // namespace

int min_upper_shadow(const Poset& p, int d, int s) {
  ShadowOracle oracle(p);
  if (d < 0 || d >= oracle.level_count())
    fail(errc::size_out_of_range, "rank " + std::to_string(d) + " out of range");
  if (s < 0 || s > static_cast<int>(oracle.level(d).size()))
    fail(errc::size_out_of_range, "subset size out of range");
  return oracle.min_shadow(d, s);
}

VerifyResult verify_macaulay_order(const Poset& p, const LevelOrder& o) {
  ShadowOracle oracle(p);
  return verify_with(p, o, oracle);
}

namespace {

// Level-by-level backtracking over within-level orders. Given the order on
// level d, the nested shadows of its initial segments must all attain the
// minimum-shadow oracle; they then slice level d+1 into ordered blocks, and
// the candidate orders of level d+1 are exactly the block-respecting
// permutations. Complete: a poset is reported non-Macaulay only after the
// whole tree is exhausted.
class MacaulaySearch {
 public:
  MacaulaySearch(const Poset& p, ShadowOracle& oracle, Deadline deadline, bool prune_level0)
      : p_(p), oracle_(oracle), deadline_(deadline), prune_level0_(prune_level0) {}

  // visitor: bool(const LevelOrder&); return false to stop the search.
  template <typename Visitor>
  void run(Visitor&& visit) {
    const int nlevels = oracle_.level_count();
    order_.levels.assign(nlevels, {});
    if (nlevels == 0) {
      visit(order_);
      return;
    }
    std::vector<std::vector<int>> autos;
    if (prune_level0_ && oracle_.level(0).size() > 1) {
      if (auto a = automorphisms(p_, 20000)) autos = std::move(*a);
    }
    std::vector<int> perm = oracle_.level(0);
    stop_ = false;
    do {
      deadline_.check();
      if (!autos.empty() && !orbit_least(perm, autos)) continue;
      order_.levels[0] = perm;
      descend(0, visit);
      if (stop_) return;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

 private:
  // True iff perm is lexicographically least within its automorphism orbit.
  static bool orbit_least(const std::vector<int>& perm,
                          const std::vector<std::vector<int>>& autos) {
    for (const auto& sigma : autos) {
      for (size_t i = 0; i < perm.size(); ++i) {
        int mapped = sigma[perm[i]];
        if (mapped < perm[i]) return false;
        if (mapped > perm[i]) break;
      }
    }
    return true;
  }

  template <typename Visitor>
  void descend(int d, Visitor&& visit) {
    deadline_.check();
    const int top = oracle_.level_count() - 1;
    if (d == top) {
      if (!visit(order_)) stop_ = true;
      return;
    }
    const auto& lvl = order_.levels[d];
    const int k = static_cast<int>(lvl.size());
    const int nk = oracle_.next_level_size(d);

    // Nested shadows of initial segments; prune unless each attains the
    // exact minimum. first_s[e] = smallest s whose segment shadow contains e.
    DynBitset shadow(nk);
    std::vector<int> first_s(nk, 0);
    for (int s = 1; s <= k; ++s) {
      const DynBitset& m = oracle_.mask(d, oracle_.local_index(lvl[k - s]));
      m.for_each([&](int e) {
        if (!first_s[e]) first_s[e] = s;
      });
      shadow |= m;
      if (shadow.count() != oracle_.min_shadow(d, s, &deadline_)) return;
    }

    // Blocks of level d+1, smallest first: unshadowed elements, then first
    // appearance in descending s. Within a block any order is allowed.
    std::map<int, std::vector<int>, std::greater<>> blocks;
    const auto& next_lvl = oracle_.level(d + 1);
    for (int e = 0; e < nk; ++e)
      blocks[first_s[e] == 0 ? k + 1 : first_s[e]].push_back(next_lvl[e]);

    std::vector<std::vector<int>> block_list;
    for (auto& [s, elems] : blocks) block_list.push_back(std::move(elems));

    auto& target = order_.levels[d + 1];
    target.clear();
    emit_blocks(block_list, 0, d, visit);
    target.clear();
  }

  template <typename Visitor>
  void emit_blocks(std::vector<std::vector<int>>& blocks, size_t bi, int d, Visitor&& visit) {
    if (stop_) return;
    auto& target = order_.levels[d + 1];
    if (bi == blocks.size()) {
      descend(d + 1, visit);
      return;
    }
    auto& block = blocks[bi];
    std::sort(block.begin(), block.end());
    size_t base = target.size();
    do {
      target.resize(base);
      target.insert(target.end(), block.begin(), block.end());
      emit_blocks(blocks, bi + 1, d, visit);
      if (stop_) return;
    } while (std::next_permutation(block.begin(), block.end()));
    target.resize(base);
  }

  const Poset& p_;
  ShadowOracle& oracle_;
  Deadline deadline_;
  bool prune_level0_;
  LevelOrder order_;
  bool stop_ = false;
};

bool flat_less(const LevelOrder& a, const LevelOrder& b) { return a.flat() < b.flat(); }

}  // namespace

MacaulayOutcome is_macaulay(const Poset& p, const SearchBudget& budget) {
  if (!p.ranked())
    return {Decision::no, std::nullopt,
            "not ranked: a poset without a rank function cannot be Macaulay"};
  Deadline deadline = make_deadline(budget);
  ShadowOracle oracle(p);
  MacaulaySearch search(p, oracle, deadline, /*prune_level0=*/true);
  std::optional<MacaulayOrder> witness;
  try {
    search.run([&](const LevelOrder& o) {
      witness = o;
      return false;
    });
  } catch (const timeout_signal&) {
    return {Decision::timeout, std::nullopt, "search budget exhausted"};
  }
  if (witness) return {Decision::yes, std::move(witness), ""};
  return {Decision::no, std::nullopt, ""};
}

OrdersOutcome macaulay_orders(const Poset& p, const SearchBudget& budget, bool all) {
  if (!p.ranked()) return {{}, true};
  Deadline deadline = make_deadline(budget);
  ShadowOracle oracle(p);
  MacaulaySearch search(p, oracle, deadline, /*prune_level0=*/!all);
  OrdersOutcome out;
  try {
    search.run([&](const LevelOrder& o) {
      out.orders.push_back(o);
      return all;
    });
  } catch (const timeout_signal&) {
    out.complete = false;
  }
  std::sort(out.orders.begin(), out.orders.end(), flat_less);
  return out;
}

std::vector<int> new_shadow(const Poset& p, const LevelOrder& o, std::span<const int> segment) {
  if (segment.empty()) return {};
  check_complete_order(p, o);
  for (int v : segment)
    if (v < 0 || v >= p.size()) fail(errc::unknown_label, "element id out of range");
  const auto& ra = p.ranks();
  int d = ra.rank[segment[0]];
  for (int v : segment)
    if (ra.rank[v] != d) fail(errc::not_a_segment, "elements span more than one rank");
  const auto& lvl = o.levels[d];
  std::vector<int> pos;
  for (int v : segment) {
    auto it = std::find(lvl.begin(), lvl.end(), v);
    pos.push_back(static_cast<int>(it - lvl.begin()));
  }
  auto [lo, hi] = std::minmax_element(pos.begin(), pos.end());
  if (*hi - *lo + 1 != static_cast<int>(segment.size()))
    fail(errc::not_a_segment, "elements are not contiguous in the level order");

  std::vector<int> above(lvl.begin() + *hi + 1, lvl.end());
  auto shadow_b = upper_shadow(p, segment);
  auto shadow_above = upper_shadow(p, std::span<const int>(above));
  DynBitset drop(p.size());
  for (int v : shadow_above) drop.set(v);
  std::vector<int> out;
  for (int v : shadow_b)
    if (!drop.test(v)) out.push_back(v);
  return out;
}

namespace {

// Additivity of one Macaulay order: across every rank and segment size,
// initial segments maximize the new shadow and final segments minimize it.
bool additive_under(ShadowOracle& oracle, const LevelOrder& o) {
  const int top = static_cast<int>(o.levels.size()) - 1;
  for (int d = 0; d <= top; ++d) {
    const auto& lvl = o.levels[d];
    const int k = static_cast<int>(lvl.size());
    const int nk = oracle.next_level_size(d);
    // suffix[j] = shadow of positions >= j
    std::vector<DynBitset> suffix(k + 1, DynBitset(nk));
    for (int j = k - 1; j >= 0; --j) {
      suffix[j] = suffix[j + 1];
      suffix[j] |= oracle.mask(d, oracle.local_index(lvl[j]));
    }
    // new_size[i][j) via incremental run shadows
    std::vector<std::vector<int>> new_size(k + 1, std::vector<int>(k + 1, 0));
    for (int i = 0; i < k; ++i) {
      DynBitset run(nk);
      for (int j = i + 1; j <= k; ++j) {
        run |= oracle.mask(d, oracle.local_index(lvl[j - 1]));
        DynBitset fresh = run;
        fresh.subtract(suffix[j]);
        new_size[i][j] = fresh.count();
      }
    }
    for (int s = 1; s <= k; ++s) {
      int initial = new_size[k - s][k];
      int final_ = new_size[0][s];
      for (int i = 0; i + s <= k; ++i) {
        int mid = new_size[i][i + s];
        if (initial < mid || mid < final_) return false;
      }
    }
  }
  return true;
}

}  // namespace

MacaulayOutcome is_additive(const Poset& p, const SearchBudget& budget) {
  if (!p.ranked())
    return {Decision::no, std::nullopt, "not ranked: additivity requires a Macaulay poset"};
  Deadline deadline = make_deadline(budget);
  ShadowOracle oracle(p);
  MacaulaySearch search(p, oracle, deadline, /*prune_level0=*/false);
  std::optional<MacaulayOrder> witness;
  bool any_macaulay = false;
  try {
    search.run([&](const LevelOrder& o) {
      any_macaulay = true;
      if (additive_under(oracle, o)) {
        witness = o;
        return false;
      }
      return true;
    });
  } catch (const timeout_signal&) {
    return {Decision::timeout, std::nullopt, "search budget exhausted"};
  }
  if (witness) return {Decision::yes, std::move(witness), ""};
  return {Decision::no, std::nullopt, any_macaulay ? "" : "not Macaulay"};
}

MacaulayOutcome is_macaulay_naive(const Poset& p, int max_elements) {
  if (p.size() > max_elements)
    fail(errc::too_large, "naive search limited to " + std::to_string(max_elements) + " elements");
  if (!p.ranked()) return {Decision::no, std::nullopt, "not ranked"};
  ShadowOracle oracle(p);
  const auto& ra = p.ranks();
  LevelOrder o;
  o.levels = ra.levels;
  std::optional<MacaulayOrder> witness;
  auto rec = [&](auto&& self, size_t d) -> bool {
    if (d == o.levels.size()) {
      if (verify_with(p, o, oracle).ok) {
        witness = o;
        return true;
      }
      return false;
    }
    auto& lvl = o.levels[d];
    std::sort(lvl.begin(), lvl.end());
    do {
      if (self(self, d + 1)) return true;
    } while (std::next_permutation(lvl.begin(), lvl.end()));
    return false;
  };
  rec(rec, 0);
  if (witness) return {Decision::yes, std::move(witness), ""};
  return {Decision::no, std::nullopt, ""};
}

LevelOrder level_order_from_labels(const Poset& p, const std::vector<std::string>& labels) {
  const auto& ra = p.ranks();
  LevelOrder o;
  o.levels.assign(ra.levels.size(), {});
  for (const auto& l : labels) {
    int v = p.index_of(l);
    o.levels[ra.rank[v]].push_back(v);
  }
  check_complete_order(p, o);
  return o;
}

}  // namespace macposets
