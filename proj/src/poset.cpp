#include "macposets/poset.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>

namespace macposets {

int Poset::index_of(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) fail(errc::unknown_label, "no element labeled '" + label + "'");
  return it->second;
}

std::optional<int> Poset::try_index_of(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const RankAssignment& Poset::ranks() const {
  if (!ranks_) fail(errc::not_ranked, "poset has no consistent rank function");
  return *ranks_;
}

const RankAssignment& rank_assignment(const Poset& p) { return p.ranks(); }

std::vector<int> Poset::minimal_elements() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (down_[i].empty()) out.push_back(i);
  return out;
}

std::vector<int> Poset::maximal_elements() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (up_[i].empty()) out.push_back(i);
  return out;
}

Poset Poset::from_covers(std::vector<std::string> labels,
                         const std::vector<std::pair<std::string, std::string>>& covers) {
  std::unordered_map<std::string, int> idx;
  for (size_t i = 0; i < labels.size(); ++i) {
    if (!idx.emplace(labels[i], static_cast<int>(i)).second)
      fail(errc::duplicate_label, "label '" + labels[i] + "' appears twice");
  }
  std::vector<std::pair<int, int>> raw;
  raw.reserve(covers.size());
  for (const auto& [lo, hi] : covers) {
    auto a = idx.find(lo), b = idx.find(hi);
    if (a == idx.end()) fail(errc::unknown_label, "cover references unknown label '" + lo + "'");
    if (b == idx.end()) fail(errc::unknown_label, "cover references unknown label '" + hi + "'");
    raw.emplace_back(a->second, b->second);
  }
  Poset p;
  p.labels_ = std::move(labels);
  p.index_ = std::move(idx);
  p.finish_construction(std::move(raw));
  return p;
}

Poset Poset::from_cover_ids(std::vector<std::string> labels,
                            std::vector<std::pair<int, int>> covers) {
  Poset p;
  for (size_t i = 0; i < labels.size(); ++i) {
    if (!p.index_.emplace(labels[i], static_cast<int>(i)).second)
      fail(errc::duplicate_label, "label '" + labels[i] + "' appears twice");
  }
  for (auto [a, b] : covers)
    if (a < 0 || b < 0 || a >= static_cast<int>(labels.size()) ||
        b >= static_cast<int>(labels.size()))
      fail(errc::unknown_label, "cover references element out of range");
  p.labels_ = std::move(labels);
  p.finish_construction(std::move(covers));
  return p;
}

void Poset::finish_construction(std::vector<std::pair<int, int>> raw) {
  const int n = size();
  std::sort(raw.begin(), raw.end());
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  for (auto [a, b] : raw)
    if (a == b) fail(errc::cycle_detected, "relation '" + labels_[a] + "' < itself");

  std::vector<std::vector<int>> adj(n);
  std::vector<int> indeg(n, 0);
  for (auto [a, b] : raw) {
    adj[a].push_back(b);
    ++indeg[b];
  }

  // Topological order; a leftover vertex means a directed cycle.
  std::vector<int> topo;
  topo.reserve(n);
  std::vector<int> deg = indeg;
  std::vector<int> stack;
  for (int i = 0; i < n; ++i)
    if (deg[i] == 0) stack.push_back(i);
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    topo.push_back(v);
    for (int w : adj[v])
      if (--deg[w] == 0) stack.push_back(w);
  }
  if (static_cast<int>(topo.size()) != n)
    fail(errc::cycle_detected, "input relations contain a directed cycle");

  // Strict reachability by reverse-topological accumulation.
  succ_.assign(n, DynBitset(n));
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    int v = *it;
    for (int w : adj[v]) {
      succ_[v].set(w);
      succ_[v] |= succ_[w];
    }
  }

  // Hasse diagram: keep a pair only when no element lies strictly between.
  covers_.clear();
  for (auto [a, b] : raw) {
    bool redundant = false;
    succ_[a].for_each([&](int c) {
      if (c != b && succ_[c].test(b)) redundant = true;
    });
    if (!redundant) covers_.emplace_back(a, b);
  }
  std::sort(covers_.begin(), covers_.end());

  up_.assign(n, {});
  down_.assign(n, {});
  for (auto [a, b] : covers_) {
    up_[a].push_back(b);
    down_[b].push_back(a);
  }

  // Rank: minimal elements at 0, +1 along covers, consistent or absent.
  std::vector<int> rank(n, -1);
  bool ok = true;
  for (int v : topo) {
    if (down_[v].empty()) {
      rank[v] = 0;
      continue;
    }
    int r = -1;
    for (int u : down_[v]) {
      if (r == -1)
        r = rank[u] + 1;
      else if (r != rank[u] + 1)
        ok = false;
    }
    rank[v] = r;
  }
  if (ok && n > 0) {
    RankAssignment ra;
    ra.rank = rank;
    int top = *std::max_element(rank.begin(), rank.end());
    ra.levels.assign(top + 1, {});
    for (int i = 0; i < n; ++i) ra.levels[rank[i]].push_back(i);
    ranks_ = std::move(ra);
  } else if (ok && n == 0) {
    ranks_ = RankAssignment{};
  }
}

Poset chain(int n) {
  if (n < 1) fail(errc::invalid_size, "chain requires at least one element");
  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> covers;
  for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  for (int i = 0; i + 1 < n; ++i) covers.emplace_back(i, i + 1);
  return Poset::from_cover_ids(std::move(labels), std::move(covers));
}

Poset boolean_lattice(int n) {
  if (n < 0) fail(errc::invalid_size, "boolean_lattice requires n >= 0");
  const int count = 1 << n;
  std::vector<std::string> labels(count);
  for (int mask = 0; mask < count; ++mask) {
    std::string s(n, '0');
    for (int b = 0; b < n; ++b)
      if (mask & (1 << b)) s[n - 1 - b] = '1';
    labels[mask] = s;
  }
  std::vector<std::pair<int, int>> covers;
  for (int mask = 0; mask < count; ++mask)
    for (int b = 0; b < n; ++b)
      if (!(mask & (1 << b))) covers.emplace_back(mask, mask | (1 << b));
  return Poset::from_cover_ids(std::move(labels), std::move(covers));
}

Poset cartesian_product(const Poset& p, const Poset& q) {
  const int np = p.size(), nq = q.size();
  std::vector<std::string> labels;
  labels.reserve(static_cast<size_t>(np) * nq);
  auto id = [nq](int a, int b) { return a * nq + b; };
  for (int a = 0; a < np; ++a)
    for (int b = 0; b < nq; ++b) labels.push_back("(" + p.label(a) + "," + q.label(b) + ")");
  std::vector<std::pair<int, int>> covers;
  for (auto [a, b] : p.covers())
    for (int c = 0; c < nq; ++c) covers.emplace_back(id(a, c), id(b, c));
  for (auto [c, d] : q.covers())
    for (int a = 0; a < np; ++a) covers.emplace_back(id(a, c), id(a, d));
  return Poset::from_cover_ids(std::move(labels), std::move(covers));
}

Poset disjoint_union(const Poset& p, const Poset& q) {
  std::vector<std::string> labels;
  labels.reserve(p.size() + q.size());
  for (const auto& l : p.labels()) labels.push_back("0:" + l);
  for (const auto& l : q.labels()) labels.push_back("1:" + l);
  std::vector<std::pair<int, int>> covers;
  for (auto [a, b] : p.covers()) covers.emplace_back(a, b);
  for (auto [a, b] : q.covers()) covers.emplace_back(a + p.size(), b + p.size());
  return Poset::from_cover_ids(std::move(labels), std::move(covers));
}

Poset dual(const Poset& p) {
  std::vector<std::pair<int, int>> covers;
  covers.reserve(p.covers().size());
  for (auto [a, b] : p.covers()) covers.emplace_back(b, a);
  return Poset::from_cover_ids(p.labels(), std::move(covers));
}

namespace {

// Structural colors refined over cover neighborhoods, renumbered jointly so
// that isomorphic elements of the two posets receive equal color ids.
std::pair<std::vector<long long>, std::vector<long long>> joint_refinement_colors(
    const Poset& p, const Poset& q) {
  const int n = p.size();
  const long long k = n + 1;
  auto init = [&](const Poset& poset) {
    std::vector<long long> c(poset.size());
    for (int i = 0; i < poset.size(); ++i) {
      long long r = poset.ranked() ? poset.ranks().rank[i] : 0;
      c[i] = (r * k + static_cast<long long>(poset.upper_covers(i).size())) * k +
             static_cast<long long>(poset.lower_covers(i).size());
    }
    return c;
  };
  std::vector<long long> cp = init(p), cq = init(q);
  using Key = std::tuple<long long, std::vector<long long>, std::vector<long long>>;
  auto key_of = [](const Poset& poset, const std::vector<long long>& c, int i) {
    std::vector<long long> ups, downs;
    for (int j : poset.upper_covers(i)) ups.push_back(c[j]);
    for (int j : poset.lower_covers(i)) downs.push_back(c[j]);
    std::sort(ups.begin(), ups.end());
    std::sort(downs.begin(), downs.end());
    return Key{c[i], std::move(ups), std::move(downs)};
  };
  for (int round = 0; round < 3; ++round) {
    std::map<Key, long long> remap;
    std::vector<Key> kp, kq;
    for (int i = 0; i < n; ++i) kp.push_back(key_of(p, cp, i));
    for (int i = 0; i < q.size(); ++i) kq.push_back(key_of(q, cq, i));
    for (const auto& key : kp) remap.emplace(key, 0);
    for (const auto& key : kq) remap.emplace(key, 0);
    long long next_id = 0;
    for (auto& [key, id] : remap) id = next_id++;
    for (int i = 0; i < n; ++i) cp[i] = remap[kp[i]];
    for (int i = 0; i < q.size(); ++i) cq[i] = remap[kq[i]];
  }
  return {std::move(cp), std::move(cq)};
}

// Backtracking cover-isomorphism search. Domain elements are assigned in the
// given order, candidate images in the given order; with collect_all the
// visitor sees every solution until it returns false.
class IsoSearch {
 public:
  IsoSearch(const Poset& p, const Poset& q) : p_(p), q_(q) {}

  template <typename Visitor>
  void run(const std::vector<int>& domain_order, const std::vector<int>& candidate_order,
           Visitor&& visit) {
    const int n = p_.size();
    if (n != q_.size() || p_.covers().size() != q_.covers().size()) return;
    if (p_.ranked() != q_.ranked()) return;
    std::tie(cp_, cq_) = joint_refinement_colors(p_, q_);
    {
      auto a = cp_, b = cq_;
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      if (a != b) return;
    }
    image_.assign(n, -1);
    used_.assign(n, false);
    stop_ = false;
    extend(0, domain_order, candidate_order, visit);
  }

 private:
  template <typename Visitor>
  void extend(size_t pos, const std::vector<int>& dom, const std::vector<int>& cand,
              Visitor&& visit) {
    if (stop_) return;
    if (pos == dom.size()) {
      if (!visit(image_)) stop_ = true;
      return;
    }
    int v = dom[pos];
    for (int w : cand) {
      if (used_[w] || cp_[v] != cq_[w]) continue;
      if (!consistent(v, w, pos, dom)) continue;
      image_[v] = w;
      used_[w] = true;
      extend(pos + 1, dom, cand, visit);
      used_[w] = false;
      image_[v] = -1;
      if (stop_) return;
    }
  }

  bool consistent(int v, int w, size_t pos, const std::vector<int>& dom) const {
    for (size_t k = 0; k < pos; ++k) {
      int u = dom[k], fu = image_[u];
      if (has_cover(p_, u, v) != has_cover(q_, fu, w)) return false;
      if (has_cover(p_, v, u) != has_cover(q_, w, fu)) return false;
    }
    return true;
  }

  static bool has_cover(const Poset& poset, int a, int b) {
    const auto& ups = poset.upper_covers(a);
    return std::find(ups.begin(), ups.end(), b) != ups.end();
  }

  const Poset& p_;
  const Poset& q_;
  std::vector<long long> cp_, cq_;
  std::vector<int> image_;
  std::vector<bool> used_;
  bool stop_ = false;
};

std::vector<int> ascending_ids(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

std::vector<int> label_sorted_ids(const Poset& p) {
  auto ids = ascending_ids(p.size());
  std::sort(ids.begin(), ids.end(),
            [&](int a, int b) { return p.label(a) < p.label(b); });
  return ids;
}

}  // namespace

std::optional<PosetIso> are_isomorphic(const Poset& p, const Poset& q) {
  std::optional<PosetIso> out;
  IsoSearch search(p, q);
  search.run(ascending_ids(p.size()), ascending_ids(q.size()), [&](const std::vector<int>& img) {
    out = PosetIso{img};
    return false;
  });
  return out;
}

std::optional<PosetIso> anti_automorphism(const Poset& p) {
  Poset d = dual(p);
  std::optional<PosetIso> out;
  IsoSearch search(p, d);
  auto order = label_sorted_ids(p);
  search.run(order, order, [&](const std::vector<int>& img) {
    out = PosetIso{img};
    return false;
  });
  return out;
}

std::optional<std::vector<std::vector<int>>> automorphisms(const Poset& p, size_t cap) {
  std::vector<std::vector<int>> out;
  bool overflow = false;
  IsoSearch search(p, p);
  auto order = ascending_ids(p.size());
  search.run(order, order, [&](const std::vector<int>& img) {
    if (out.size() >= cap) {
      overflow = true;
      return false;
    }
    out.push_back(img);
    return true;
  });
  if (overflow) return std::nullopt;
  return out;
}

}  // namespace macposets
