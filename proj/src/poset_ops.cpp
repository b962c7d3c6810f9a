#include "macposets/poset_ops.hpp"

#include <algorithm>
#include <numeric>

namespace macposets {

PosetMap poset_map(Poset domain, Poset codomain,
                   const std::vector<std::pair<std::string, std::string>>& images) {
  std::vector<int> image(domain.size(), -1);
  for (const auto& [from, to] : images) {
    int a = domain.index_of(from);
    int b = codomain.index_of(to);
    if (image[a] != -1) fail(errc::bad_format, "two images given for '" + from + "'");
    image[a] = b;
  }
  for (int a = 0; a < domain.size(); ++a)
    if (image[a] == -1)
      fail(errc::bad_format, "no image given for '" + domain.label(a) + "'");

  std::vector<bool> hit(codomain.size(), false);
  for (int b : image) {
    if (hit[b]) fail(errc::not_injective, "two elements map to '" + codomain.label(b) + "'");
    hit[b] = true;
  }
  if (!domain.ranked() || !codomain.ranked())
    fail(errc::not_rank_preserving, "both posets must be ranked");
  for (int a = 0; a < domain.size(); ++a)
    if (domain.rank_of(a) != codomain.rank_of(image[a]))
      fail(errc::not_rank_preserving,
           "'" + domain.label(a) + "' has rank " + std::to_string(domain.rank_of(a)) +
               " but its image has rank " + std::to_string(codomain.rank_of(image[a])));
  for (int a = 0; a < domain.size(); ++a)
    for (int b = 0; b < domain.size(); ++b)
      if (domain.leq(a, b) && !codomain.leq(image[a], image[b]))
        fail(errc::not_monotone, "'" + domain.label(a) + "' <= '" + domain.label(b) +
                                     "' is not preserved");
  return PosetMap{std::move(domain), std::move(codomain), std::move(image)};
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Quotient of a disjoint union by the identification classes of `uf`.
// Each class is labeled by its member labels, prefixed by summand index and
// joined in summand order.
Poset quotient(const std::vector<const Poset*>& summands, UnionFind& uf) {
  std::vector<int> offset(summands.size() + 1, 0);
  for (size_t i = 0; i < summands.size(); ++i)
    offset[i + 1] = offset[i] + summands[i]->size();
  const int total = offset.back();

  std::vector<int> root_to_class(total, -1);
  std::vector<std::string> labels;
  std::vector<int> cls(total);
  for (int v = 0; v < total; ++v) {
    int r = uf.find(v);
    if (root_to_class[r] == -1) {
      root_to_class[r] = static_cast<int>(labels.size());
      labels.emplace_back();
    }
    cls[v] = root_to_class[r];
  }
  for (int v = 0; v < total; ++v) {
    size_t i = 0;
    while (offset[i + 1] <= v) ++i;
    std::string member = std::to_string(i) + ":" + summands[i]->label(v - offset[i]);
    auto& l = labels[cls[v]];
    l += l.empty() ? member : "=" + member;
  }

  std::vector<std::pair<int, int>> covers;
  for (size_t i = 0; i < summands.size(); ++i)
    for (auto [a, b] : summands[i]->covers())
      covers.emplace_back(cls[offset[i] + a], cls[offset[i] + b]);
  return Poset::from_cover_ids(std::move(labels), std::move(covers));
}

int unique_minimum(const Poset& p) {
  auto mins = p.minimal_elements();
  if (mins.size() != 1)
    fail(errc::no_unique_minimum,
         "poset has " + std::to_string(mins.size()) + " minimal elements");
  return mins[0];
}

int unique_maximum(const Poset& p) {
  auto maxs = p.maximal_elements();
  if (maxs.size() != 1)
    fail(errc::no_unique_maximum,
         "poset has " + std::to_string(maxs.size()) + " maximal elements");
  return maxs[0];
}

}  // namespace

Poset wedge_product(const std::vector<Poset>& posets) {
  if (posets.empty()) fail(errc::invalid_size, "wedge product of an empty list");
  if (posets.size() == 1) {
    unique_minimum(posets[0]);
    return posets[0];
  }
  std::vector<const Poset*> summands;
  for (const auto& p : posets) summands.push_back(&p);
  std::vector<int> offset(posets.size() + 1, 0);
  for (size_t i = 0; i < posets.size(); ++i) offset[i + 1] = offset[i] + posets[i].size();
  UnionFind uf(offset.back());
  int first_min = offset[0] + unique_minimum(posets[0]);
  for (size_t i = 1; i < posets.size(); ++i)
    uf.unite(offset[i] + unique_minimum(posets[i]), first_min);
  return quotient(summands, uf);
}

PosetOpResult closed_product(const std::vector<Poset>& posets) {
  if (posets.empty()) fail(errc::invalid_size, "closed product of an empty list");
  if (posets.size() == 1) {
    unique_minimum(posets[0]);
    unique_maximum(posets[0]);
    return {posets[0], {}};
  }
  std::vector<const Poset*> summands;
  for (const auto& p : posets) summands.push_back(&p);
  std::vector<int> offset(posets.size() + 1, 0);
  for (size_t i = 0; i < posets.size(); ++i) offset[i + 1] = offset[i] + posets[i].size();
  UnionFind uf(offset.back());
  int first_min = offset[0] + unique_minimum(posets[0]);
  int first_max = offset[0] + unique_maximum(posets[0]);
  for (size_t i = 1; i < posets.size(); ++i) {
    uf.unite(offset[i] + unique_minimum(posets[i]), first_min);
    uf.unite(offset[i] + unique_maximum(posets[i]), first_max);
  }
  PosetOpResult out{quotient(summands, uf), {}};
  bool mismatched = false;
  std::optional<int> rank;
  for (const auto& p : posets) {
    if (!p.ranked()) {
      mismatched = true;
      break;
    }
    int top = p.ranks().top();
    if (rank && *rank != top) mismatched = true;
    rank = top;
  }
  if (mismatched)
    out.warnings.push_back(
        "The given posets do not have the same rank, therefore the resulting poset will not "
        "be ranked.");
  return out;
}

namespace {

void check_shared_domain(const std::vector<PosetMap>& maps) {
  if (maps.empty()) fail(errc::invalid_size, "at least one map is required");
  for (size_t i = 1; i < maps.size(); ++i)
    if (!(maps[i].domain == maps[0].domain))
      fail(errc::shared_domain_mismatch, "all maps must share one domain poset");
}

}  // namespace

Poset fiber_product(const std::vector<PosetMap>& maps) {
  check_shared_domain(maps);
  if (maps.size() == 1) return maps[0].codomain;
  std::vector<const Poset*> summands;
  for (const auto& m : maps) summands.push_back(&m.codomain);
  std::vector<int> offset(maps.size() + 1, 0);
  for (size_t i = 0; i < maps.size(); ++i) offset[i + 1] = offset[i] + maps[i].codomain.size();
  UnionFind uf(offset.back());
  const Poset& domain = maps[0].domain;
  for (int p = 0; p < domain.size(); ++p)
    for (size_t i = 1; i < maps.size(); ++i)
      uf.unite(offset[i] + maps[i].image[p], offset[0] + maps[0].image[p]);
  return quotient(summands, uf);
}

Poset connected_sum(const std::vector<PosetMap>& maps) {
  check_shared_domain(maps);
  std::vector<const Poset*> summands;
  std::vector<std::vector<int>> dual_image;  // per map: p -> (q_i . f_i)(p)
  for (const auto& m : maps) {
    summands.push_back(&m.codomain);
    auto q = anti_automorphism(m.codomain);
    if (!q) fail(errc::not_self_dual, "codomain has no order-reversing self-bijection");
    std::vector<int> composed(m.domain.size());
    for (int p = 0; p < m.domain.size(); ++p) composed[p] = q->image[m.image[p]];
    dual_image.push_back(std::move(composed));
  }
  if (maps.size() == 1) return maps[0].codomain;
  std::vector<int> offset(maps.size() + 1, 0);
  for (size_t i = 0; i < maps.size(); ++i) offset[i + 1] = offset[i] + maps[i].codomain.size();
  UnionFind uf(offset.back());
  const Poset& domain = maps[0].domain;
  if (maps.size() > 1) {
    for (int p = 0; p < domain.size(); ++p)
      for (size_t i = 1; i < maps.size(); ++i) {
        uf.unite(offset[i] + maps[i].image[p], offset[0] + maps[0].image[p]);
        uf.unite(offset[i] + dual_image[i][p], offset[0] + dual_image[0][p]);
      }
    // image classes and dual-image classes must stay disjoint
    std::vector<int> mark(offset.back(), 0);  // 1 = image, 2 = dual image
    for (size_t i = 0; i < maps.size(); ++i)
      for (int p = 0; p < domain.size(); ++p) {
        for (int kind : {1, 2}) {
          int v = kind == 1 ? maps[i].image[p] : dual_image[i][p];
          int root = uf.find(offset[i] + v);
          if (mark[root] && mark[root] != kind)
            fail(errc::inconsistent_identification,
                 "an identified class contains both an image and a dual image");
          mark[root] = kind;
        }
      }
  }
  return quotient(summands, uf);
}

}  // namespace macposets
