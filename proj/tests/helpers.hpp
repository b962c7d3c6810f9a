#pragma once

// Shared test utilities. The monomial constructions here are deliberately
// independent of the library's algebra path: divisibility posets are built
// from exponent arithmetic only, so they can serve as oracles for get_poset.

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "macposets/poset.hpp"

namespace test_helpers {

using macposets::Poset;
using macposets::PosetIso;

using Expo = std::vector<int>;

inline int degree_of(const Expo& e) {
  int d = 0;
  for (int x : e) d += x;
  return d;
}

inline bool expo_divides(const Expo& a, const Expo& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline std::string expo_label(const Expo& e, const std::vector<std::string>& vars) {
  std::string out;
  for (size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += vars[i];
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

inline std::vector<Expo> expos_of_degree(int nvars, int degree) {
  std::vector<Expo> out;
  Expo e(nvars, 0);
  auto rec = [&](auto&& self, int at, int left) -> void {
    if (at == nvars - 1) {
      e[at] = left;
      out.push_back(e);
      e[at] = 0;
      return;
    }
    for (int d = 0; d <= left; ++d) {
      e[at] = d;
      self(self, at + 1, left - d);
    }
    e[at] = 0;
  };
  if (nvars > 0) rec(rec, 0, degree);
  else if (degree == 0) out.push_back({});
  return out;
}

// Divisibility poset of the monomials outside a monomial ideal, truncated at
// max_degree. Covers are single-variable steps.
inline Poset standard_monomial_poset(const std::vector<Expo>& generators, int nvars,
                                     int max_degree,
                                     const std::vector<std::string>& vars) {
  auto standard = [&](const Expo& m) {
    for (const auto& g : generators)
      if (expo_divides(g, m)) return false;
    return true;
  };
  std::vector<Expo> mons;
  for (int d = 0; d <= max_degree; ++d) {
    bool any = false;
    for (const auto& m : expos_of_degree(nvars, d))
      if (standard(m)) {
        mons.push_back(m);
        any = true;
      }
    if (!any) break;
  }
  std::vector<std::string> labels;
  for (const auto& m : mons) labels.push_back(expo_label(m, vars));
  std::vector<std::pair<int, int>> covers;
  for (size_t i = 0; i < mons.size(); ++i)
    for (size_t j = 0; j < mons.size(); ++j) {
      if (degree_of(mons[j]) != degree_of(mons[i]) + 1) continue;
      if (expo_divides(mons[i], mons[j]))
        covers.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  return Poset::from_cover_ids(std::move(labels), std::move(covers));
}

// The full monomial poset of K[x,y] truncated at max_degree.
inline Poset xy_poset(int max_degree) {
  return standard_monomial_poset({}, 2, max_degree, {"x", "y"});
}

inline Poset random_ranked_poset(std::mt19937& rng, int max_elements) {
  std::uniform_int_distribution<int> total_dist(1, max_elements);
  int total = total_dist(rng);
  std::vector<int> level_sizes;
  while (total > 0) {
    std::uniform_int_distribution<int> sz(1, std::min(total, 4));
    int k = sz(rng);
    level_sizes.push_back(k);
    total -= k;
  }
  std::vector<std::string> labels;
  std::vector<std::vector<int>> levels;
  int id = 0;
  for (int k : level_sizes) {
    levels.emplace_back();
    for (int i = 0; i < k; ++i) {
      levels.back().push_back(id);
      labels.push_back("e" + std::to_string(id));
      ++id;
    }
  }
  std::vector<std::pair<int, int>> covers;
  for (size_t d = 1; d < levels.size(); ++d) {
    for (int v : levels[d]) {
      std::uniform_int_distribution<size_t> pick(0, levels[d - 1].size() - 1);
      covers.emplace_back(levels[d - 1][pick(rng)], v);
      for (int u : levels[d - 1])
        if (rng() % 3 == 0) covers.emplace_back(u, v);
    }
  }
  return Poset::from_cover_ids(std::move(labels), std::move(covers));
}

inline bool iso_is_valid(const Poset& p, const Poset& q, const PosetIso& iso) {
  if (static_cast<int>(iso.image.size()) != p.size()) return false;
  std::set<int> hit(iso.image.begin(), iso.image.end());
  if (static_cast<int>(hit.size()) != q.size()) return false;
  std::set<std::pair<int, int>> qc(q.covers().begin(), q.covers().end());
  size_t preserved = 0;
  for (auto [a, b] : p.covers()) {
    if (!qc.count({iso.image[a], iso.image[b]})) return false;
    ++preserved;
  }
  return preserved == q.covers().size();
}

}  // namespace test_helpers
