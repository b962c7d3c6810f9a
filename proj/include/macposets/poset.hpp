#pragma once

#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "macposets/bitset.hpp"
#include "macposets/errors.hpp"

namespace macposets {

// Levels of a ranked poset. Every minimal element sits at rank 0 and ranks
// grow by exactly one along covers; a poset whose covers force two different
// ranks onto one element is not ranked.
struct RankAssignment {
  std::vector<int> rank;                 // per element
  std::vector<std::vector<int>> levels;  // levels[d] = elements of rank d, ascending ids
  int top() const { return static_cast<int>(levels.size()) - 1; }
};

// Witness bijection between two posets, as domain id -> codomain id.
struct PosetIso {
  std::vector<int> image;
};

// Finite poset stored as its Hasse diagram. Construction validates acyclicity
// and transitively reduces the input, so stored covers are canonical.
// Immutable after construction.
class Poset {
 public:
  static Poset from_covers(std::vector<std::string> labels,
                           const std::vector<std::pair<std::string, std::string>>& covers);
  static Poset from_cover_ids(std::vector<std::string> labels,
                              std::vector<std::pair<int, int>> covers);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_[i]; }
  int index_of(const std::string& label) const;  // throws unknown_label
  std::optional<int> try_index_of(const std::string& label) const;

  // Hasse diagram, sorted by (lower, upper).
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }
  const std::vector<int>& upper_covers(int i) const { return up_[i]; }
  const std::vector<int>& lower_covers(int i) const { return down_[i]; }

  bool less(int a, int b) const { return succ_[a].test(b); }
  bool leq(int a, int b) const { return a == b || less(a, b); }

  bool ranked() const { return ranks_.has_value(); }
  const RankAssignment& ranks() const;  // throws not_ranked
  int rank_of(int i) const { return ranks().rank[i]; }

  std::vector<int> minimal_elements() const;
  std::vector<int> maximal_elements() const;

  friend bool operator==(const Poset& a, const Poset& b) {
    return a.labels_ == b.labels_ && a.covers_ == b.covers_;
  }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, int> index_;
  std::vector<std::pair<int, int>> covers_;
  std::vector<std::vector<int>> up_, down_;
  std::vector<DynBitset> succ_;  // strict reachability
  std::optional<RankAssignment> ranks_;

  void finish_construction(std::vector<std::pair<int, int>> raw);
};

// rank_assignment(P): the unique levels structure, or not_ranked.
const RankAssignment& rank_assignment(const Poset& p);

Poset chain(int n);             // invalid_size for n < 1
Poset boolean_lattice(int n);   // invalid_size for n < 0
Poset cartesian_product(const Poset& p, const Poset& q);
Poset disjoint_union(const Poset& p, const Poset& q);
Poset dual(const Poset& p);

std::optional<PosetIso> are_isomorphic(const Poset& p, const Poset& q);

// Order-reversing self-bijection (an isomorphism P -> dual P), if one exists.
// Deterministic: backtracking explores elements in ascending label order.
std::optional<PosetIso> anti_automorphism(const Poset& p);

// All automorphisms, up to `cap`; returns nullopt if the cap is exceeded.
std::optional<std::vector<std::vector<int>>> automorphisms(const Poset& p, size_t cap);

}  // namespace macposets
