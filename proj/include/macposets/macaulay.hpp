#pragma once

#include <chrono>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "macposets/poset.hpp"

namespace macposets {

// Within-level orders of a ranked poset, each level listed from smallest to
// largest. Only the within-level order carries meaning; serialized total
// orders are rank-major ascending.
struct LevelOrder {
  std::vector<std::vector<int>> levels;

  std::vector<int> flat() const;
  std::vector<std::string> flat_labels(const Poset& p) const;
};

using MacaulayOrder = LevelOrder;

enum class Decision { yes, no, timeout };

struct MacaulayOutcome {
  Decision decision;
  std::optional<MacaulayOrder> witness;
  std::string note;  // diagnostics, e.g. why an input cannot be Macaulay
};

struct OrdersOutcome {
  std::vector<MacaulayOrder> orders;
  bool complete = true;  // false iff the search timed out
};

struct SearchBudget {
  std::chrono::milliseconds max_time{std::chrono::hours(24)};
  int threads = 1;  // accepted for interface stability; the search is sequential
};

struct VerifyFailure {
  int rank;
  int size;
  int condition;  // 1: shadow not minimum, 2: shadow not an initial segment
};

struct VerifyResult {
  bool ok;
  std::optional<VerifyFailure> failure;
};

std::vector<int> upper_shadow(const Poset& p, std::span<const int> a);
std::vector<int> lower_shadow(const Poset& p, std::span<const int> a);
std::vector<std::string> upper_shadow(const Poset& p, const std::vector<std::string>& a);
std::vector<std::string> lower_shadow(const Poset& p, const std::vector<std::string>& a);

// The largest s elements of level d.
std::vector<int> initial_segment(const Poset& p, const LevelOrder& o, int d, int s);

// Exact minimum of |upper shadow| over size-s subsets of level d.
int min_upper_shadow(const Poset& p, int d, int s);

// Macaulay conditions for every rank and segment size: minimal shadows, and
// shadows of initial segments landing as initial segments one level up.
VerifyResult verify_macaulay_order(const Poset& p, const LevelOrder& o);

MacaulayOutcome is_macaulay(const Poset& p, const SearchBudget& budget = {});

// All total orders under which p is Macaulay (or at most one with all=false),
// sorted lexicographically by element index.
OrdersOutcome macaulay_orders(const Poset& p, const SearchBudget& budget = {}, bool all = true);

// Shadow of a segment minus the shadow of everything above it in its level.
std::vector<int> new_shadow(const Poset& p, const LevelOrder& o, std::span<const int> segment);

MacaulayOutcome is_additive(const Poset& p, const SearchBudget& budget = {});

// Test oracle: brute force over every tuple of level permutations.
MacaulayOutcome is_macaulay_naive(const Poset& p, int max_elements = 10);

// Rebuild a LevelOrder from a flat label sequence (rank-major or any
// interleaving; within-level appearance order is kept).
LevelOrder level_order_from_labels(const Poset& p, const std::vector<std::string>& labels);

}  // namespace macposets
