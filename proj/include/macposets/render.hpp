#pragma once

#include <optional>
#include <string>

#include "macposets/macaulay.hpp"
#include "macposets/poset.hpp"

namespace macposets {

// Hasse diagram as TikZ node/edge lines: one node per element at
// (position within level, rank), one edge per cover. With an order given,
// smaller elements appear to the left; otherwise label order is used.
std::string to_tikz(const Poset& p, const std::optional<LevelOrder>& order = std::nullopt);

// Directed DOT graph, edges lower -> upper, with same-rank groups when ranked.
std::string to_dot(const Poset& p);

}  // namespace macposets
