#pragma once

#include "macposets/poset.hpp"

namespace macposets {

// Rank-preserving injective monotone map between ranked posets, by element ids.
struct PosetMap {
  Poset domain;
  Poset codomain;
  std::vector<int> image;  // domain id -> codomain id
};

PosetMap poset_map(Poset domain, Poset codomain,
                   const std::vector<std::pair<std::string, std::string>>& images);

struct PosetOpResult {
  Poset poset;
  std::vector<std::string> warnings;
};

// Disjoint union with all least elements identified.
Poset wedge_product(const std::vector<Poset>& posets);

// Disjoint union of the codomains with the images of each domain element
// identified across summands.
Poset fiber_product(const std::vector<PosetMap>& maps);

// Disjoint union with all minima identified and all maxima identified. When
// the summands' top ranks differ the result is returned with a warning, since
// it cannot be ranked.
PosetOpResult closed_product(const std::vector<Poset>& posets);

// Fiber product that also identifies the dual images (q_i . f_i)(p), where
// q_i is the deterministic anti-automorphism of each self-dual codomain.
// Self-dual posets can admit several anti-automorphisms, and different
// choices of q_i can produce non-isomorphic sums; fixing the first one found
// keeps the output reproducible.
Poset connected_sum(const std::vector<PosetMap>& maps);

}  // namespace macposets
