#pragma once

#include "macposets/polynomial.hpp"

namespace macposets {

struct RingOpResult {
  IdealPresentation ring;
  std::vector<std::string> warnings;
  std::vector<std::pair<std::string, std::string>> renamed;  // old -> new, second factor
};

// K[x..]/I x_K K[y..]/J presented over the union of variables by
// I + J + (x_i y_j for all cross pairs). Colliding variable names in the
// second factor are renamed with numeric suffixes.
RingOpResult ring_fiber_product(const IdealPresentation& a, const IdealPresentation& b);

// The fiber product presentation plus the single relation m_A - m_B between
// the socle monomials. Both factors must be Artinian with a unique maximal
// monomial class; unequal socle degrees yield a warning, since the extra
// relation is then not homogeneous.
RingOpResult ring_connected_sum(const IdealPresentation& a, const IdealPresentation& b);

}  // namespace macposets
