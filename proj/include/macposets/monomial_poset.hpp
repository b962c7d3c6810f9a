#pragma once

#include "macposets/groebner.hpp"
#include "macposets/poset.hpp"

namespace macposets {

// A nonzero coset of a monomial in the quotient ring, keyed by the normal
// form shared by all of its monomial representatives.
struct MonomialClass {
  ExponentVec representative;  // smallest representative found, by grevlex
  Polynomial key;              // normal form; nonzero
  int degree = 0;
  std::string label;  // the key when it is a plain monomial, else the representative
};

// All monomial classes of a quotient ring up to a degree bound, with the
// multiplication table class * variable -> class-or-zero.
class MonomialClassTable {
 public:
  static constexpr int default_max_degree = 10;

  // Enumerates degree by degree. Artinian quotients are enumerated in full
  // (max_degree is ignored); otherwise enumeration stops at max_degree.
  static MonomialClassTable build(const IdealPresentation& ring,
                                  int max_degree = default_max_degree);

  const IdealPresentation& ring() const { return ring_; }
  const GroebnerBasis& gb() const { return gb_; }
  const std::vector<MonomialClass>& classes() const { return classes_; }
  bool artinian() const { return artinian_; }
  bool truncated() const { return truncated_; }

  // class index * variable -> class index, or -1 when the product is zero
  // (or falls beyond the truncation bound).
  int multiply(int class_index, int var) const { return mult_[class_index][var]; }

 private:
  IdealPresentation ring_;
  GroebnerBasis gb_;
  std::vector<MonomialClass> classes_;
  std::vector<std::vector<int>> mult_;
  bool artinian_ = false;
  bool truncated_ = false;
};

std::vector<MonomialClass> get_mons(const IdealPresentation& ring,
                                    int max_degree = MonomialClassTable::default_max_degree);

// The monomial poset: classes ordered by divisibility of cosets, covers given
// by multiplication with single variables. Rank equals degree.
Poset get_poset(const IdealPresentation& ring,
                int max_degree = MonomialClassTable::default_max_degree);

Poset poset_of(const MonomialClassTable& table);

// The unique maximal class of an Artinian quotient.
int socle_class(const MonomialClassTable& table);

}  // namespace macposets
