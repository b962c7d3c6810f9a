#pragma once

#include "macposets/polynomial.hpp"

namespace macposets {

// Reduced Groebner basis: monic leading terms, no basis leading term divides
// another, tails fully reduced. Unique for a given ideal and order.
struct GroebnerBasis {
  MonomialOrder order;
  Field field;
  int nvars = 0;
  std::vector<Polynomial> polys;
};

GroebnerBasis buchberger(const IdealPresentation& ring, MonomialOrder order = {});

// Remainder of full multivariate division: no remainder term is divisible by
// any basis leading term. Linear in f and idempotent.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);

// Division with explicit multipliers: f = sum quotients[i] * polys[i] + remainder.
struct Division {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};
Division divide(const Polynomial& f, const GroebnerBasis& gb);

// True iff some pure power of every variable leads a basis element, i.e. the
// quotient has finitely many monomials.
bool is_artinian(const GroebnerBasis& gb);

// dim_K (R/I)_d: the number of degree-d monomials outside the leading-term ideal.
long long hilbert_function(const GroebnerBasis& gb, int degree);

}  // namespace macposets
