#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "macposets/errors.hpp"
#include "macposets/rational.hpp"

namespace macposets {

// One exponent per ring variable; degree is the coordinate sum.
using ExponentVec = std::vector<int>;

int total_degree(const ExponentVec& e);
bool divides(const ExponentVec& a, const ExponentVec& b);  // a | b coordinatewise

// Coefficient field: exact rationals, or integers modulo a prime. Fp values
// are kept as integers in [0, p).
struct Field {
  enum class Kind { rationals, prime } kind = Kind::rationals;
  uint32_t p = 0;

  static Field rationals() { return {}; }
  static Field prime(uint32_t p);

  Rational normalize(const Rational& r) const;
  Rational add(const Rational& a, const Rational& b) const;
  Rational sub(const Rational& a, const Rational& b) const;
  Rational mul(const Rational& a, const Rational& b) const;
  Rational div(const Rational& a, const Rational& b) const;
  Rational neg(const Rational& a) const;

  friend bool operator==(const Field&, const Field&) = default;
};

enum class OrderKind { grevlex, lex };

// Total order on exponent vectors; grevlex (the default everywhere) refines
// total degree, lex compares leading variables first.
struct MonomialOrder {
  OrderKind kind = OrderKind::grevlex;

  bool less(const ExponentVec& a, const ExponentVec& b) const;
  bool greater(const ExponentVec& a, const ExponentVec& b) const { return less(b, a); }
};

// Sparse exact polynomial. Terms are stored keyed by exponent vector; no zero
// coefficients are kept. Use sorted_terms() for order-canonical iteration.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(int nvars) : nvars_(nvars) {}
  static Polynomial monomial(const ExponentVec& e, Rational c = Rational(1));
  static Polynomial constant(int nvars, Rational c);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::map<ExponentVec, Rational>& terms() const { return terms_; }

  void add_term(const ExponentVec& e, const Rational& c, const Field& f);

  int degree() const;        // max term degree; -1 for zero
  bool homogeneous() const;  // all terms of equal degree (true for zero)

  std::pair<ExponentVec, Rational> leading_term(const MonomialOrder& order) const;
  std::vector<std::pair<ExponentVec, Rational>> sorted_terms(const MonomialOrder& order) const;

  // Single monomial with unit coefficient?
  std::optional<ExponentVec> as_monomial() const;

  std::string to_string(const std::vector<std::string>& vars,
                        const MonomialOrder& order = {}) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

 private:
  int nvars_ = 0;
  std::map<ExponentVec, Rational> terms_;
};

Polynomial poly_add(const Field& f, const Polynomial& a, const Polynomial& b);
Polynomial poly_sub(const Field& f, const Polynomial& a, const Polynomial& b);
Polynomial poly_mul(const Field& f, const Polynomial& a, const Polynomial& b);
Polynomial poly_scale(const Field& f, const Polynomial& a, const Rational& c);
Polynomial poly_mul_term(const Field& f, const Polynomial& a, const ExponentVec& e,
                         const Rational& c);

// grammar: poly := term (('+'|'-') term)*
//          term := [rational] ('*'? var ('^' uint)?)*
//          rational := int ['/' uint]
// whitespace ignored, '*' optional between factors.
Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& vars);

std::string monomial_to_string(const ExponentVec& e, const std::vector<std::string>& vars);

// Presentation of K[vars]/ideal. validate_presentation is what get_mons,
// get_poset and buchberger require: distinct variables, nonzero homogeneous
// generators.
struct IdealPresentation {
  std::vector<std::string> vars;
  Field field;
  std::vector<Polynomial> generators;
};

void validate_presentation(const IdealPresentation& ring);

IdealPresentation make_presentation(std::vector<std::string> vars,
                                    const std::vector<std::string>& generator_text,
                                    Field field = Field::rationals());

}  // namespace macposets
