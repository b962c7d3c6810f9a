#include <doctest.h>

#include <algorithm>
#include <random>

#include "macposets/groebner.hpp"

using namespace macposets;

namespace {

const std::vector<std::string> XY = {"x", "y"};
const std::vector<std::string> XYZ = {"x", "y", "z"};

Polynomial parse_xy(const std::string& s) { return parse_polynomial(s, XY); }

IdealPresentation ring_xy(const std::vector<std::string>& gens) {
  return make_presentation(XY, gens);
}

// Random homogeneous polynomial in <= 3 variables.
Polynomial random_homogeneous(std::mt19937& rng, int nvars, int degree) {
  Field qq = Field::rationals();
  Polynomial p(nvars);
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> nterms(1, 4);
  int want = nterms(rng);
  for (int t = 0; t < want; ++t) {
    ExponentVec e(nvars, 0);
    int left = degree;
    for (int v = 0; v + 1 < nvars; ++v) {
      std::uniform_int_distribution<int> part(0, left);
      e[v] = part(rng);
      left -= e[v];
    }
    e[nvars - 1] = left;
    int c = coeff(rng);
    if (c == 0) c = 1;
    p.add_term(e, Rational(c), qq);
  }
  return p;
}

std::vector<std::string> basis_strings(const GroebnerBasis& gb,
                                       const std::vector<std::string>& vars) {
  std::vector<std::string> out;
  for (const auto& p : gb.polys) out.push_back(p.to_string(vars));
  return out;
}

}  // namespace

TEST_CASE("monomial order") {
  MonomialOrder grevlex{OrderKind::grevlex};
  MonomialOrder lex{OrderKind::lex};
  // degree first under grevlex
  CHECK(grevlex.less({1, 0}, {1, 1}));
  // x^2 beats y^2, x*y beats y^2 under both
  CHECK(grevlex.less({0, 2}, {2, 0}));
  CHECK(grevlex.less({0, 2}, {1, 1}));
  CHECK(lex.less({0, 2}, {2, 0}));
  // lex ignores degree
  CHECK(lex.less({0, 5}, {1, 0}));
  CHECK_FALSE(grevlex.less({0, 5}, {1, 0}));
  // grevlex on three variables: x^2 > x*y > y^2 > x*z > y*z > z^2
  CHECK(MonomialOrder{}.less({1, 0, 1}, {0, 2, 0}));
  CHECK(MonomialOrder{}.less({0, 1, 1}, {1, 0, 1}));
  CHECK(MonomialOrder{}.less({0, 0, 2}, {0, 1, 1}));
}

TEST_CASE("parser accepts the grammar") {
  Polynomial p = parse_xy("x^2*y^2");
  REQUIRE(p.term_count() == 1);
  CHECK(p.terms().begin()->first == ExponentVec{2, 2});
  CHECK(p.terms().begin()->second == Rational(1));

  Polynomial q = parse_xy("x*y - y^2");
  CHECK(q.term_count() == 2);
  CHECK(q.to_string(XY) == "x*y - y^2");

  CHECK(parse_xy("x - x").is_zero());
  CHECK(parse_xy("3").to_string(XY) == "3");
  CHECK(parse_xy("-x + 2").to_string(XY) == "-x + 2");
  CHECK(parse_xy("3/4*x^2").to_string(XY) == "3/4*x^2");
  CHECK(parse_xy("2x") == parse_xy("2*x"));
  CHECK(parse_xy("x*x*y") == parse_xy("x^2*y"));
  CHECK(parse_xy(" x ^ 2 * y ") == parse_xy("x^2*y"));

  // longest-match variable names
  auto long_vars = parse_polynomial("x1^2*x12", {"x1", "x12"});
  CHECK(long_vars.term_count() == 1);
  CHECK(long_vars.terms().begin()->first == ExponentVec{2, 1});
}

TEST_CASE("parser rejects bad input") {
  CHECK_THROWS_AS(parse_xy("x +"), error);
  CHECK_THROWS_AS(parse_xy("z"), error);
  CHECK_THROWS_AS(parse_xy("x^"), error);
  CHECK_THROWS_AS(parse_xy("x^-2"), error);
  CHECK_THROWS_AS(parse_xy("1/0"), error);
  CHECK_THROWS_AS(parse_xy(""), error);
  CHECK_THROWS_AS(parse_xy("x**y"), error);
  try {
    parse_xy("x + qq");
  } catch (const error& e) {
    CHECK(e.code() == errc::unknown_variable);
    CHECK(std::string(e.what()).find("position") != std::string::npos);
  }
}

TEST_CASE("presentation validation") {
  CHECK_THROWS_AS(validate_presentation(ring_xy({"x + y^2"})), error);
  CHECK_THROWS_AS(validate_presentation(ring_xy({"x - x"})), error);
  CHECK_NOTHROW(validate_presentation(ring_xy({"x^2 - y^2"})));
  CHECK_NOTHROW(validate_presentation(ring_xy({})));
  CHECK_NOTHROW(validate_presentation(ring_xy({"x - 2y"})));
}

TEST_CASE("buchberger on a single generator") {
  auto gb = buchberger(ring_xy({"x^2 - y^2"}));
  REQUIRE(gb.polys.size() == 1);
  CHECK(gb.polys[0].to_string(XY) == "x^2 - y^2");
}

TEST_CASE("buchberger reduction chain example") {
  // hand reduction: x^3*y -> x^2*y^2 -> x*y^3 -> y^4, so the basis is
  // {x*y - y^2, x^4, y^4} with standard monomials 1, x, x^2, x^3, y, y^2, y^3
  auto gb = buchberger(ring_xy({"x*y - y^2", "x^4", "x^3*y", "x^2*y^2"}));
  auto strings = basis_strings(gb, XY);
  std::sort(strings.begin(), strings.end());
  CHECK(strings == std::vector<std::string>{"x*y - y^2", "x^4", "y^4"});

  // leading-term ideal excludes exactly {1, x, x^2, x^3, y, y^2, y^3}
  for (int d = 0; d <= 3; ++d) CHECK(hilbert_function(gb, d) == 2 - (d == 0 ? 1 : 0));
  CHECK(hilbert_function(gb, 4) == 0);
}

TEST_CASE("buchberger on the five-generator poset ring") {
  auto gb = buchberger(ring_xy({"x^6", "x^3*y", "y^4", "x^2*y^3 - x^5"}));
  // x^5 leads the binomial, so its normal form is x^2*y^3
  auto nf = normal_form(parse_xy("x^5"), gb);
  CHECK(nf.to_string(XY) == "x^2*y^3");
  CHECK(is_artinian(gb));
}

TEST_CASE("normal form basics") {
  auto gb = buchberger(ring_xy({"x^2 - y^2"}));
  CHECK(normal_form(parse_xy("x^2"), gb).to_string(XY) == "y^2");

  GroebnerBasis empty;
  empty.nvars = 2;
  auto f = parse_xy("x^3 + x*y");
  CHECK(normal_form(f, empty) == f);
}

TEST_CASE("normal form is linear and idempotent") {
  std::mt19937 rng(51);
  auto gb = buchberger(ring_xy({"x^2 - y^2", "y^3"}));
  Field qq = Field::rationals();
  for (int iter = 0; iter < 200; ++iter) {
    Polynomial f = random_homogeneous(rng, 2, static_cast<int>(rng() % 5));
    Polynomial g = random_homogeneous(rng, 2, static_cast<int>(rng() % 5));
    auto nf = normal_form(f, gb);
    CHECK(normal_form(nf, gb) == nf);
    CHECK(normal_form(poly_add(qq, f, g), gb) == poly_add(qq, nf, normal_form(g, gb)));
  }
}

TEST_CASE("division expresses the input exactly") {
  std::mt19937 rng(53);
  Field qq = Field::rationals();
  for (int iter = 0; iter < 40; ++iter) {
    std::vector<std::string> gens;
    auto gb = buchberger(make_presentation(
        XYZ, {"x^2 - y*z", "y^3 + z^3", "z^4"}));
    Polynomial f = random_homogeneous(rng, 3, static_cast<int>(rng() % 5));
    auto div = divide(f, gb);
    Polynomial recomposed = div.remainder;
    for (size_t i = 0; i < gb.polys.size(); ++i)
      recomposed = poly_add(qq, recomposed, poly_mul(qq, div.quotients[i], gb.polys[i]));
    CHECK(recomposed == f);
    // remainder has no term divisible by a leading term
    for (const auto& [e, c] : div.remainder.terms())
      for (const auto& p : gb.polys) CHECK_FALSE(divides(p.leading_term(gb.order).first, e));
  }
}

TEST_CASE("reduced basis is independent of generator order") {
  std::mt19937 rng(59);
  for (int iter = 0; iter < 20; ++iter) {
    int nvars = 2 + static_cast<int>(rng() % 2);
    std::vector<std::string> vars(XYZ.begin(), XYZ.begin() + nvars);
    std::vector<Polynomial> gens;
    int count = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < count; ++i) {
      Polynomial g = random_homogeneous(rng, nvars, 1 + static_cast<int>(rng() % 4));
      if (!g.is_zero()) gens.push_back(g);
    }
    if (gens.empty()) continue;
    IdealPresentation a;
    a.vars = vars;
    a.generators = gens;
    IdealPresentation b = a;
    std::shuffle(b.generators.begin(), b.generators.end(), rng);
    auto gb_a = buchberger(a);
    auto gb_b = buchberger(b);
    CHECK(gb_a.polys == gb_b.polys);
  }
}

TEST_CASE("homogeneous input gives a homogeneous basis") {
  std::mt19937 rng(61);
  for (int iter = 0; iter < 20; ++iter) {
    std::vector<Polynomial> gens;
    for (int i = 0; i < 2; ++i) {
      auto g = random_homogeneous(rng, 3, 1 + static_cast<int>(rng() % 3));
      if (!g.is_zero()) gens.push_back(g);
    }
    if (gens.empty()) continue;
    IdealPresentation ring;
    ring.vars = XYZ;
    ring.generators = gens;
    for (const auto& p : buchberger(ring).polys) CHECK(p.homogeneous());
  }
}

TEST_CASE("every s-polynomial reduces to zero over the basis") {
  auto gb = buchberger(make_presentation(XYZ, {"x^2 - y*z", "x*y - z^2", "y^2*z"}));
  Field qq = gb.field;
  for (size_t i = 0; i < gb.polys.size(); ++i)
    for (size_t j = i + 1; j < gb.polys.size(); ++j) {
      const auto [ei, ci] = gb.polys[i].leading_term(gb.order);
      const auto [ej, cj] = gb.polys[j].leading_term(gb.order);
      ExponentVec l(ei.size());
      for (size_t k = 0; k < l.size(); ++k) l[k] = std::max(ei[k], ej[k]);
      ExponentVec qi = l, qj = l;
      for (size_t k = 0; k < l.size(); ++k) {
        qi[k] -= ei[k];
        qj[k] -= ej[k];
      }
      Polynomial s = poly_sub(qq, poly_mul_term(qq, gb.polys[i], qi, qq.div(Rational(1), ci)),
                              poly_mul_term(qq, gb.polys[j], qj, qq.div(Rational(1), cj)));
      CHECK(normal_form(s, gb).is_zero());
    }
}

TEST_CASE("artinian detection") {
  CHECK(is_artinian(buchberger(ring_xy({"x^3", "y^5"}))));
  CHECK_FALSE(is_artinian(buchberger(ring_xy({"x^2 - y^2"}))));
  CHECK_FALSE(is_artinian(buchberger(make_presentation({"x"}, {}))));
  CHECK(is_artinian(buchberger(make_presentation({"x"}, {"x^4"}))));
}

TEST_CASE("hilbert function") {
  auto squares = buchberger(ring_xy({"x^2", "y^2"}));
  CHECK(hilbert_function(squares, 0) == 1);
  CHECK(hilbert_function(squares, 1) == 2);
  CHECK(hilbert_function(squares, 2) == 1);
  CHECK(hilbert_function(squares, 3) == 0);

  auto linear = buchberger(ring_xy({"x - 2y"}));
  CHECK(hilbert_function(linear, 1) == 1);

  auto gb35 = buchberger(ring_xy({"x^3", "y^5"}));
  long long total = 0;
  for (int d = 0; d <= 10; ++d) total += hilbert_function(gb35, d);
  CHECK(total == 15);
}

TEST_CASE("hilbert function matches the divisibility count for monomial ideals") {
  std::mt19937 rng(67);
  for (int iter = 0; iter < 20; ++iter) {
    // random monomial ideal in 2 vars
    std::vector<std::string> gens;
    int count = 1 + static_cast<int>(rng() % 3);
    std::vector<ExponentVec> exps;
    for (int i = 0; i < count; ++i) {
      int a = static_cast<int>(rng() % 4), b = static_cast<int>(rng() % 4);
      if (a == 0 && b == 0) a = 1;
      exps.push_back({a, b});
      std::string s;
      if (a) s += "x^" + std::to_string(a);
      if (b) s += (s.empty() ? "" : "*") + ("y^" + std::to_string(b));
      gens.push_back(s);
    }
    auto gb = buchberger(ring_xy(gens));
    for (int d = 0; d <= 6; ++d) {
      long long direct = 0;
      for (int a = 0; a <= d; ++a) {
        ExponentVec m{a, d - a};
        bool in_ideal = false;
        for (const auto& g : exps)
          if (g[0] <= m[0] && g[1] <= m[1]) in_ideal = true;
        if (!in_ideal) ++direct;
      }
      CHECK(hilbert_function(gb, d) == direct);
    }
  }
}

TEST_CASE("prime field arithmetic") {
  Field f5 = Field::prime(5);
  CHECK(f5.normalize(Rational(7)) == Rational(2));
  CHECK(f5.normalize(Rational(BigInt(1), BigInt(2))) == Rational(3));  // 2*3 = 6 = 1
  CHECK(f5.add(Rational(3), Rational(4)) == Rational(2));
  CHECK(f5.div(Rational(1), Rational(3)) == Rational(2));
  CHECK_THROWS_AS(Field::prime(6), error);
  CHECK_THROWS_AS(Field::prime(1), error);

  auto ring = make_presentation(XY, {"x^2 + 4y^2", "y^3"}, f5);
  auto gb = buchberger(ring);
  // x^2 + 4y^2 = x^2 - y^2 mod 5
  auto nf = normal_form(parse_polynomial("x^2", XY), gb);
  REQUIRE(nf.term_count() == 1);
  CHECK(nf.terms().begin()->first == ExponentVec{0, 2});
  CHECK(nf.terms().begin()->second == Rational(1));
  CHECK(is_artinian(gb));
}
