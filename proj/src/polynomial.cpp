#include "macposets/polynomial.hpp"

#include <algorithm>
#include <cctype>

namespace macposets {

int total_degree(const ExponentVec& e) {
  int d = 0;
  for (int x : e) d += x;
  return d;
}

bool divides(const ExponentVec& a, const ExponentVec& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Field Field::prime(uint32_t p) {
  if (p < 2) fail(errc::bad_format, "field characteristic must be a prime >= 2");
  for (uint32_t d = 2; static_cast<uint64_t>(d) * d <= p; ++d)
    if (p % d == 0) fail(errc::bad_format, std::to_string(p) + " is not prime");
  Field f;
  f.kind = Kind::prime;
  f.p = p;
  return f;
}

namespace {

uint64_t mod_inverse(uint64_t a, uint64_t p) {
  // extended Euclid; a nonzero mod p
  int64_t t = 0, new_t = 1;
  int64_t r = static_cast<int64_t>(p), new_r = static_cast<int64_t>(a % p);
  while (new_r != 0) {
    int64_t q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (r != 1) throw error(errc::bad_format, "element not invertible modulo p");
  if (t < 0) t += static_cast<int64_t>(p);
  return static_cast<uint64_t>(t);
}

uint64_t mod_of(const BigInt& v, uint32_t p) {
  BigInt r = v % BigInt(static_cast<long long>(p));
  long long x = r.to_ll();
  if (x < 0) x += p;
  return static_cast<uint64_t>(x);
}

}  // namespace

Rational Field::normalize(const Rational& r) const {
  if (kind == Kind::rationals) return r;
  uint64_t num = mod_of(r.num(), p);
  uint64_t den = mod_of(r.den(), p);
  if (den == 0) fail(errc::bad_format, "denominator vanishes modulo " + std::to_string(p));
  uint64_t v = (num % p) * mod_inverse(den, p) % p;
  return Rational(BigInt(static_cast<long long>(v)), BigInt(1));
}

Rational Field::add(const Rational& a, const Rational& b) const { return normalize(a + b); }
Rational Field::sub(const Rational& a, const Rational& b) const { return normalize(a - b); }
Rational Field::mul(const Rational& a, const Rational& b) const { return normalize(a * b); }

Rational Field::div(const Rational& a, const Rational& b) const {
  if (kind == Kind::rationals) return a / b;
  Rational bn = normalize(b);
  if (bn.is_zero()) fail(errc::bad_format, "division by zero in F_" + std::to_string(p));
  uint64_t inv = mod_inverse(mod_of(bn.num(), p), p);
  return mul(a, Rational(BigInt(static_cast<long long>(inv)), BigInt(1)));
}

Rational Field::neg(const Rational& a) const { return normalize(-a); }

bool MonomialOrder::less(const ExponentVec& a, const ExponentVec& b) const {
  if (kind == OrderKind::grevlex) {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    for (size_t i = a.size(); i-- > 0;)
      if (a[i] != b[i]) return a[i] > b[i];  // larger trailing exponent loses
    return false;
  }
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

Polynomial Polynomial::monomial(const ExponentVec& e, Rational c) {
  Polynomial p(static_cast<int>(e.size()));
  if (!c.is_zero()) p.terms_.emplace(e, std::move(c));
  return p;
}

Polynomial Polynomial::constant(int nvars, Rational c) {
  return monomial(ExponentVec(nvars, 0), std::move(c));
}

void Polynomial::add_term(const ExponentVec& e, const Rational& c, const Field& f) {
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    Rational v = f.normalize(c);
    if (!v.is_zero()) terms_.emplace(e, std::move(v));
    return;
  }
  Rational v = f.add(it->second, c);
  if (v.is_zero())
    terms_.erase(it);
  else
    it->second = std::move(v);
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
  return d;
}

bool Polynomial::homogeneous() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int td = total_degree(e);
    if (d == -1)
      d = td;
    else if (d != td)
      return false;
  }
  return true;
}

std::pair<ExponentVec, Rational> Polynomial::leading_term(const MonomialOrder& order) const {
  if (is_zero()) fail(errc::bad_format, "zero polynomial has no leading term");
  auto best = terms_.begin();
  for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
    if (order.less(best->first, it->first)) best = it;
  return {best->first, best->second};
}

std::vector<std::pair<ExponentVec, Rational>> Polynomial::sorted_terms(
    const MonomialOrder& order) const {
  std::vector<std::pair<ExponentVec, Rational>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(),
            [&](const auto& a, const auto& b) { return order.less(b.first, a.first); });
  return out;
}

std::optional<ExponentVec> Polynomial::as_monomial() const {
  if (terms_.size() != 1) return std::nullopt;
  const auto& [e, c] = *terms_.begin();
  if (!c.is_one()) return std::nullopt;
  return e;
}

Polynomial poly_add(const Field& f, const Polynomial& a, const Polynomial& b) {
  Polynomial out = a;
  for (const auto& [e, c] : b.terms()) out.add_term(e, c, f);
  return out;
}

Polynomial poly_sub(const Field& f, const Polynomial& a, const Polynomial& b) {
  Polynomial out = a;
  for (const auto& [e, c] : b.terms()) out.add_term(e, f.neg(c), f);
  return out;
}

Polynomial poly_mul_term(const Field& f, const Polynomial& a, const ExponentVec& e,
                         const Rational& c) {
  Polynomial out(a.nvars());
  for (const auto& [ea, ca] : a.terms()) {
    ExponentVec sum = ea;
    for (size_t i = 0; i < sum.size(); ++i) sum[i] += e[i];
    out.add_term(sum, f.mul(ca, c), f);
  }
  return out;
}

Polynomial poly_mul(const Field& f, const Polynomial& a, const Polynomial& b) {
  Polynomial out(a.nvars());
  for (const auto& [e, c] : b.terms()) out = poly_add(f, out, poly_mul_term(f, a, e, c));
  return out;
}

Polynomial poly_scale(const Field& f, const Polynomial& a, const Rational& c) {
  Polynomial out(a.nvars());
  for (const auto& [e, ca] : a.terms()) out.add_term(e, f.mul(ca, c), f);
  return out;
}

std::string monomial_to_string(const ExponentVec& e, const std::vector<std::string>& vars) {
  std::string out;
  for (size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += vars[i];
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

std::string Polynomial::to_string(const std::vector<std::string>& vars,
                                  const MonomialOrder& order) const {
  if (is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : sorted_terms(order)) {
    Rational coeff = c;
    if (out.empty()) {
      if (coeff.sign() < 0) {
        out += "-";
        coeff = -coeff;
      }
    } else {
      out += coeff.sign() < 0 ? " - " : " + ";
      if (coeff.sign() < 0) coeff = -coeff;
    }
    bool constant_term = total_degree(e) == 0;
    if (!coeff.is_one() || constant_term) {
      out += coeff.to_string();
      if (!constant_term) out += "*";
    }
    if (!constant_term) out += monomial_to_string(e, vars);
  }
  return out;
}

namespace {

class PolyParser {
 public:
  PolyParser(const std::string& text, const std::vector<std::string>& vars)
      : text_(text), vars_(vars) {
    // longest variable name first, so e.g. "x1" wins over "x"
    std::vector<size_t> idx(vars.size());
    for (size_t i = 0; i < vars.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
      return vars[a].size() != vars[b].size() ? vars[a].size() > vars[b].size()
                                              : vars[a] < vars[b];
    });
    by_length_ = std::move(idx);
  }

  Polynomial parse() {
    Polynomial out(static_cast<int>(vars_.size()));
    Field qq = Field::rationals();
    skip_ws();
    int sign = 1;
    if (peek() == '+' || peek() == '-') {
      if (take() == '-') sign = -1;
    }
    parse_term(out, sign, qq);
    skip_ws();
    while (pos_ < text_.size()) {
      char c = take();
      if (c == '+')
        parse_term(out, 1, qq);
      else if (c == '-')
        parse_term(out, -1, qq);
      else
        fail_at(pos_ - 1, std::string("expected '+' or '-', found '") + c + "'");
      skip_ws();
    }
    return out;
  }

 private:
  void parse_term(Polynomial& out, int sign, const Field& qq) {
    skip_ws();
    Rational coeff(sign);
    bool saw_factor = false;
    if (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '-') {
      coeff = qq.mul(coeff, parse_rational());
      saw_factor = true;
    }
    ExponentVec e(vars_.size(), 0);
    while (true) {
      skip_ws();
      size_t mark = pos_;
      if (peek() == '*') {
        ++pos_;
        skip_ws();
      }
      int var = match_var();
      if (var < 0) {
        if (mark != pos_) {
          // consumed a '*' with no factor after it
          if (std::isalpha(static_cast<unsigned char>(peek())))
            fail_at(pos_, "unknown variable");
          fail_at(pos_, "expected a variable after '*'");
        }
        if (std::isalpha(static_cast<unsigned char>(peek()))) fail_at(pos_, "unknown variable");
        break;
      }
      saw_factor = true;
      int exp = 1;
      skip_ws();
      if (peek() == '^') {
        ++pos_;
        skip_ws();
        exp = parse_uint();
      }
      e[var] += exp;
    }
    if (!saw_factor) fail_at(pos_, "expected a term");
    out = poly_add(qq, out, Polynomial::monomial(e, coeff));
  }

  Rational parse_rational() {
    BigInt num = parse_int();
    skip_ws();
    if (peek() == '/') {
      ++pos_;
      skip_ws();
      size_t at = pos_;
      BigInt den(parse_uint());
      if (den.is_zero()) fail_at(at, "zero denominator");
      return Rational(num, den);
    }
    return Rational(num, BigInt(1));
  }

  BigInt parse_int() {
    size_t start = pos_;
    if (peek() == '-') ++pos_;
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail_at(pos_, "expected a number");
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return BigInt::from_string(text_.substr(start, pos_ - start));
  }

  int parse_uint() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail_at(pos_, "expected an exponent");
    long long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (take() - '0');
      if (v > 1000000) fail_at(pos_, "exponent too large");
    }
    return static_cast<int>(v);
  }

  int match_var() {
    for (size_t i : by_length_) {
      const std::string& name = vars_[i];
      if (text_.compare(pos_, name.size(), name) == 0) {
        pos_ += name.size();
        return static_cast<int>(i);
      }
    }
    return -1;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  char take() { return text_[pos_++]; }

  [[noreturn]] void fail_at(size_t at, const std::string& what) {
    bool unknown_var = what == "unknown variable";
    fail(unknown_var ? errc::unknown_variable : errc::parse_error,
         what + " at position " + std::to_string(at) + " in '" + text_ + "'");
  }

  const std::string& text_;
  const std::vector<std::string>& vars_;
  std::vector<size_t> by_length_;
  size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& vars) {
  return PolyParser(text, vars).parse();
}

void validate_presentation(const IdealPresentation& ring) {
  for (size_t i = 0; i < ring.vars.size(); ++i)
    for (size_t j = i + 1; j < ring.vars.size(); ++j)
      if (ring.vars[i] == ring.vars[j])
        fail(errc::duplicate_label, "variable '" + ring.vars[i] + "' appears twice");
  for (const auto& g : ring.generators) {
    if (g.nvars() != static_cast<int>(ring.vars.size()))
      fail(errc::bad_format, "generator over a different variable count");
    if (g.is_zero()) fail(errc::zero_generator, "ideal generators must be nonzero");
    if (!g.homogeneous())
      fail(errc::non_homogeneous_ideal,
           "generator '" + g.to_string(ring.vars) + "' is not homogeneous");
  }
}

IdealPresentation make_presentation(std::vector<std::string> vars,
                                    const std::vector<std::string>& generator_text,
                                    Field field) {
  IdealPresentation ring;
  ring.vars = std::move(vars);
  ring.field = field;
  for (const auto& text : generator_text) {
    Polynomial g = parse_polynomial(text, ring.vars);
    Polynomial reduced(g.nvars());
    for (const auto& [e, c] : g.terms()) reduced.add_term(e, c, field);
    ring.generators.push_back(std::move(reduced));
  }
  return ring;
}

}  // namespace macposets
