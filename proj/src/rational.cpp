#include "macposets/rational.hpp"

#include <algorithm>
#include <compare>
#include <stdexcept>

namespace macposets {

BigInt::BigInt(long long v) {
  if (v == 0) return;
  sign_ = v > 0 ? 1 : -1;
  unsigned long long u = v > 0 ? static_cast<unsigned long long>(v)
                               : ~static_cast<unsigned long long>(v) + 1;
  while (u) {
    mag_.push_back(static_cast<uint32_t>(u & 0xffffffffu));
    u >>= 32;
  }
}

void BigInt::trim() {
  while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
  if (mag_.empty()) sign_ = 0;
}

int BigInt::cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

std::vector<uint32_t> BigInt::add_mag(const std::vector<uint32_t>& a,
                                      const std::vector<uint32_t>& b) {
  const auto& big = a.size() >= b.size() ? a : b;
  const auto& small = a.size() >= b.size() ? b : a;
  std::vector<uint32_t> out(big.size() + 1, 0);
  uint64_t carry = 0;
  for (size_t i = 0; i < big.size(); ++i) {
    uint64_t s = carry + big[i] + (i < small.size() ? small[i] : 0);
    out[i] = static_cast<uint32_t>(s);
    carry = s >> 32;
  }
  out[big.size()] = static_cast<uint32_t>(carry);
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

std::vector<uint32_t> BigInt::sub_mag(const std::vector<uint32_t>& a,
                                      const std::vector<uint32_t>& b) {
  std::vector<uint32_t> out(a.size(), 0);
  int64_t borrow = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    int64_t d = static_cast<int64_t>(a[i]) - static_cast<int64_t>(i < b.size() ? b[i] : 0) - borrow;
    if (d < 0) {
      d += (int64_t{1} << 32);
      borrow = 1;
    } else {
      borrow = 0;
    }
    out[i] = static_cast<uint32_t>(d);
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

BigInt BigInt::operator-() const {
  BigInt r = *this;
  r.sign_ = -r.sign_;
  return r;
}

BigInt BigInt::abs() const {
  BigInt r = *this;
  if (r.sign_ < 0) r.sign_ = 1;
  return r;
}

BigInt operator+(const BigInt& a, const BigInt& b) {
  if (a.sign_ == 0) return b;
  if (b.sign_ == 0) return a;
  BigInt r;
  if (a.sign_ == b.sign_) {
    r.mag_ = BigInt::add_mag(a.mag_, b.mag_);
    r.sign_ = a.sign_;
  } else {
    int c = BigInt::cmp_mag(a.mag_, b.mag_);
    if (c == 0) return BigInt{};
    if (c > 0) {
      r.mag_ = BigInt::sub_mag(a.mag_, b.mag_);
      r.sign_ = a.sign_;
    } else {
      r.mag_ = BigInt::sub_mag(b.mag_, a.mag_);
      r.sign_ = b.sign_;
    }
  }
  r.trim();
  return r;
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

BigInt operator*(const BigInt& a, const BigInt& b) {
  if (a.sign_ == 0 || b.sign_ == 0) return BigInt{};
  BigInt r;
  r.mag_.assign(a.mag_.size() + b.mag_.size(), 0);
  for (size_t i = 0; i < a.mag_.size(); ++i) {
    uint64_t carry = 0;
    for (size_t j = 0; j < b.mag_.size(); ++j) {
      uint64_t cur = r.mag_[i + j] + static_cast<uint64_t>(a.mag_[i]) * b.mag_[j] + carry;
      r.mag_[i + j] = static_cast<uint32_t>(cur);
      carry = cur >> 32;
    }
    size_t k = i + b.mag_.size();
    while (carry) {
      uint64_t cur = r.mag_[k] + carry;
      r.mag_[k] = static_cast<uint32_t>(cur);
      carry = cur >> 32;
      ++k;
    }
  }
  r.sign_ = a.sign_ * b.sign_;
  r.trim();
  return r;
}

namespace {

int bit_length(const std::vector<uint32_t>& m) {
  if (m.empty()) return 0;
  int bits = static_cast<int>((m.size() - 1) * 32);
  uint32_t top = m.back();
  while (top) {
    ++bits;
    top >>= 1;
  }
  return bits;
}

bool get_bit(const std::vector<uint32_t>& m, int i) {
  return (m[i >> 5] >> (i & 31)) & 1;
}

// r = r*2 + bit, in place
void shl1_add(std::vector<uint32_t>& m, bool bit) {
  uint32_t carry = bit ? 1u : 0u;
  for (auto& w : m) {
    uint32_t next = w >> 31;
    w = (w << 1) | carry;
    carry = next;
  }
  if (carry) m.push_back(carry);
}

}  // namespace

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
  if (b.sign_ == 0) throw std::domain_error("BigInt division by zero");
  if (a.sign_ == 0) {
    q = BigInt{};
    r = BigInt{};
    return;
  }
  int c = cmp_mag(a.mag_, b.mag_);
  if (c < 0) {
    q = BigInt{};
    r = a;
    return;
  }
  // Shift-subtract long division on magnitudes.
  int n = bit_length(a.mag_);
  std::vector<uint32_t> rem;
  std::vector<uint32_t> quo((a.mag_.size() * 32 + 31) / 32, 0);
  for (int i = n - 1; i >= 0; --i) {
    shl1_add(rem, get_bit(a.mag_, i));
    if (cmp_mag(rem, b.mag_) >= 0) {
      rem = sub_mag(rem, b.mag_);
      quo[i >> 5] |= (1u << (i & 31));
    }
  }
  q.mag_ = std::move(quo);
  q.sign_ = a.sign_ * b.sign_;
  q.trim();
  r.mag_ = std::move(rem);
  r.sign_ = r.mag_.empty() ? 0 : a.sign_;
  r.trim();
}

BigInt operator/(const BigInt& a, const BigInt& b) {
  BigInt q, r;
  BigInt::divmod(a, b, q, r);
  return q;
}

BigInt operator%(const BigInt& a, const BigInt& b) {
  BigInt q, r;
  BigInt::divmod(a, b, q, r);
  return r;
}

namespace {

int trailing_zero_bits(const std::vector<uint32_t>& m) {
  int tz = 0;
  for (uint32_t w : m) {
    if (w == 0) {
      tz += 32;
      continue;
    }
    while (!(w & 1)) {
      ++tz;
      w >>= 1;
    }
    break;
  }
  return tz;
}

void shr_bits(std::vector<uint32_t>& m, int k) {
  int words = k >> 5, bits = k & 31;
  if (words) m.erase(m.begin(), m.begin() + std::min<size_t>(words, m.size()));
  if (bits && !m.empty()) {
    for (size_t i = 0; i + 1 < m.size(); ++i)
      m[i] = (m[i] >> bits) | (m[i + 1] << (32 - bits));
    m.back() >>= bits;
  }
  while (!m.empty() && m.back() == 0) m.pop_back();
}

void shl_bits(std::vector<uint32_t>& m, int k) {
  if (m.empty()) return;
  int words = k >> 5, bits = k & 31;
  if (bits) {
    uint32_t carry = 0;
    for (auto& w : m) {
      uint32_t next = w >> (32 - bits);
      w = (w << bits) | carry;
      carry = next;
    }
    if (carry) m.push_back(carry);
  }
  if (words) m.insert(m.begin(), static_cast<size_t>(words), 0u);
}

}  // namespace

BigInt BigInt::gcd(const BigInt& a, const BigInt& b) {
  // Binary gcd: magnitudes only, no division.
  std::vector<uint32_t> u = a.mag_, v = b.mag_;
  if (u.empty()) return b.abs();
  if (v.empty()) return a.abs();
  int shift = std::min(trailing_zero_bits(u), trailing_zero_bits(v));
  shr_bits(u, trailing_zero_bits(u));
  while (!v.empty()) {
    shr_bits(v, trailing_zero_bits(v));
    if (cmp_mag(u, v) > 0) std::swap(u, v);
    v = sub_mag(v, u);
  }
  shl_bits(u, shift);
  BigInt g;
  g.mag_ = std::move(u);
  g.sign_ = 1;
  g.trim();
  return g;
}

bool operator==(const BigInt& a, const BigInt& b) {
  return a.sign_ == b.sign_ && a.mag_ == b.mag_;
}

std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
  if (a.sign_ != b.sign_) return a.sign_ <=> b.sign_;
  int c = BigInt::cmp_mag(a.mag_, b.mag_) * (a.sign_ < 0 ? -1 : 1);
  return c <=> 0;
}

std::string BigInt::to_string() const {
  if (sign_ == 0) return "0";
  std::string digits;
  const BigInt base(1000000000LL);
  BigInt cur = abs();
  while (!cur.is_zero()) {
    BigInt q, r;
    divmod(cur, base, q, r);
    uint64_t chunk = r.mag_.empty() ? 0 : r.mag_[0];
    if (r.mag_.size() > 1) chunk |= static_cast<uint64_t>(r.mag_[1]) << 32;
    for (int i = 0; i < 9; ++i) {
      digits.push_back(static_cast<char>('0' + chunk % 10));
      chunk /= 10;
    }
    cur = q;
  }
  while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
  if (sign_ < 0) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

BigInt BigInt::from_string(const std::string& s) {
  size_t i = 0;
  int sign = 1;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
    if (s[i] == '-') sign = -1;
    ++i;
  }
  if (i == s.size()) throw std::invalid_argument("BigInt: empty digits");
  BigInt out;
  const BigInt ten(10);
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("BigInt: bad digit");
    out = out * ten + BigInt(s[i] - '0');
  }
  if (sign < 0) out = -out;
  return out;
}

long long BigInt::to_ll() const {
  long long v = 0;
  for (size_t i = mag_.size(); i-- > 0;) v = (v << 32) | mag_[i];
  return sign_ < 0 ? -v : v;
}

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
  normalize();
}

void Rational::normalize() {
  if (num_.is_zero()) {
    den_ = BigInt(1);
    return;
  }
  if (den_.sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  BigInt g = BigInt::gcd(num_, den_);
  if (!(g == BigInt(1))) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
}

bool Rational::is_one() const { return num_ == BigInt(1) && den_ == BigInt(1); }
bool Rational::is_integer() const { return den_ == BigInt(1); }

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::domain_error("Rational division by zero");
  return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

bool operator==(const Rational& a, const Rational& b) {
  return a.num_ == b.num_ && a.den_ == b.den_;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  return (a.num_ * b.den_) <=> (b.num_ * a.den_);
}

std::string Rational::to_string() const {
  if (is_integer()) return num_.to_string();
  return num_.to_string() + "/" + den_.to_string();
}

}  // namespace macposets
