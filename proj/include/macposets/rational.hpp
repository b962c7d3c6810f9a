#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace macposets {

// Arbitrary-precision signed integer, little-endian 32-bit limbs.
// Coset arithmetic has to be exact, and Buchberger reductions over the
// rationals routinely outgrow 64 bits, so no fixed-width shortcuts.
class BigInt {
 public:
  BigInt() = default;
  BigInt(long long v);

  bool is_zero() const { return sign_ == 0; }
  int sign() const { return sign_; }

  BigInt operator-() const;
  BigInt abs() const;

  friend BigInt operator+(const BigInt& a, const BigInt& b);
  friend BigInt operator-(const BigInt& a, const BigInt& b);
  friend BigInt operator*(const BigInt& a, const BigInt& b);

  // Truncated toward zero; remainder carries the dividend's sign.
  static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);
  friend BigInt operator/(const BigInt& a, const BigInt& b);
  friend BigInt operator%(const BigInt& a, const BigInt& b);

  static BigInt gcd(const BigInt& a, const BigInt& b);  // non-negative

  friend bool operator==(const BigInt& a, const BigInt& b);
  friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b);

  std::string to_string() const;
  static BigInt from_string(const std::string& s);  // optional sign + digits

  // Value as long long; callers must know it fits (used for small moduli).
  long long to_ll() const;

 private:
  int sign_ = 0;                // -1, 0, +1
  std::vector<uint32_t> mag_;   // no trailing zero limbs; empty iff sign_ == 0

  void trim();
  static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
  static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b);
  // Requires |a| >= |b|.
  static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b);
  friend class Rational;
};

// Exact rational with positive denominator in lowest terms.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long v) : num_(v), den_(1) {}
  Rational(BigInt num, BigInt den);  // normalizes; den must be nonzero

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  bool is_integer() const;
  int sign() const { return num_.sign(); }

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  std::string to_string() const;  // "p" or "p/q"

 private:
  BigInt num_, den_;
  void normalize();
};

}  // namespace macposets
