#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>

namespace hzeta {

using BigInt = mpz_class;

/// Exact rational with arbitrary-size numerator and denominator.
/// Always held in lowest terms with a positive denominator.
class BigRational {
 public:
  BigRational() = default;
  BigRational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  explicit BigRational(const BigInt& value) : q_(value) {}
  BigRational(const BigInt& num, const BigInt& den);
  explicit BigRational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  /// Parses "p" or "p/q".
  static BigRational parse(const std::string& text);

  BigInt numerator() const { return q_.get_num(); }
  BigInt denominator() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  double toDouble() const;
  /// Conversion that survives magnitudes outside the double exponent range.
  long double toLongDouble() const;
  /// "p/q", or "p" when the denominator is 1.
  std::string str() const;

  int sign() const { return sgn(q_); }
  bool isZero() const { return sign() == 0; }
  bool isInteger() const { return q_.get_den() == 1; }
  BigRational abs() const { return BigRational(::abs(q_)); }

  BigRational& operator+=(const BigRational& o) { q_ += o.q_; return *this; }
  BigRational& operator-=(const BigRational& o) { q_ -= o.q_; return *this; }
  BigRational& operator*=(const BigRational& o) { q_ *= o.q_; return *this; }
  BigRational& operator/=(const BigRational& o);

  friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
  friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
  friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
  friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }
  friend BigRational operator-(const BigRational& a) { return BigRational(mpq_class(-a.q_)); }

  friend bool operator==(const BigRational& a, const BigRational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class q_;
};

/// n! as an exact integer.
BigInt factorial(unsigned n);
/// Binomial coefficient C(n, k); zero when k > n.
BigInt binomial(unsigned long n, unsigned long k);
/// x^e for exact rationals, e >= 0.
BigRational pow(const BigRational& x, unsigned e);

}  // namespace hzeta
