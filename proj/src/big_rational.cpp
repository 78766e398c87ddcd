#include "hzeta/big_rational.hpp"

#include <cmath>

#include "hzeta/error.hpp"

namespace hzeta {

BigRational::BigRational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error(ErrorKind::domain, "BigRational: zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

BigRational BigRational::parse(const std::string& text) {
  mpq_class q;
  if (q.set_str(text, 10) != 0 || q.get_den() == 0) {
    throw Error(ErrorKind::domain, "BigRational: cannot parse '" + text + "'");
  }
  q.canonicalize();
  return BigRational(q);
}

BigRational& BigRational::operator/=(const BigRational& o) {
  if (o.isZero()) throw Error(ErrorKind::domain, "BigRational: division by zero");
  q_ /= o.q_;
  return *this;
}

double BigRational::toDouble() const { return static_cast<double>(toLongDouble()); }

long double BigRational::toLongDouble() const {
  if (isZero()) return 0.0L;
  long num_exp = 0;
  long den_exp = 0;
  const double num_m = mpz_get_d_2exp(&num_exp, q_.get_num_mpz_t());
  const double den_m = mpz_get_d_2exp(&den_exp, q_.get_den_mpz_t());
  return std::ldexp(static_cast<long double>(num_m) / den_m, static_cast<int>(num_exp - den_exp));
}

std::string BigRational::str() const { return q_.get_str(10); }

BigInt factorial(unsigned n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt binomial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

BigRational pow(const BigRational& x, unsigned e) {
  BigInt num;
  BigInt den;
  mpz_pow_ui(num.get_mpz_t(), x.numerator().get_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), x.denominator().get_mpz_t(), e);
  return BigRational(num, den);
}

}  // namespace hzeta
