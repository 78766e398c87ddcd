#include "hzeta/numerics.hpp"

#include <array>
#include <cmath>
#include <limits>

#include "hzeta/error.hpp"

namespace hzeta {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::domain: return "domain";
    case ErrorKind::overflow: return "overflow";
    case ErrorKind::pole: return "pole";
    case ErrorKind::non_convergence: return "non-convergence";
    case ErrorKind::nan_integrand: return "nan-integrand";
    case ErrorKind::slow_convergence: return "slow-convergence";
    case ErrorKind::bracket_failure: return "bracket-failure";
    case ErrorKind::no_interior_sign_change: return "no-interior-sign-change";
    case ErrorKind::converged_to_trivial_root: return "converged-to-trivial-root";
    case ErrorKind::insufficient_roots: return "insufficient-roots";
    case ErrorKind::ordering_violation: return "ordering-violation";
    case ErrorKind::incomplete_enumeration: return "incomplete-enumeration";
    case ErrorKind::out_of_range: return "out-of-range";
    case ErrorKind::degree_overflow: return "degree-overflow";
    case ErrorKind::cross_check_mismatch: return "cross-check-mismatch";
  }
  return "unknown";
}

void PrecisionContext::validate() const {
  if (!(target_abs_tol > 0) || !(quad_rel_tol > 0) || !(root_tol > 0)) {
    throw Error(ErrorKind::domain, "tolerances must be strictly positive");
  }
  if (max_series_terms < 16) {
    throw Error(ErrorKind::domain, "max_series_terms must be at least 16");
  }
  if (quad_max_refinements < 1) {
    throw Error(ErrorKind::domain, "quad_max_refinements must be positive");
  }
}

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
// log(DBL_MAX)
constexpr double kMaxExpArg = 709.78;

bool isNonPositiveInteger(Complex z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

// sin(pi z) with the integer part of Re z removed first so that values near
// the integers keep their relative accuracy.
Complex sinPi(Complex z) {
  const double n = std::round(z.real());
  const Complex w(z.real() - n, z.imag());
  const Complex s = std::sin(kPi * w);
  return std::fmod(std::abs(n), 2.0) == 1.0 ? -s : s;
}

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

// Gamma(z) for Re z >= 1/2.
Complex lanczosGamma(Complex z) {
  z -= 1.0;
  Complex a = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) {
    a += kLanczos[i] / (z + static_cast<double>(i));
  }
  const Complex t = z + kLanczosG + 0.5;
  return std::sqrt(2.0 * kPi) * std::exp((z + 0.5) * std::log(t) - t) * a;
}

}  // namespace

Complex taylorPoly(Complex x, int n) {
  if (n < 0 || n > 64) {
    throw Error(ErrorKind::domain, "taylorPoly degree must lie in [0, 64]");
  }
  Complex acc = 1.0;
  for (int k = n; k >= 1; --k) {
    acc = 1.0 + acc * x / static_cast<double>(k);
  }
  if (!std::isfinite(acc.real()) || !std::isfinite(acc.imag())) {
    throw Error(ErrorKind::overflow, "taylorPoly overflowed");
  }
  return acc;
}

Complex expRemainder(Complex x, int n, const PrecisionContext& ctx) {
  if (n < 1) {
    throw Error(ErrorKind::domain, "expRemainder requires n >= 1");
  }
  if (x.real() > kMaxExpArg) {
    throw Error(ErrorKind::overflow, "expRemainder: Re(x) exceeds the exponent range");
  }
  if (std::abs(x) < 0.5 * n) {
    // Tail series; |x|/k < 1/2 for every k >= n so the terms shrink geometrically.
    const double stop = std::min(ctx.target_abs_tol, 0.5 * kEps);
    Complex term = 1.0;
    for (int k = 1; k <= n; ++k) term *= x / static_cast<double>(k);
    Complex sum = 0.0;
    for (int k = n + 1; k < n + 200; ++k) {
      sum += term;
      term *= x / static_cast<double>(k);
      if (std::abs(term) <= stop * std::abs(sum)) break;
    }
    return sum;
  }
  return std::exp(x) - taylorPoly(x, n - 1);
}

Complex scaledExpRemainder(Complex x, int n, const PrecisionContext& ctx) {
  if (std::abs(x) < 0.5 * n) {
    return expRemainder(x, n, ctx) * std::exp(-x);
  }
  if (-x.real() > kMaxExpArg) {
    throw Error(ErrorKind::overflow, "scaledExpRemainder: Re(x) too negative");
  }
  return 1.0 - taylorPoly(x, n - 1) * std::exp(-x);
}

Complex complexGamma(Complex z) {
  if (isNonPositiveInteger(z)) {
    throw Error(ErrorKind::pole, "complexGamma: pole at a nonpositive integer");
  }
  if (z.real() < 0.5) {
    return kPi / (sinPi(z) * lanczosGamma(1.0 - z));
  }
  return lanczosGamma(z);
}

Complex reciprocalGamma(Complex z) {
  if (isNonPositiveInteger(z)) return 0.0;
  if (z.real() < 0.5) {
    return sinPi(z) * lanczosGamma(1.0 - z) / kPi;
  }
  return 1.0 / lanczosGamma(z);
}

double digammaInt(int n) {
  if (n < 1) throw Error(ErrorKind::domain, "digammaInt requires n >= 1");
  double h = 0.0;
  for (int j = n - 1; j >= 1; --j) h += 1.0 / j;
  return h - kEulerGamma;
}

Complex pochhammer(Complex s, int k) {
  if (k < 0) throw Error(ErrorKind::domain, "pochhammer requires k >= 0");
  Complex p = 1.0;
  for (int j = 0; j < k; ++j) p *= s + static_cast<double>(j);
  return p;
}

double hurwitzZeta(double sigma, double a, const PrecisionContext& ctx) {
  if (!(sigma > 1.0)) {
    throw Error(ErrorKind::domain, "hurwitzZeta diverges for sigma <= 1");
  }
  if (!(a > -1.0)) {
    throw Error(ErrorKind::domain, "hurwitzZeta requires a > -1");
  }
  // B_{2j} / (2j)!
  constexpr std::array<double, 8> kB2j = {
      1.0 / 6.0 / 2.0,           -1.0 / 30.0 / 24.0,
      1.0 / 42.0 / 720.0,        -1.0 / 30.0 / 40320.0,
      5.0 / 66.0 / 3628800.0,    -691.0 / 2730.0 / 479001600.0,
      7.0 / 6.0 / 87178291200.0, -3617.0 / 510.0 / 20922789888000.0};

  for (int m = 16;; m *= 2) {
    double head = 0.0;
    for (int n = m - 1; n >= 1; --n) head += std::pow(n + a, -sigma);
    // Euler-Maclaurin tail for sum_{n>=m}.
    const double b = m + a;
    double tail = std::pow(b, 1.0 - sigma) / (sigma - 1.0) + 0.5 * std::pow(b, -sigma);
    // f^{(2j-1)}(b) = (-sigma)(-sigma-1)...(-sigma-2j+2) b^{-sigma-2j+1}
    double deriv = -sigma * std::pow(b, -sigma - 1.0);
    double last = 0.0;
    for (std::size_t j = 0; j < kB2j.size(); ++j) {
      last = -kB2j[j] * deriv;
      tail += last;
      const double k = 2.0 * static_cast<double>(j) + 1.0;
      deriv *= (-sigma - k) * (-sigma - k - 1.0) / (b * b);
    }
    if (std::abs(last) <= ctx.target_abs_tol || m > (1 << 20)) {
      return head + tail;
    }
  }
}

}  // namespace hzeta
