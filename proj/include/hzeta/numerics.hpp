#pragma once

#include <complex>
#include <functional>
#include <span>

#include "hzeta/precision.hpp"

namespace hzeta {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264;
inline constexpr double kEulerGamma = 0.57721566490153286060651;

/// T_n(x) = sum_{k=0}^{n} x^k / k!, by Horner recurrence. Requires n <= 64.
Complex taylorPoly(Complex x, int n);

/// e^x - T_{n-1}(x). Uses the tail series sum_{k>=n} x^k/k! when |x| < n/2,
/// direct subtraction otherwise.
Complex expRemainder(Complex x, int n, const PrecisionContext& ctx = {});

/// (e^x - T_{n-1}(x)) e^{-x} = 1 - T_{n-1}(x) e^{-x}; finite for any real x >= 0.
Complex scaledExpRemainder(Complex x, int n, const PrecisionContext& ctx = {});

/// Gamma function (Lanczos, reflection for Re z < 1/2). Throws at poles.
Complex complexGamma(Complex z);

/// 1/Gamma(z); entire, zero at the nonpositive integers.
Complex reciprocalGamma(Complex z);

/// psi(n) = -gamma + H_{n-1}.
double digammaInt(int n);

/// Rising factorial (s)_k as a plain product.
Complex pochhammer(Complex s, int k);

struct QuadResult {
  Complex value;
  double abs_error = 0.0;
  bool converged = true;
  long evaluations = 0;
};

using Integrand = std::function<Complex(double)>;

/// Default panel breakpoints for integrals over (0, inf).
inline constexpr double kDefaultSplits[] = {1.0, 5.0, 20.0, 80.0};

/// Integrates f over [a, b]. Double-exponential rule with step halving;
/// panels that fail to converge are bisected.
QuadResult integrateFinite(const Integrand& f, double a, double b,
                           const PrecisionContext& ctx = {});

/// Integrates f over (0, inf): finite panels between the splits, then an
/// exponential-decay tail rule beyond the last split. f may carry an
/// integrable algebraic singularity at 0.
QuadResult integrateSemiInfinite(const Integrand& f,
                                 std::span<const double> splits = kDefaultSplits,
                                 const PrecisionContext& ctx = {});

/// Integrates f over (a, inf) with panels between a and each split above it,
/// then the exponential-decay tail rule.
QuadResult integrateToInfinity(const Integrand& f, double a,
                               std::span<const double> splits = kDefaultSplits,
                               const PrecisionContext& ctx = {});

/// Hurwitz zeta in the n >= 1 convention: sum_{n>=1} (n + a)^{-sigma}.
/// Note this drops the n = 0 term of the usual definition.
double hurwitzZeta(double sigma, double a, const PrecisionContext& ctx = {});

}  // namespace hzeta
