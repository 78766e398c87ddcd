#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hzeta/big_rational.hpp"
#include "hzeta/numerics.hpp"
#include "hzeta/precision.hpp"
#include "hzeta/roots.hpp"

namespace hzeta {

enum class Method { right_series, right_integral, strip, left_rootsum, exact_negative_integer };

/// Dispatch band of Re(s) used by evaluate().
enum class Region { right, near_pole, strip, left, negative_integer };

std::string_view to_string(Method method);
std::string_view to_string(Region region);

struct EvalResult {
  Complex value;
  double abs_error_estimate = 0.0;
  Method method = Method::right_series;
  Region region = Region::right;
};

// --- Dirichlet-series coefficients -----------------------------------------

/// Coefficients a_k(N, n) of T_{N-1}(x)^{n-1}.
struct MuCoefficient {
  int order = 0;
  int n = 0;
  std::vector<BigRational> poly_coeffs;
};

/// Exact expansion of T_{N-1}(x)^{n-1}; throws degree_overflow past degree 1e4.
MuCoefficient polyPowerCoeffs(int order, int n);

/// mu_N(n, s) = sum_k a_k(N, n) (s + N - 1)_k / n^k.
Complex muCoefficient(int order, int n, Complex s);
BigRational muCoefficientExact(int order, int n, const BigRational& s);

// --- evaluation routes -----------------------------------------------------

/// sum_{n<=M} mu_N(n, s) / n^{s+N-1} plus the geometric remainder
/// (1/Gamma(s+N-1)) int x^{s+N-2} u^M / (e^x - T_{N-1}(x)) dx, u = T_{N-1}(x) e^{-x}.
/// Requires Re s > 1; below Re s = 1.2 defers to zetaIntegral.
EvalResult zetaRightSeries(int order, Complex s, const PrecisionContext& ctx = {});

/// (1/Gamma(s+N-1)) int_0^inf x^{s+N-2} / (e^x - T_{N-1}(x)) dx for Re s > 1.
EvalResult zetaIntegral(int order, Complex s, const PrecisionContext& ctx = {});

/// Continuation for -1 < Re s <= 1 away from the poles 0 and 1: the small-x
/// singular part of the integrand is integrated termwise from the Bernoulli
/// expansion, the rest by quadrature on (1, inf).
EvalResult zetaStrip(int order, Complex s, const PrecisionContext& ctx = {});

/// Root-sum representation for Re s < 0,
///   2 (-1)^{N-1} (N-1)! Gamma(2-N-s) sum_k r_k^{s-1} cos[(s-1)(pi - theta_k)].
/// The tail beyond the table is integrated along the continuous root curve.
/// The table is extended (up to 4096 roots) until the error estimate meets
/// max(target_abs_tol, quad_rel_tol |value|).
EvalResult zetaLeftSeries(int order, Complex s, const RootTable& roots,
                          const PrecisionContext& ctx = {});
EvalResult zetaLeftSeries(int order, Complex s, const PrecisionContext& ctx = {});

// --- exact values ----------------------------------------------------------

/// zeta_N(n) = (-1)^{-n-N+1} C(1-n, N)^{-1} B_{N,1-n} for integers n < 2 - N.
BigRational zetaNegativeInt(int order, int n);

/// Residue (2-n) C(N, 2-n) B_{N,1-n} at the pole s = n, 2 - N <= n <= 1.
BigRational residueAt(int order, int n);

/// lim_{s->1} [zeta_N(s) - N/(s-1)] = log N! - N psi(N).
double limitAtOne(int order);

/// Re zeta_N(1+h) - N/h.
double limitAtOneProbe(int order, double h, const PrecisionContext& ctx = {});

/// I_N(s) = zeta_N(s) / Gamma(2-N-s); exact at integers.
Complex contourFunction(int order, Complex s, const PrecisionContext& ctx = {});

// --- dispatcher ------------------------------------------------------------

enum class MethodChoice { automatic, series, integral, strip, leftsum };

struct EvalOptions {
  MethodChoice method = MethodChoice::automatic;
  /// Skip the 1e-6 pole-proximity guard (exact poles still fail).
  bool residue_mode = false;
  /// Recompute on an overlapping route and fail with cross_check_mismatch on disagreement.
  bool cross_check = false;
};

/// Distance below which s counts as sitting on a pole.
inline constexpr double kPoleRadius = 1e-6;

EvalResult evaluate(int order, Complex s, const PrecisionContext& ctx = {},
                    const EvalOptions& options = {});

/// {order, s:{re,im}, value:{re,im}, abs_err, method, region}
std::string toJson(int order, Complex s, const EvalResult& result);

}  // namespace hzeta
