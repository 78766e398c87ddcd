#include "hzeta/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include <json.hpp>

#include "hzeta/bernoulli.hpp"
#include "hzeta/error.hpp"

namespace hzeta {

namespace {

using LComplex = std::complex<long double>;

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kSeriesSwitch = 1.2;
constexpr double kLiteralIntegralSigma = 2.5;
constexpr int kBernoulliTerms = 60;
constexpr int kInitialLeftRoots = 64;
constexpr int kMaxLeftRoots = 4096;

void requireOrder(int order) {
  if (order < 1 || order > 64) throw Error(ErrorKind::domain, "order N must lie in [1, 64]");
}

double factorialDouble(int n) { return std::tgamma(n + 1.0); }

bool isRealInteger(Complex s, long& n) {
  if (s.imag() != 0.0 || std::round(s.real()) != s.real()) return false;
  n = static_cast<long>(s.real());
  return true;
}

// (e^x - T_{N-1}(x)) / x^N = sum_{k>=0} x^k / (N+k)! for 0 < x < 1.
double reducedRemainder(int order, double x) {
  double term = 1.0 / std::tgamma(order + 1.0);
  double sum = 0.0;
  for (int k = 0; k < 200; ++k) {
    sum += term;
    term *= x / (order + k + 1);
    if (term <= 0.25 * kEps * sum) break;
  }
  return sum;
}

// x^{s+N-2} / (e^x - T_{N-1}(x)); x^N is cancelled analytically below 1 and
// e^{-x} is folded into the power above it.
Complex kernel(int order, Complex s, double x, const PrecisionContext& ctx) {
  const double logx = std::log(x);
  if (x < 1.0) return std::exp((s - 2.0) * logx) / reducedRemainder(order, x);
  const Complex power = s + static_cast<double>(order - 2);
  return std::exp(power * logx - x) / scaledExpRemainder(Complex(x, 0.0), order, ctx);
}

// log u with u = T_{N-1}(x) e^{-x}, the geometric ratio of the Dirichlet expansion.
double logRatio(int order, double x, const PrecisionContext& ctx) {
  if (x < 1.0) return std::log1p(-scaledExpRemainder(Complex(x, 0.0), order, ctx).real());
  return std::log(taylorPoly(Complex(x, 0.0), order - 1).real()) - x;
}

struct Partial {
  Complex value;
  double abs_error = 0.0;
};

// Gamma(s+N-1) zeta_N(s) = N! sum_m B_{N,m}/(m! (s+m-1)) + int_1^inf x^{s+N-2}/(e^x - T) dx,
// returned already divided by Gamma(s+N-1).
Partial continuation(int order, Complex s, const PrecisionContext& ctx) {
  const BernoulliTable table = generalizedBernoulli(order, kBernoulliTerms);
  const double nfact = factorialDouble(order);
  const Complex rg = reciprocalGamma(s + static_cast<double>(order - 1));

  Complex small = 0.0;
  Complex limit_terms = 0.0;
  double magnitude = 0.0;
  double last = 0.0;
  double mfact = 1.0;
  for (int m = 0; m <= kBernoulliTerms; ++m) {
    if (m > 0) mfact *= m;
    const double b = nfact * table[m].toDouble() / mfact;
    const Complex denom = s + static_cast<double>(m - 1);
    if (denom == Complex(0.0, 0.0)) {
      if (m < order) throw Error(ErrorKind::pole, "continuation evaluated at a pole");
      // 1/Gamma has a simple zero here that cancels the pole of this term
      const int j = m - order;
      limit_terms += (j % 2 == 0 ? 1.0 : -1.0) * factorialDouble(j) * b;
      continue;
    }
    const Complex term = b / denom;
    small += term;
    magnitude += std::abs(term);
    if (b != 0.0) last = std::abs(term);
  }

  const QuadResult tail = integrateToInfinity(
      [&](double x) { return kernel(order, s, x, ctx); }, 1.0, kDefaultSplits, ctx);
  if (!tail.converged) {
    throw Error(ErrorKind::non_convergence, "continuation quadrature did not converge");
  }
  Partial p;
  p.value = (small + tail.value) * rg + limit_terms;
  p.abs_error = (tail.abs_error + 4.0 * last + 8.0 * kEps * (magnitude + std::abs(tail.value))) *
                std::abs(rg);
  return p;
}

Partial literalIntegral(int order, Complex s, const PrecisionContext& ctx) {
  const QuadResult q =
      integrateSemiInfinite([&](double x) { return kernel(order, s, x, ctx); }, kDefaultSplits, ctx);
  if (!q.converged) throw Error(ErrorKind::non_convergence, "integral quadrature did not converge");
  const Complex rg = reciprocalGamma(s + static_cast<double>(order - 1));
  return {q.value * rg, (q.abs_error + 8.0 * kEps * std::abs(q.value)) * std::abs(rg)};
}

Region regionOf(Complex s) {
  const double sigma = s.real();
  if (sigma > kSeriesSwitch) return Region::right;
  if (sigma > 1.0) return Region::near_pole;
  if (sigma > -1.0) return Region::strip;
  return Region::left;
}

// Laurent coefficients of rho(z) = z^{N-1} / ((N-1)! T_{N-1}(z)) in powers of 1/z.
std::vector<Complex> rhoLaurent(int order, int count) {
  std::vector<double> d(order);
  d[0] = 1.0;
  for (int j = 1; j < order; ++j) d[j] = d[j - 1] * (order - j);
  std::vector<Complex> c(count, 0.0);
  c[0] = 1.0;
  for (int j = 1; j < count; ++j) {
    Complex acc = 0.0;
    for (int i = 1; i <= std::min(j, order - 1); ++i) acc -= d[i] * c[j - i];
    c[j] = acc;
  }
  return c;
}

Complex rho(int order, Complex z) {
  if (order == 1) return 1.0;
  return std::pow(z, order - 1) / (factorialDouble(order - 1) * taylorPoly(z, order - 1));
}

Partial leftSum(int order, Complex s, const RootTable& table) {
  const Complex prefactor = 2.0 * (order % 2 == 1 ? 1.0 : -1.0) * factorialDouble(order - 1) *
                            complexGamma(Complex(2.0 - order, 0.0) - s);
  const Complex sm1 = s - 1.0;

  Complex sum = 0.0;
  double magnitude = 0.0;
  for (const Root& root : table.roots) {
    const Complex angle = sm1 * (kPi - root.theta);
    const double size = std::exp(sm1.real() * std::log(root.r));
    sum += size * std::exp(Complex(0.0, sm1.imag() * std::log(root.r))) * std::cos(angle);
    // |cos| can sit near zero while its rounding error does not
    magnitude += size * std::cosh(angle.imag()) * (1.0 + std::abs(angle));
  }

  // Tail: midpoint-rule integral of the summand along the root curve from q0 = q_K + 1/2.
  const Root& last = table.roots.back();
  const double q0 = last.branch + 0.5;
  const Complex z0 = branchPoint(order, q0, last.z() + Complex(0.0, kPi));
  const Complex logw = std::log(-z0);
  const std::vector<Complex> c = rhoLaurent(order, 40);
  const Complex two_pi_i(0.0, 2.0 * kPi);

  auto curveIntegral = [&](Complex t) {
    Complex acc = 0.0;
    for (std::size_t j = 0; j < c.size(); ++j) {
      const Complex term =
          c[j] * std::exp((t - static_cast<double>(j)) * logw) / (t - static_cast<double>(j));
      acc += (j % 2 == 0 ? 1.0 : -1.0) * term;
      if (j > 2 && std::abs(term) < 1e-18 * std::abs(acc)) break;
    }
    return acc / two_pi_i;
  };
  auto slope = [&](Complex t) {
    return -(t - 1.0) * std::exp((t - 2.0) * logw) * two_pi_i / rho(order, z0);
  };
  const Complex conj_s = std::conj(s);
  const Complex integral = 0.5 * (curveIntegral(s) + std::conj(curveIntegral(conj_s)));
  const Complex correction = 0.5 * (slope(s) + std::conj(slope(conj_s))) / 24.0;

  const double next_term =
      10.0 * std::abs(correction) * 0.029 * std::abs((s - 2.0) * (s - 3.0)) / (q0 * q0);
  Partial p;
  p.value = prefactor * (sum + integral + correction);
  p.abs_error = std::abs(prefactor) *
                (next_term + 8.0 * kEps * (magnitude + std::abs(integral)) * std::sqrt(table.count()));
  return p;
}

EvalResult finish(Partial p, Method method, Complex s) {
  if (!std::isfinite(p.value.real()) || !std::isfinite(p.value.imag())) {
    throw Error(ErrorKind::overflow, "evaluation produced a non-finite value");
  }
  EvalResult r;
  r.value = p.value;
  r.abs_error_estimate = p.abs_error;
  r.method = method;
  r.region = regionOf(s);
  return r;
}

void requirePoleFree(int order, Complex s) {
  for (int n = 2 - order; n <= 1; ++n) {
    if (std::abs(s - static_cast<double>(n)) < kPoleRadius) {
      throw Error(ErrorKind::pole, "s lies within 1e-6 of the pole " + std::to_string(n));
    }
  }
}

}  // namespace

std::string_view to_string(Method method) {
  switch (method) {
    case Method::right_series: return "right-series";
    case Method::right_integral: return "right-integral";
    case Method::strip: return "strip";
    case Method::left_rootsum: return "left-rootsum";
    case Method::exact_negative_integer: return "exact-negative-integer";
  }
  return "unknown";
}

std::string_view to_string(Region region) {
  switch (region) {
    case Region::right: return "right";
    case Region::near_pole: return "near-pole";
    case Region::strip: return "strip";
    case Region::left: return "left";
    case Region::negative_integer: return "negative-integer";
  }
  return "unknown";
}

MuCoefficient polyPowerCoeffs(int order, int n) {
  requireOrder(order);
  if (n < 1) throw Error(ErrorKind::domain, "polyPowerCoeffs requires n >= 1");
  if (static_cast<long>(order - 1) * (n - 1) > 10000) {
    throw Error(ErrorKind::degree_overflow, "polyPowerCoeffs: degree exceeds 1e4");
  }
  std::vector<mpq_class> t(order);
  t[0] = 1;
  for (int j = 1; j < order; ++j) t[j] = t[j - 1] / j;

  std::vector<mpq_class> p{1};
  for (int i = 1; i < n; ++i) {
    std::vector<mpq_class> next(p.size() + order - 1, 0);
    for (std::size_t a = 0; a < p.size(); ++a) {
      for (int b = 0; b < order; ++b) next[a + b] += p[a] * t[b];
    }
    p = std::move(next);
  }
  MuCoefficient mu;
  mu.order = order;
  mu.n = n;
  mu.poly_coeffs.reserve(p.size());
  for (const auto& v : p) mu.poly_coeffs.emplace_back(v);
  return mu;
}

Complex muCoefficient(int order, int n, Complex s) {
  const MuCoefficient mu = polyPowerCoeffs(order, n);
  const Complex shift = s + static_cast<double>(order - 1);
  Complex sum = 0.0;
  Complex factor = 1.0;
  for (std::size_t k = 0; k < mu.poly_coeffs.size(); ++k) {
    sum += mu.poly_coeffs[k].toDouble() * factor;
    factor *= (shift + static_cast<double>(k)) / static_cast<double>(n);
  }
  return sum;
}

BigRational muCoefficientExact(int order, int n, const BigRational& s) {
  const MuCoefficient mu = polyPowerCoeffs(order, n);
  const BigRational shift = s + BigRational(order - 1);
  BigRational sum;
  BigRational factor(1);
  for (std::size_t k = 0; k < mu.poly_coeffs.size(); ++k) {
    sum += mu.poly_coeffs[k] * factor;
    factor *= (shift + BigRational(static_cast<long>(k))) / BigRational(n);
  }
  return sum;
}

EvalResult zetaIntegral(int order, Complex s, const PrecisionContext& ctx) {
  requireOrder(order);
  if (!(s.real() > 1.0)) throw Error(ErrorKind::domain, "zetaIntegral requires Re s > 1");
  requirePoleFree(order, s);
  const Partial p = s.real() >= kLiteralIntegralSigma ? literalIntegral(order, s, ctx)
                                                      : continuation(order, s, ctx);
  return finish(p, Method::right_integral, s);
}

EvalResult zetaRightSeries(int order, Complex s, const PrecisionContext& ctx) {
  requireOrder(order);
  if (!(s.real() > 1.0)) throw Error(ErrorKind::domain, "zetaRightSeries requires Re s > 1");
  if (s.real() < kSeriesSwitch) return zetaIntegral(order, s, ctx);

  const LComplex shift(s.real() + order - 1, s.imag());
  std::vector<long double> t(order);
  t[0] = 1.0L;
  for (int j = 1; j < order; ++j) t[j] = t[j - 1] / j;

  std::vector<long double> poly{1.0L};
  LComplex partial = 0.0L;
  long double magnitude = 0.0L;
  int used = 0;
  int quiet = 0;
  for (int n = 1; n <= ctx.max_series_terms; ++n) {
    LComplex mu = 0.0L;
    LComplex factor = 1.0L;
    for (std::size_t k = 0; k < poly.size(); ++k) {
      mu += poly[k] * factor;
      factor *= (shift + static_cast<long double>(k)) / static_cast<long double>(n);
    }
    const LComplex term = mu * std::exp(-shift * std::log(static_cast<long double>(n)));
    partial += term;
    magnitude += std::abs(term);
    used = n;
    quiet = std::abs(term) < ctx.target_abs_tol ? quiet + 1 : 0;
    if (quiet >= 3) break;

    std::vector<long double> next(poly.size() + order - 1, 0.0L);
    for (std::size_t a = 0; a < poly.size(); ++a) {
      for (int b = 0; b < order; ++b) next[a + b] += poly[a] * t[b];
    }
    poly = std::move(next);
  }

  // what the first `used` terms leave out: int x^{s+N-2} u^used / (e^x - T) dx / Gamma(s+N-1)
  const QuadResult rest = integrateSemiInfinite(
      [&](double x) {
        const double lu = used * logRatio(order, x, ctx);
        if (lu < -745.0) return Complex(0.0, 0.0);
        return kernel(order, s, x, ctx) * std::exp(lu);
      },
      kDefaultSplits, ctx);
  if (!rest.converged) throw Error(ErrorKind::non_convergence, "series remainder quadrature did not converge");
  const Complex rg = reciprocalGamma(s + static_cast<double>(order - 1));

  Partial p;
  p.value = Complex(static_cast<double>(partial.real()), static_cast<double>(partial.imag())) +
            rest.value * rg;
  p.abs_error = (rest.abs_error + 8.0 * kEps * std::abs(rest.value)) * std::abs(rg) +
                8.0 * kEps * static_cast<double>(magnitude);
  return finish(p, Method::right_series, s);
}

EvalResult zetaStrip(int order, Complex s, const PrecisionContext& ctx) {
  requireOrder(order);
  if (!(s.real() > -1.0 && s.real() <= 1.0)) {
    throw Error(ErrorKind::domain, "zetaStrip requires -1 < Re s <= 1");
  }
  requirePoleFree(order, s);
  return finish(continuation(order, s, ctx), Method::strip, s);
}

EvalResult zetaLeftSeries(int order, Complex s, const RootTable& roots, const PrecisionContext& ctx) {
  requireOrder(order);
  if (!(s.real() < 0.0)) throw Error(ErrorKind::domain, "zetaLeftSeries requires Re s < 0");
  if (roots.order != order || roots.count() < 2) {
    throw Error(ErrorKind::insufficient_roots, "zetaLeftSeries needs a root table of this order");
  }
  requirePoleFree(order, s);
  RootTable extended;
  const RootTable* table = &roots;
  for (;;) {
    const Partial p = leftSum(order, s, *table);
    const double tol = std::max(ctx.target_abs_tol, ctx.quad_rel_tol * std::abs(p.value));
    if (p.abs_error <= tol) return finish(p, Method::left_rootsum, s);
    const int count = static_cast<int>(table->count());
    if (count >= kMaxLeftRoots) {
      throw Error(ErrorKind::insufficient_roots,
                  "root-sum tail estimate " + std::to_string(p.abs_error) + " above tolerance at K = " +
                      std::to_string(count));
    }
    extended = rootTable(order, std::min(2 * count, kMaxLeftRoots), ctx);
    table = &extended;
  }
}

EvalResult zetaLeftSeries(int order, Complex s, const PrecisionContext& ctx) {
  requireOrder(order);
  return zetaLeftSeries(order, s, rootTable(order, kInitialLeftRoots, ctx), ctx);
}

BigRational zetaNegativeInt(int order, int n) {
  requireOrder(order);
  if (!(n < 2 - order)) throw Error(ErrorKind::out_of_range, "zetaNegativeInt requires n < 2 - N");
  const BernoulliTable table = generalizedBernoulli(order, 1 - n);
  const BigRational sign((-n - order + 1) % 2 == 0 ? 1 : -1);
  return sign * table[1 - n] / BigRational(binomial(1 - n, order));
}

BigRational residueAt(int order, int n) {
  requireOrder(order);
  if (n < 2 - order || n > 1) throw Error(ErrorKind::out_of_range, "residueAt requires 2 - N <= n <= 1");
  const BernoulliTable table = generalizedBernoulli(order, 1 - n);
  return BigRational(2 - n) * BigRational(binomial(order, 2 - n)) * table[1 - n];
}

double limitAtOne(int order) {
  requireOrder(order);
  return std::lgamma(order + 1.0) - order * digammaInt(order);
}

double limitAtOneProbe(int order, double h, const PrecisionContext& ctx) {
  EvalOptions options;
  options.residue_mode = true;
  return evaluate(order, Complex(1.0 + h, 0.0), ctx, options).value.real() - order / h;
}

Complex contourFunction(int order, Complex s, const PrecisionContext& ctx) {
  requireOrder(order);
  long n = 0;
  if (isRealInteger(s, n)) {
    if (n >= 2) return 0.0;
    const BernoulliTable table = generalizedBernoulli(order, static_cast<int>(1 - n));
    const BigRational value = BigRational(factorial(order)) * table[1 - n] /
                              BigRational(factorial(static_cast<unsigned>(1 - n)));
    return ((n + order - 1) % 2 == 0 ? 1.0 : -1.0) * value.toDouble();
  }
  EvalOptions options;
  options.residue_mode = true;
  return evaluate(order, s, ctx, options).value * reciprocalGamma(Complex(2.0 - order, 0.0) - s);
}

EvalResult evaluate(int order, Complex s, const PrecisionContext& ctx, const EvalOptions& options) {
  ctx.validate();
  requireOrder(order);
  if (!std::isfinite(s.real()) || !std::isfinite(s.imag())) {
    throw Error(ErrorKind::domain, "s must be finite");
  }
  long n = 0;
  if (isRealInteger(s, n) && n >= 2 - order && n <= 1) {
    throw Error(ErrorKind::pole, "s = " + std::to_string(n) + " is a pole");
  }
  if (!options.residue_mode) requirePoleFree(order, s);

  if (options.method == MethodChoice::automatic && isRealInteger(s, n) && n < 2 - order) {
    const double v = zetaNegativeInt(order, static_cast<int>(n)).toDouble();
    EvalResult r;
    r.value = v;
    r.abs_error_estimate = kEps * std::abs(v);
    r.method = Method::exact_negative_integer;
    r.region = Region::negative_integer;
    return r;
  }

  EvalResult result;
  const double sigma = s.real();
  switch (options.method) {
    case MethodChoice::series: result = zetaRightSeries(order, s, ctx); break;
    case MethodChoice::integral: result = zetaIntegral(order, s, ctx); break;
    case MethodChoice::strip: result = zetaStrip(order, s, ctx); break;
    case MethodChoice::leftsum: result = zetaLeftSeries(order, s, ctx); break;
    case MethodChoice::automatic:
      if (sigma > kSeriesSwitch) {
        result = zetaRightSeries(order, s, ctx);
      } else if (options.residue_mode && sigma > -1.0) {
        // near a pole: the continuation itself has no proximity guard
        result = finish(continuation(order, s, ctx),
                        sigma > 1.0 ? Method::right_integral : Method::strip, s);
      } else if (sigma > 1.0) {
        result = zetaIntegral(order, s, ctx);
      } else if (sigma > -1.0) {
        result = zetaStrip(order, s, ctx);
      } else {
        result = zetaLeftSeries(order, s, ctx);
      }
      break;
  }

  if (options.cross_check) {
    std::optional<EvalResult> other;
    if (sigma > kSeriesSwitch) {
      other = result.method == Method::right_series ? zetaIntegral(order, s, ctx)
                                                    : zetaRightSeries(order, s, ctx);
    } else if (sigma < 0.0 && sigma > -1.0) {
      other = result.method == Method::left_rootsum ? zetaStrip(order, s, ctx)
                                                    : zetaLeftSeries(order, s, ctx);
    } else if (sigma <= -1.0 && !options.residue_mode) {
      other = finish(continuation(order, s, ctx), Method::strip, s);
    }
    if (other) {
      const double diff = std::abs(result.value - other->value);
      const double allowed = 10.0 * (result.abs_error_estimate + other->abs_error_estimate) +
                             1e-10 * std::max(1.0, std::abs(result.value));
      if (diff > allowed) {
        throw Error(ErrorKind::cross_check_mismatch,
                    std::string(to_string(result.method)) + " and " +
                        std::string(to_string(other->method)) + " disagree by " +
                        std::to_string(diff));
      }
      result.abs_error_estimate = std::max(result.abs_error_estimate, diff);
    }
  }
  return result;
}

std::string toJson(int order, Complex s, const EvalResult& result) {
  const nlohmann::json j = {
      {"order", order},
      {"s", {{"re", s.real()}, {"im", s.imag()}}},
      {"value", {{"re", result.value.real()}, {"im", result.value.imag()}}},
      {"abs_err", result.abs_error_estimate},
      {"method", std::string(to_string(result.method))},
      {"region", std::string(to_string(result.region))},
  };
  return j.dump();
}

}  // namespace hzeta
