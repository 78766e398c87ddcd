#include <cmath>
#include <string>

#include "hzeta/error.hpp"
#include "hzeta/numerics.hpp"

namespace hzeta {

namespace {

constexpr double kHalfPi = 0.5 * kPi;
// Beyond |t| = 6 the tanh-sinh abscissae sit within 1e-270 of an endpoint.
constexpr double kFiniteTMax = 6.0;
// exp-sinh: e^{pi/2 sinh 4.5} ~ 1e30.
constexpr double kTailTMax = 4.5;
constexpr int kMaxBisectionDepth = 8;

Complex checked(const Integrand& f, double x) {
  const Complex v = f(x);
  if (std::isnan(v.real()) || std::isnan(v.imag())) {
    throw Error(ErrorKind::nan_integrand, "integrand returned NaN at x = " + std::to_string(x));
  }
  return v;
}

// Contribution of abscissa t (step factor excluded) for the tanh-sinh map of [a, b].
Complex tanhSinhTerm(const Integrand& f, double a, double b, double t, long& evals) {
  const double u = kHalfPi * std::sinh(t);
  const double e = std::exp(-2.0 * std::abs(u));
  // distance to the nearer endpoint and sech^2(u), both without cancellation
  const double d = (b - a) * e / (1.0 + e);
  if (d <= 0.0) return 0.0;
  const double sech2 = 4.0 * e / ((1.0 + e) * (1.0 + e));
  const double w = 0.5 * (b - a) * kHalfPi * std::cosh(t) * sech2;
  const double x = t < 0.0 ? a + d : b - d;
  if (x <= a || x >= b) return 0.0;
  ++evals;
  return w * checked(f, x);
}

bool accept(double err, Complex value, const PrecisionContext& ctx) {
  return err <= std::max(ctx.quad_rel_tol * std::abs(value), 0.1 * ctx.target_abs_tol);
}

QuadResult tanhSinh(const Integrand& f, double a, double b, const PrecisionContext& ctx) {
  QuadResult r;
  double h = 1.0;
  Complex sum = tanhSinhTerm(f, a, b, 0.0, r.evaluations);
  for (double t = h; t <= kFiniteTMax; t += h) {
    sum += tanhSinhTerm(f, a, b, t, r.evaluations) + tanhSinhTerm(f, a, b, -t, r.evaluations);
  }
  Complex estimate = h * sum;
  r.converged = false;
  for (int level = 1; level <= ctx.quad_max_refinements; ++level) {
    h *= 0.5;
    for (double t = h; t <= kFiniteTMax; t += 2.0 * h) {
      sum += tanhSinhTerm(f, a, b, t, r.evaluations) + tanhSinhTerm(f, a, b, -t, r.evaluations);
    }
    const Complex next = h * sum;
    r.abs_error = std::abs(next - estimate);
    estimate = next;
    if (level >= 3 && accept(r.abs_error, estimate, ctx)) {
      r.converged = true;
      break;
    }
  }
  r.value = estimate;
  return r;
}

QuadResult adaptivePanel(const Integrand& f, double a, double b, const PrecisionContext& ctx,
                         int depth) {
  QuadResult r = tanhSinh(f, a, b, ctx);
  if (r.converged || depth >= kMaxBisectionDepth) return r;
  const double mid = 0.5 * (a + b);
  const QuadResult left = adaptivePanel(f, a, mid, ctx, depth + 1);
  const QuadResult right = adaptivePanel(f, mid, b, ctx, depth + 1);
  QuadResult merged;
  merged.value = left.value + right.value;
  merged.abs_error = left.abs_error + right.abs_error;
  merged.converged = left.converged && right.converged;
  merged.evaluations = r.evaluations + left.evaluations + right.evaluations;
  return merged;
}

Complex expSinhTerm(const Integrand& f, double a, double t, long& evals) {
  const double u = kHalfPi * std::sinh(t);
  const double d = std::exp(u);
  const double x = a + d;
  if (x <= a || !std::isfinite(x)) return 0.0;
  ++evals;
  return d * kHalfPi * std::cosh(t) * checked(f, x);
}

QuadResult expSinh(const Integrand& f, double a, const PrecisionContext& ctx) {
  QuadResult r;
  double h = 0.5;
  Complex sum = expSinhTerm(f, a, 0.0, r.evaluations);
  for (double t = h; t <= kTailTMax; t += h) {
    sum += expSinhTerm(f, a, t, r.evaluations) + expSinhTerm(f, a, -t, r.evaluations);
  }
  Complex estimate = h * sum;
  r.converged = false;
  for (int level = 1; level <= ctx.quad_max_refinements; ++level) {
    h *= 0.5;
    for (double t = h; t <= kTailTMax; t += 2.0 * h) {
      sum += expSinhTerm(f, a, t, r.evaluations) + expSinhTerm(f, a, -t, r.evaluations);
    }
    const Complex next = h * sum;
    r.abs_error = std::abs(next - estimate);
    estimate = next;
    if (level >= 3 && accept(r.abs_error, estimate, ctx)) {
      r.converged = true;
      break;
    }
  }
  r.value = estimate;
  return r;
}

}  // namespace

QuadResult integrateFinite(const Integrand& f, double a, double b, const PrecisionContext& ctx) {
  if (!(b > a)) {
    throw Error(ErrorKind::domain, "integrateFinite requires a < b");
  }
  return adaptivePanel(f, a, b, ctx, 0);
}

QuadResult integrateToInfinity(const Integrand& f, double a, std::span<const double> splits,
                               const PrecisionContext& ctx) {
  QuadResult total;
  double lo = a;
  for (double split : splits) {
    if (split <= a) continue;
    if (!(split > lo)) {
      throw Error(ErrorKind::domain, "integrateToInfinity: splits must be ascending");
    }
    const QuadResult panel = adaptivePanel(f, lo, split, ctx, 0);
    total.value += panel.value;
    total.abs_error += panel.abs_error;
    total.converged = total.converged && panel.converged;
    total.evaluations += panel.evaluations;
    lo = split;
  }
  const QuadResult tail = expSinh(f, lo, ctx);
  total.value += tail.value;
  total.abs_error += tail.abs_error;
  total.converged = total.converged && tail.converged;
  total.evaluations += tail.evaluations;
  return total;
}

QuadResult integrateSemiInfinite(const Integrand& f, std::span<const double> splits,
                                 const PrecisionContext& ctx) {
  if (!splits.empty() && !(splits.front() > 0.0)) {
    throw Error(ErrorKind::domain, "integrateSemiInfinite: splits must be positive");
  }
  return integrateToInfinity(f, 0.0, splits, ctx);
}

}  // namespace hzeta
