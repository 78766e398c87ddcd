#include "hzeta/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "hzeta/bernoulli.hpp"
#include "hzeta/error.hpp"
#include "hzeta/zeta.hpp"

namespace hzeta {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
// Relative accuracy credited to complexGamma when forming bound right-hand sides.
constexpr double kGammaRelErr = 1e-12;

std::string fmt(Complex s) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g%+.10gi", s.real(), s.imag());
  return buf;
}

std::string fmtN(int order, Complex s) { return "N=" + std::to_string(order) + " s=" + fmt(s); }

// x, y, r, theta for the first ten roots with N = 2 and N = 3.
constexpr std::array<std::array<double, 4>, 10> kReferenceRootsN2{{
    {2.088843016, 7.461489286, 7.748360311, 1.2978341024},
    {2.664068142, 13.87905600, 14.13242564, 1.3811541551},
    {3.026296956, 20.22383500, 20.44900915, 1.4222583654},
    {3.291678332, 26.54323851, 26.74656346, 1.4474143156},
    {3.501269010, 32.85054823, 33.03660703, 1.4646154233},
    {3.674505305, 39.15107412, 39.32313052, 1.4772159363},
    {3.822152869, 45.44738491, 45.60782441, 1.4868931567},
    {3.950805215, 51.74088462, 51.89150222, 1.4945866979},
    {4.064795694, 58.03240938, 58.17459155, 1.5008669923},
    {4.167125550, 64.32248998, 64.45733203, 1.5061018433},
}};

constexpr std::array<std::array<double, 4>, 10> kReferenceRootsN3{{
    {3.838602048, 8.366815507, 9.205349934, 1.1406576364},
    {4.857263960, 14.95891141, 15.72774757, 1.2568294158},
    {5.520626554, 21.39846201, 22.09912880, 1.3183102795},
    {6.016178416, 27.77895961, 28.42296607, 1.3575169538},
    {6.412519686, 34.12944500, 34.72663855, 1.3850733959},
    {6.743013428, 40.46233161, 41.02034263, 1.4056646865},
    {7.026523305, 46.78391852, 47.30863623, 1.4217195916},
    {7.274789053, 53.09777556, 53.59380865, 1.4346366398},
    {7.495625078, 59.40609018, 59.87710703, 1.4452835555},
    {7.694499832, 65.71028350, 66.15925246, 1.4542298245},
}};

struct Bound {
  double value = 0.0;
  double err = 0.0;
};

// |zeta_2(s)| with its error estimate.
Bound lhsZeta2(Complex s, const PrecisionContext& ctx) {
  const EvalResult r = evaluate(2, s, ctx);
  return {std::abs(r.value), r.abs_error_estimate};
}

Bound realZeta(int order, double sigma, const PrecisionContext& ctx) {
  const EvalResult r = evaluate(order, Complex(sigma, 0.0), ctx);
  return {r.value.real(), r.abs_error_estimate};
}

// |Gamma(-s)| e^{|tau| (pi - theta_1)} scaled by `factor`, times a real zeta value.
Bound leftRhs(Complex s, double factor, double theta1, const Bound& zeta, bool absolute_exponent) {
  const double tau = s.imag();
  const double exponent = (absolute_exponent ? std::abs(tau) : tau) * (kPi - theta1);
  const double base = factor * std::abs(complexGamma(-s)) * std::exp(exponent);
  Bound b;
  b.value = base * zeta.value;
  b.err = base * zeta.err + std::abs(b.value) * kGammaRelErr;
  return b;
}

bool strictlyBelow(const Bound& lhs, const Bound& rhs) { return lhs.value + lhs.err < rhs.value - rhs.err; }

void requireLeft(const std::vector<Complex>& points) {
  for (Complex s : points) {
    if (!(s.real() < 0.0)) throw Error(ErrorKind::domain, "left-half-plane check requires Re s < 0");
  }
}

template <typename RhsFn>
CheckReport leftBound(const std::string& id, const std::vector<Complex>& points, RhsFn rhsFn,
                      const PrecisionContext& ctx) {
  requireLeft(points);
  CheckReport report;
  report.check_id = id;
  for (Complex s : points) {
    const Bound lhs = lhsZeta2(s, ctx);
    const Bound rhs = rhsFn(s);
    report.record(fmt(s), lhs.value, rhs.value, strictlyBelow(lhs, rhs));
  }
  return report;
}

// Classical Bernoulli numbers by the Akiyama-Tanigawa transform (B_1 = -1/2 convention).
std::vector<BigRational> classicalBernoulli(int nMax) {
  std::vector<BigRational> out;
  std::vector<BigRational> a(nMax + 1);
  for (int m = 0; m <= nMax; ++m) {
    a[m] = BigRational(1) / BigRational(m + 1);
    for (int j = m; j >= 1; --j) a[j - 1] = BigRational(j) * (a[j - 1] - a[j]);
    out.push_back(a[0]);
  }
  if (nMax >= 1) out[1] = -out[1];
  return out;
}

// ---------------------------------------------------------------- suites

std::vector<CheckReport> inequalitySuite(const PrecisionContext& ctx) {
  const std::vector<double> sigmas{1.5, 2.0, 3.0, 5.0};
  const RootTable roots = rootTable(2, 100, ctx);
  const auto grid = defaultLeftGrid();
  std::vector<CheckReport> out;
  out.push_back(checkExceedsRiemann(sigmas, {2, 3}, ctx));
  out.push_back(checkOrderMonotonicity(sigmas, {1, 2, 3}, ctx));
  out.push_back(checkTwoPiBound(grid, roots, ctx));
  out.push_back(checkTwoPiBoundSigned(grid, roots, ctx));
  out.push_back(checkTwoPiBoundZeta2(grid, roots, ctx));
  out.push_back(checkZeta2Dominates(grid, ctx));
  out.push_back(checkFirstRootBound(grid, roots, ctx));
  out.push_back(checkHurwitzBound(grid, roots, ctx));
  out.push_back(checkRootGrowth(roots));
  return out;
}

std::vector<CheckReport> howardSuite(const PrecisionContext& ctx) {
  const double r1 = solveRootN2(1, ctx).r;
  std::vector<CheckReport> out;
  out.push_back(checkBernoulliBound(2, 30));
  out.push_back(checkBernoulliBound(3, 30));
  out.push_back(checkBernoulliR1Bound(r1, 3, 30));
  out.push_back(checkHoward(7, 30));
  out.push_back(checkRootSumBernoulli({6, 8, 10}, ctx));
  return out;
}

CheckReport referenceTable(int order, const std::array<std::array<double, 4>, 10>& ref,
                           const PrecisionContext& ctx) {
  CheckReport report;
  report.check_id = "root-table-n" + std::to_string(order);
  const RootTable table = rootTable(order, 10, ctx);
  for (int k = 0; k < 10; ++k) {
    const Root& root = table.roots[k];
    const std::array<double, 4> got{root.x, root.y, root.r, root.theta};
    static constexpr const char* kNames[] = {"x", "y", "r", "theta"};
    double worst = 0.0;
    int where = 0;
    for (int c = 0; c < 4; ++c) {
      const double d = std::abs(got[c] - ref[k][c]);
      if (d > worst) { worst = d; where = c; }
    }
    report.record("k=" + std::to_string(k + 1) + " " + kNames[where], worst, 1e-8, worst <= 1e-8);
  }
  return report;
}

CheckReport bracketContainment(int order, int count, const PrecisionContext& ctx) {
  CheckReport report;
  report.check_id = "root-brackets-n" + std::to_string(order);
  const RootTable table = rootTable(order, count, ctx);
  for (const Root& root : table.roots) {
    const Interval b = order == 2 ? bracketN2(root.index) : bracketN3(root.index);
    report.record("k=" + std::to_string(root.index), root.y, b.second, root.y > b.first && root.y < b.second);
  }
  return report;
}

std::vector<CheckReport> tableSuite(const PrecisionContext& ctx) {
  return {referenceTable(2, kReferenceRootsN2, ctx), referenceTable(3, kReferenceRootsN3, ctx),
          bracketContainment(2, 50, ctx), bracketContainment(3, 50, ctx)};
}

std::vector<CheckReport> poleSuite(const PrecisionContext& ctx) {
  std::vector<CheckReport> out;

  CheckReport probes;
  probes.check_id = "residue-probes";
  EvalOptions near;
  near.residue_mode = true;
  for (int order = 1; order <= 3; ++order) {
    for (int n = 2 - order; n <= 1; ++n) {
      const double exact = residueAt(order, n).toDouble();
      double prev = 0.0;
      for (double h : {1e-3, 1e-4}) {
        const double got = (h * evaluate(order, Complex(n + h, 0.0), ctx, near).value).real();
        const double err = std::abs(got - exact);
        // O(h): within 10 h |Res| and shrinking roughly tenfold with h
        bool ok = err <= 10.0 * h * std::max(1.0, std::abs(exact));
        if (h < 1e-3) ok = ok && err <= 0.2 * prev;
        probes.record("N=" + std::to_string(order) + " n=" + std::to_string(n) + " h=" +
                          (h < 1e-3 ? "1e-4" : "1e-3"),
                      got, exact, ok);
        prev = err;
      }
    }
  }
  out.push_back(probes);

  CheckReport closed;
  closed.check_id = "residue-closed-forms";
  for (int order = 1; order <= 6; ++order) {
    const BigRational N(order);
    const BigRational one(1);
    std::vector<std::pair<int, BigRational>> forms{
        {1, N},
        {0, -N * (N - one) / (N + one)},
        {-1, N * (N - one) * (N - BigRational(2)) / ((N + one) * (N + one) * (N + BigRational(2)))},
        {-2, N * (N - one) * (N - one) * (N - BigRational(2)) * (N - BigRational(3)) /
                 (pow(N + one, 3) * (N + BigRational(2)) * (N + BigRational(3)))},
    };
    for (const auto& [n, expected] : forms) {
      if (n < 2 - order) continue;
      const BigRational got = residueAt(order, n);
      closed.record("N=" + std::to_string(order) + " n=" + std::to_string(n), got.toDouble(),
                    expected.toDouble(), got == expected);
    }
  }
  out.push_back(closed);

  CheckReport limit;
  limit.check_id = "limit-at-one";
  limit.record("closed form N=1", limitAtOne(1), kEulerGamma, std::abs(limitAtOne(1) - kEulerGamma) <= 1e-9);
  for (int order = 1; order <= 3; ++order) {
    const double probe = limitAtOneProbe(order, 1e-4, ctx);
    limit.record("probe N=" + std::to_string(order) + " h=1e-4", probe, limitAtOne(order),
                 std::abs(probe - limitAtOne(order)) <= 1e-3);
  }
  out.push_back(limit);

  CheckReport derivative;
  derivative.check_id = "contour-derivative-at-one";
  for (int order = 1; order <= 3; ++order) {
    const double h = 1e-3;
    const Complex d = (contourFunction(order, 1.0 + h, ctx) - contourFunction(order, 1.0 - h, ctx)) / (2.0 * h);
    const double expected = (order % 2 == 0 ? 1.0 : -1.0) * std::tgamma(order) * std::lgamma(order + 1.0);
    derivative.record("N=" + std::to_string(order), d.real(), expected,
                      std::abs(d - expected) <= 1e-5);
  }
  out.push_back(derivative);

  CheckReport integers;
  integers.check_id = "contour-integer-values";
  for (int order = 1; order <= 3; ++order) {
    for (int n = -3; n <= 4; ++n) {
      // the exact integer value must match the limit of nearby evaluations
      const Complex exact = contourFunction(order, static_cast<double>(n), ctx);
      const double h = 1e-5;
      const Complex mid = 0.5 * (contourFunction(order, n + h, ctx) + contourFunction(order, n - h, ctx));
      const double tol = 1e-6 * std::max(1.0, std::abs(exact));
      bool ok = std::abs(mid - exact) <= tol;
      if (n >= 2) ok = ok && exact == Complex(0.0, 0.0);
      integers.record("N=" + std::to_string(order) + " n=" + std::to_string(n), mid.real(), exact.real(), ok);
    }
  }
  out.push_back(integers);
  return out;
}

std::vector<CheckReport> propertySuite(const PrecisionContext& ctx) {
  std::vector<CheckReport> out;

  CheckReport conj;
  conj.check_id = "conjugation-symmetry";
  const std::vector<Complex> points{{2.5, 1.0}, {1.1, 0.5}, {0.5, 3.0}, {-0.5, 2.0}, {-3.0, 5.0}, {-1.5, -0.7}};
  for (int order = 1; order <= 3; ++order) {
    for (Complex s : points) {
      const EvalResult a = evaluate(order, s, ctx);
      const EvalResult b = evaluate(order, std::conj(s), ctx);
      const double diff = std::abs(b.value - std::conj(a.value));
      const double tol = a.abs_error_estimate + b.abs_error_estimate + 4.0 * kEps * std::abs(a.value);
      conj.record(fmtN(order, s), diff, tol, diff <= tol);
    }
  }
  out.push_back(conj);

  CheckReport tele;
  tele.check_id = "exp-remainder-telescoping";
  CheckReport mirror;
  mirror.check_id = "exp-remainder-conjugate";
  for (int order = 1; order <= 8; ++order) {
    for (double radius : {1e-3, 0.3, 1.0, 2.5, 5.0, 10.0}) {
      for (int j = 0; j < 8; ++j) {
        const Complex x = std::polar(radius, 2.0 * kPi * j / 8.0 + 0.1);
        const Complex lhs = expRemainder(x, order, ctx) - expRemainder(x, order + 1, ctx);
        const Complex rhs = std::pow(x, order) / std::tgamma(order + 1.0);
        // rounding floor: the size of the largest quantity that was subtracted
        double scale = std::abs(std::exp(x));
        double term = 1.0;
        for (int k = 0; k <= order; ++k) {
          scale = std::max(scale, term);
          term *= radius / (k + 1);
        }
        const double tol = 1e-12 * std::max(1.0, scale);
        tele.record("N=" + std::to_string(order) + " x=" + fmt(x), std::abs(lhs - rhs), tol,
                    std::abs(lhs - rhs) <= tol);
        const Complex a = expRemainder(std::conj(x), order, ctx);
        const Complex b = std::conj(expRemainder(x, order, ctx));
        mirror.record("N=" + std::to_string(order) + " x=" + fmt(x), std::abs(a - b), 0.0, a == b);
      }
    }
  }
  out.push_back(tele);
  out.push_back(mirror);

  CheckReport gamma;
  gamma.check_id = "gamma-recurrence";
  for (double re = -19.75; re <= 19.0; re += 1.5) {
    for (double im : {-7.0, -0.5, 0.0, 0.25, 3.0}) {
      const Complex z(re, im);
      if (std::abs(z) > 20.0) continue;
      const Complex next = complexGamma(z + 1.0);
      const double diff = std::abs(next - z * complexGamma(z));
      gamma.record(fmt(z), diff, 1e-11 * std::abs(next), diff <= 1e-11 * std::abs(next));
    }
  }
  out.push_back(gamma);

  CheckReport poch;
  poch.check_id = "pochhammer-recurrence";
  for (Complex s : {Complex(0.5, 0.0), Complex(-2.5, 1.0), Complex(3.0, -2.0), Complex(-4.0, 0.0)}) {
    for (int k = 0; k < 30; ++k) {
      const Complex a = pochhammer(s, k + 1);
      const Complex b = pochhammer(s, k) * (s + static_cast<double>(k));
      poch.record(fmt(s) + " k=" + std::to_string(k), std::abs(a - b), 0.0, a == b);
    }
  }
  out.push_back(poch);

  CheckReport order;
  order.check_id = "root-ordering";
  for (int n : {2, 3}) {
    try {
      checkOrdering(rootTable(n, 50, ctx));
      order.record("N=" + std::to_string(n) + " K=50", 0.0, 0.0, true);
    } catch (const Error& e) {
      order.record("N=" + std::to_string(n) + " K=50: " + e.what(), 1.0, 0.0, false);
    }
  }
  for (int n : {4, 5}) {
    const RootTable table = rootTable(n, 20, ctx);
    bool ok = true;
    for (std::size_t i = 1; i < table.roots.size(); ++i) ok = ok && table.roots[i].r > table.roots[i - 1].r;
    order.record("N=" + std::to_string(n) + " K=20 modulus", 0.0, 0.0, ok);
  }
  out.push_back(order);

  CheckReport closure;
  closure.check_id = "root-conjugate-closure";
  for (int n : {2, 3, 4}) {
    for (const Root& root : rootTable(n, 20, ctx).roots) {
      const double res = scaledResidual(n, std::conj(root.z()));
      closure.record("N=" + std::to_string(n) + " k=" + std::to_string(root.index), res, ctx.root_tol,
                     res <= ctx.root_tol && scaledDerivative(n, root.z()) > ctx.root_tol);
    }
  }
  out.push_back(closure);

  CheckReport modulus;
  modulus.check_id = "root-modulus-sandwich";
  for (int n : {2, 3, 4, 5}) {
    const int d = n - 1;
    const double radius = 4.0 * n;
    const ModulusBounds m = modulusBounds(n, radius);
    for (const Root& root : rootTable(n, 30, ctx).roots) {
      if (!(root.r > radius)) continue;
      const double rd = std::pow(root.r, d);
      const double ex = std::exp(root.x);
      const std::string tag = "N=" + std::to_string(n) + " k=" + std::to_string(root.index);
      modulus.record(tag + " |T|", ex, m.a * rd, m.b * rd <= ex && ex <= m.a * rd);
      if (root.x > d * std::log(radius)) {
        const double scale = std::exp(root.x / d);
        modulus.record(tag + " y", root.y, m.b1 * scale, m.a1 * scale <= root.y && root.y <= m.b1 * scale);
      }
    }
  }
  out.push_back(modulus);

  CheckReport recursion;
  recursion.check_id = "bernoulli-recursion";
  for (int n = 1; n <= 8; ++n) {
    recursion.record("N=" + std::to_string(n), 0.0, 0.0, satisfiesRecursion(generalizedBernoulli(n, 40)));
  }
  out.push_back(recursion);

  CheckReport classical;
  classical.check_id = "bernoulli-classical";
  const BernoulliTable b1 = generalizedBernoulli(1, 20);
  const auto reference = classicalBernoulli(20);
  for (int n = 0; n <= 20; ++n) {
    classical.record("n=" + std::to_string(n), b1[n].toDouble(), reference[n].toDouble(), b1[n] == reference[n]);
  }
  out.push_back(classical);

  CheckReport closedForms;
  closedForms.check_id = "bernoulli-closed-forms";
  for (int n = 1; n <= 6; ++n) {
    const BigRational N(n);
    const BigRational one(1);
    const BernoulliTable t = generalizedBernoulli(n, 3);
    const std::array<BigRational, 4> expected{
        one, -one / (N + one), BigRational(2) / ((N + one) * (N + one) * (N + BigRational(2))),
        BigRational(6) * (N - one) / (pow(N + one, 3) * (N + BigRational(2)) * (N + BigRational(3)))};
    for (int k = 0; k <= 3; ++k) {
      closedForms.record("N=" + std::to_string(n) + " n=" + std::to_string(k), t[k].toDouble(),
                         expected[k].toDouble(), t[k] == expected[k]);
    }
  }
  out.push_back(closedForms);

  CheckReport mu;
  mu.check_id = "mu-at-one";
  for (int n = 1; n <= 4; ++n) {
    for (int k = 1; k <= 30; ++k) {
      const BigRational got = muCoefficientExact(n, k, BigRational(1));
      const BigRational expected = pow(BigRational(k), n - 1);
      mu.record("N=" + std::to_string(n) + " n=" + std::to_string(k), got.toDouble(), expected.toDouble(),
                got == expected);
    }
  }
  out.push_back(mu);
  return out;
}

}  // namespace

void CheckReport::record(const std::string& input, double lhs, double rhs, bool ok) {
  ++points_tested;
  if (!ok) {
    failures.push_back({input, lhs, rhs});
    passed = false;
  }
}

std::vector<Complex> defaultLeftGrid() {
  return {{-0.5, 0.0},  {-1.5, 0.0},  {-2.5, 0.0},  {-3.0, 0.0},  {-5.0, 0.0},
          {-2.0, 0.0},  {-0.5, 2.0},  {-3.0, 5.0},  {-1.5, -1.0}, {-0.25, 0.5},
          {-4.0, 3.0},  {-2.5, -4.0}, {-0.75, -2.5}, {-6.0, 1.0}, {-1.0, 1.0}};
}

CheckReport checkExceedsRiemann(const std::vector<double>& sigmas, const std::vector<int>& orders,
                           const PrecisionContext& ctx) {
  CheckReport report;
  report.check_id = "zeta-n-exceeds-zeta";
  for (int order : orders) {
    if (order <= 1) throw Error(ErrorKind::domain, "the comparison with zeta requires N > 1");
  }
  for (double sigma : sigmas) {
    if (!(sigma > 1.0)) throw Error(ErrorKind::domain, "the comparison with zeta requires sigma > 1");
    const Bound base = realZeta(1, sigma, ctx);
    for (int order : orders) {
      const Bound z = realZeta(order, sigma, ctx);
      report.record(fmtN(order, sigma), z.value, base.value, z.value - z.err > base.value + base.err);
    }
  }
  return report;
}

CheckReport checkOrderMonotonicity(const std::vector<double>& sigmas, const std::vector<int>& orders,
                                   const PrecisionContext& ctx) {
  CheckReport report;
  report.check_id = "order-monotonicity";
  report.asserted = false;
  for (double sigma : sigmas) {
    for (std::size_t i = 1; i < orders.size(); ++i) {
      const Bound lo = realZeta(orders[i - 1], sigma, ctx);
      const Bound hi = realZeta(orders[i], sigma, ctx);
      report.record(fmtN(orders[i], sigma), hi.value, lo.value, hi.value - hi.err > lo.value + lo.err);
    }
  }
  return report;
}

CheckReport checkTwoPiBound(const std::vector<Complex>& points, const RootTable& roots,
                              const PrecisionContext& ctx) {
  const double theta1 = roots.roots.at(0).theta;
  return leftBound(
      "left-bound-2pi", points,
      [&](Complex s) {
        return leftRhs(s, 2.0 * std::pow(2.0 * kPi, s.real()), theta1, realZeta(1, 1.0 - s.real(), ctx), true);
      },
      ctx);
}

CheckReport checkTwoPiBoundSigned(const std::vector<Complex>& points, const RootTable& roots,
                                    const PrecisionContext& ctx) {
  const double theta1 = roots.roots.at(0).theta;
  CheckReport report = leftBound(
      "left-bound-2pi-signed-exponent", points,
      [&](Complex s) {
        return leftRhs(s, 2.0 * std::pow(2.0 * kPi, s.real()), theta1, realZeta(1, 1.0 - s.real(), ctx), false);
      },
      ctx);
  report.asserted = false;
  return report;
}

CheckReport checkTwoPiBoundZeta2(const std::vector<Complex>& points, const RootTable& roots,
                              const PrecisionContext& ctx) {
  const double theta1 = roots.roots.at(0).theta;
  return leftBound(
      "left-bound-2pi-zeta2", points,
      [&](Complex s) {
        return leftRhs(s, 2.0 * std::pow(2.0 * kPi, s.real()), theta1, realZeta(2, 1.0 - s.real(), ctx), true);
      },
      ctx);
}

CheckReport checkZeta2Dominates(const std::vector<Complex>& points, const PrecisionContext& ctx) {
  requireLeft(points);
  CheckReport report;
  report.check_id = "left-bound-zeta2-dominates";
  for (Complex s : points) {
    const Bound z1 = realZeta(1, 1.0 - s.real(), ctx);
    const Bound z2 = realZeta(2, 1.0 - s.real(), ctx);
    report.record(fmt(s), z2.value, z1.value, z2.value + z2.err >= z1.value - z1.err);
  }
  return report;
}

CheckReport checkFirstRootBound(const std::vector<Complex>& points, const RootTable& roots,
                               const PrecisionContext& ctx) {
  const double theta1 = roots.roots.at(0).theta;
  const double r1 = roots.roots.at(0).r;
  return leftBound(
      "left-bound-r1", points,
      [&](Complex s) {
        return leftRhs(s, 4.0 * std::pow(r1, s.real() - 1.0), theta1, realZeta(1, 1.0 - s.real(), ctx), true);
      },
      ctx);
}

CheckReport checkHurwitzBound(const std::vector<Complex>& points, const RootTable& roots,
                              const PrecisionContext& ctx) {
  const double theta1 = roots.roots.at(0).theta;
  return leftBound(
      "left-bound-hurwitz", points,
      [&](Complex s) {
        const Bound h{hurwitzZeta(1.0 - s.real(), 0.125, ctx), ctx.target_abs_tol};
        return leftRhs(s, 2.0 * std::pow(2.0 * kPi, s.real() - 1.0), theta1, h, true);
      },
      ctx);
}

CheckReport checkRootGrowth(const RootTable& roots) {
  CheckReport report;
  report.check_id = "root-modulus-growth";
  const double r1 = roots.roots.at(0).r;
  for (const Root& root : roots.roots) {
    const int m = (root.index + 1) / 2;
    report.record("k=" + std::to_string(root.index), root.r, m * r1, root.r >= m * r1);
  }
  return report;
}

CheckReport checkBernoulliBound(int order, int nMax) {
  CheckReport report;
  report.check_id = "bernoulli-bound-2pi-n" + std::to_string(order);
  const BernoulliTable table = generalizedBernoulli(order, nMax);
  for (int n = order + 1; n <= nMax; ++n) {
    const double lhs = table[n].abs().toDouble();
    const double rhs = howardBounds(n, 1.0, order).bound_2pi;
    report.record("n=" + std::to_string(n), lhs, rhs, lhs < rhs * (1.0 - 1e-12));
  }
  return report;
}

CheckReport checkBernoulliR1Bound(double r1, int nMin, int nMax) {
  CheckReport report;
  report.check_id = "bernoulli-bound-r1";
  const BernoulliTable table = generalizedBernoulli(2, nMax);
  for (int n = nMin; n <= nMax; ++n) {
    const double lhs = table[n].abs().toDouble();
    const double rhs = howardBounds(n, r1, 2).bound_r1;
    report.record("n=" + std::to_string(n), lhs, rhs, lhs < rhs * (1.0 - 1e-12));
  }
  return report;
}

CheckReport checkHoward(int nMin, int nMax) {
  CheckReport report;
  report.check_id = "howard-conjecture";
  const BernoulliTable table = generalizedBernoulli(2, nMax);
  for (int n = nMin; n <= nMax; ++n) {
    const BigRational lhs = table[n].abs() * pow(BigRational(7), n);
    const BigRational rhs(factorial(n));
    report.record("n=" + std::to_string(n), table[n].abs().toDouble(), howardBounds(n, 1.0).bound_conj,
                  lhs < rhs);
  }
  return report;
}

CheckReport checkRootSumBernoulli(const std::vector<int>& ns, const PrecisionContext& ctx) {
  CheckReport report;
  report.check_id = "bernoulli-root-sum";
  const RootTable roots = rootTable(2, 200, ctx);
  const BernoulliTable exact = generalizedBernoulli(2, *std::max_element(ns.begin(), ns.end()));
  for (int n : ns) {
    const double target = exact[n].toDouble();
    try {
      const RootSumEstimate est = bernoulliViaRoots(2, n, roots, 1e-8);
      const double rel = std::abs(est.value - target) / std::abs(target);
      report.record("n=" + std::to_string(n), est.value, target, rel <= 1e-8);
    } catch (const Error& e) {
      report.record("n=" + std::to_string(n) + ": " + e.what(), 0.0, target, false);
    }
  }
  return report;
}

CheckReport crossRegionSuite(const std::vector<int>& orders, const PrecisionContext& ctx) {
  CheckReport report;
  report.check_id = "cross-region";
  for (int order : orders) {
    for (Complex s : {Complex(2.0, 0.0), Complex(3.0, 0.0), Complex(2.0, 1.0)}) {
      const EvalResult a = zetaRightSeries(order, s, ctx);
      const EvalResult b = zetaIntegral(order, s, ctx);
      const double diff = std::abs(a.value - b.value);
      report.record(fmtN(order, s) + " series/integral", diff, 1e-9, diff <= 1e-9);
    }
    const Complex half(-0.5, 0.0);
    const EvalResult strip = zetaStrip(order, half, ctx);
    const EvalResult left = zetaLeftSeries(order, half, ctx);
    const double diff = std::abs(strip.value - left.value);
    report.record(fmtN(order, half) + " strip/root-sum", diff, 1e-6, diff <= 1e-6);

    // five consecutive integers below 2 - N, keeping Re s < 0
    for (int n = std::min(1 - order, -1), last = n - 4; n >= last; --n) {
      const double exact = zetaNegativeInt(order, n).toDouble();
      const EvalResult l = zetaLeftSeries(order, Complex(n, 0.0), ctx);
      const double d = std::abs(l.value - exact);
      report.record(fmtN(order, n) + " root-sum/exact", d, l.abs_error_estimate, d <= l.abs_error_estimate);
    }
  }
  return report;
}

std::vector<std::string> suiteNames() {
  return {"all", "inequalities", "cross", "tables", "howard", "poles", "properties"};
}

std::vector<CheckReport> runSuite(const std::string& suite, const PrecisionContext& ctx) {
  ctx.validate();
  std::vector<CheckReport> out;
  auto append = [&](std::vector<CheckReport> more) {
    for (auto& r : more) out.push_back(std::move(r));
  };
  const bool all = suite == "all";
  bool known = all;
  if (all || suite == "tables") { append(tableSuite(ctx)); known = true; }
  if (all || suite == "inequalities") { append(inequalitySuite(ctx)); known = true; }
  if (all || suite == "howard") { append(howardSuite(ctx)); known = true; }
  if (all || suite == "cross") { out.push_back(crossRegionSuite({1, 2, 3}, ctx)); known = true; }
  if (all || suite == "poles") { append(poleSuite(ctx)); known = true; }
  if (all || suite == "properties") { append(propertySuite(ctx)); known = true; }
  if (!known) throw Error(ErrorKind::domain, "unknown suite '" + suite + "'");
  return out;
}

bool allAssertedPassed(const std::vector<CheckReport>& reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const CheckReport& r) { return !r.asserted || r.passed; });
}

std::string reportsJson(const std::vector<CheckReport>& reports) {
  nlohmann::json arr = nlohmann::json::array();
  for (const CheckReport& r : reports) {
    nlohmann::json failures = nlohmann::json::array();
    for (const CheckFailure& f : r.failures) {
      failures.push_back({{"input", f.input}, {"lhs", f.lhs}, {"rhs", f.rhs}});
    }
    arr.push_back({{"check_id", r.check_id},
                   {"points_tested", r.points_tested},
                   {"failures", failures},
                   {"passed", r.passed},
                   {"asserted", r.asserted}});
  }
  return arr.dump(2);
}

std::string reportsTable(const std::vector<CheckReport>& reports) {
  std::ostringstream out;
  char line[160];
  std::snprintf(line, sizeof line, "%-34s %8s %9s  %s\n", "check", "points", "failures", "status");
  out << line;
  for (const CheckReport& r : reports) {
    const char* status = !r.asserted ? "REPORT" : (r.passed ? "PASS" : "FAIL");
    std::snprintf(line, sizeof line, "%-34s %8d %9zu  %s\n", r.check_id.c_str(), r.points_tested,
                  r.failures.size(), status);
    out << line;
    for (const CheckFailure& f : r.failures) {
      std::snprintf(line, sizeof line, "    %s: lhs=%.10g rhs=%.10g\n", f.input.c_str(), f.lhs, f.rhs);
      out << line;
    }
  }
  return out.str();
}

}  // namespace hzeta
