#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "hzeta/error.hpp"
#include "hzeta/numerics.hpp"

using hzeta::Complex;
using hzeta::kPi;

namespace {

// e^x - T_{n-1}(x) by direct subtraction in long double, with the tail summed
// separately so that tiny x keeps full relative accuracy.
long double tailOracle(long double x, int n) {
  long double term = 1.0L;
  for (int k = 1; k <= n; ++k) term *= x / k;
  long double sum = 0.0L;
  for (int k = n; k < n + 400; ++k) {
    sum += term;
    term *= x / (k + 1);
  }
  return sum;
}

// Composite 5-point Gauss-Legendre on [a, b] with m panels.
double gaussLegendre(const std::function<double(double)>& f, double a, double b, int m) {
  static const double nodes[] = {0.0, 0.5384693101056831, 0.9061798459386640};
  static const double weights[] = {0.5688888888888889, 0.4786286704993665, 0.2369268850561891};
  const double h = (b - a) / m;
  double total = 0.0;
  for (int i = 0; i < m; ++i) {
    const double mid = a + (i + 0.5) * h;
    double panel = weights[0] * f(mid);
    for (int j = 1; j < 3; ++j) {
      panel += weights[j] * (f(mid - 0.5 * h * nodes[j]) + f(mid + 0.5 * h * nodes[j]));
    }
    total += 0.5 * h * panel;
  }
  return total;
}

double cubicOverRemainder(double x) {
  // e^x - 1 - x = x^2 (1/2 + x/6 + ...), summed as a series below 1
  if (x < 1.0) {
    double term = 0.5, denom = 0.0;
    for (int k = 2; k < 30; ++k) {
      denom += term;
      term *= x / (k + 1);
    }
    return x / denom;
  }
  return x * x * x / std::expm1(x) / (1.0 - x / std::expm1(x));
}

}  // namespace

TEST_CASE("taylorPoly partial sums") {
  CHECK(hzeta::taylorPoly(0.0, 5) == Complex(1.0));
  CHECK(hzeta::taylorPoly(1.0, 1) == Complex(2.0));
  CHECK(std::abs(hzeta::taylorPoly(2.0, 3) - 19.0 / 3.0) < 1e-14);
  const Complex z(0.3, -1.2);
  Complex direct = 0.0, term = 1.0;
  for (int k = 0; k <= 7; ++k) {
    direct += term;
    term *= z / double(k + 1);
  }
  CHECK(std::abs(hzeta::taylorPoly(z, 7) - direct) < 1e-15);
}

TEST_CASE("expRemainder small and large arguments") {
  CHECK(hzeta::expRemainder(0.0, 2) == Complex(0.0));
  CHECK(std::abs(hzeta::expRemainder(1.0, 1) - (std::exp(1.0) - 1.0)) < 1e-15);

  const long double oracle = tailOracle(1e-6L, 3);
  const double got = hzeta::expRemainder(1e-6, 3).real();
  CHECK(std::abs((got - oracle) / oracle) < 1e-12);
  CHECK(std::abs(got / 1.6666666666666667e-19 - 1.0) < 1e-5);

  for (double x : {0.01, 0.5, 2.0, 7.0, 15.0, 40.0}) {
    for (int n : {1, 2, 3, 6}) {
      const long double ref = tailOracle(x, n);
      CHECK(std::abs(hzeta::expRemainder(x, n).real() - ref) <= 1e-13 * std::abs(ref));
    }
  }
}

TEST_CASE("expRemainder telescoping and conjugation on random points") {
  std::mt19937_64 rng(20240501);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  for (int i = 0; i < 200; ++i) {
    const Complex x(u(rng), u(rng));
    const int n = 1 + i % 6;
    const Complex lhs = hzeta::expRemainder(x, n);
    const Complex rhs = hzeta::expRemainder(x, n + 1) + std::pow(x, n) / std::tgamma(n + 1.0);
    const double scale = std::max({1.0, std::abs(std::exp(x)), std::pow(std::abs(x), n) / std::tgamma(n + 1.0)});
    CHECK(std::abs(lhs - rhs) <= 1e-12 * scale);
    CHECK(std::abs(hzeta::expRemainder(std::conj(x), n) - std::conj(lhs)) <= 1e-13 * scale);
  }
}

TEST_CASE("scaledExpRemainder stays finite at large x") {
  CHECK(std::abs(hzeta::scaledExpRemainder(800.0, 3) - 1.0) < 1e-15);
  const double x = 3.0;
  CHECK(std::abs(hzeta::scaledExpRemainder(x, 2).real() - (1.0 - (1.0 + x) * std::exp(-x))) < 1e-15);
}

TEST_CASE("complexGamma values and functional equations") {
  CHECK(std::abs(hzeta::complexGamma(1.0) - 1.0) < 1e-14);
  CHECK(std::abs(hzeta::complexGamma(0.5) - std::sqrt(kPi)) < 1e-14);
  CHECK(std::abs(hzeta::complexGamma(4.0) - 6.0) < 1e-13);
  CHECK(std::abs(hzeta::complexGamma(-0.5) + 2.0 * std::sqrt(kPi)) < 1e-13);
  CHECK_THROWS_AS(hzeta::complexGamma(-3.0), hzeta::Error);
  CHECK(hzeta::reciprocalGamma(-3.0) == Complex(0.0));

  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-6.0, 6.0);
  for (int i = 0; i < 100; ++i) {
    const Complex z(u(rng), u(rng));
    const Complex g = hzeta::complexGamma(z);
    CHECK(std::abs(hzeta::complexGamma(z + 1.0) - z * g) <= 1e-12 * std::abs(z * g));
    CHECK(std::abs(hzeta::complexGamma(std::conj(z)) - std::conj(g)) <= 1e-13 * std::abs(g));
    const Complex refl = g * hzeta::complexGamma(1.0 - z) * std::sin(kPi * z);
    CHECK(std::abs(refl - kPi) < 1e-10 * kPi);
  }
}

TEST_CASE("digammaInt and pochhammer") {
  CHECK(std::abs(hzeta::digammaInt(1) + hzeta::kEulerGamma) < 1e-15);
  CHECK(std::abs(hzeta::digammaInt(2) - 0.4227843351) < 1e-10);
  CHECK(std::abs(hzeta::digammaInt(3) - 0.9227843351) < 1e-10);
  CHECK(hzeta::pochhammer(Complex(3.7, 1.0), 0) == Complex(1.0));
  CHECK(std::abs(hzeta::pochhammer(1.0, 4) - 24.0) < 1e-13);
  CHECK(std::abs(hzeta::pochhammer(2.0, 2) - 6.0) < 1e-14);
  const Complex s(-1.3, 2.2);
  for (int k = 0; k < 10; ++k) {
    const Complex lhs = hzeta::pochhammer(s, k + 1);
    const Complex rhs = hzeta::pochhammer(s, k) * (s + double(k));
    CHECK(std::abs(lhs - rhs) <= 1e-13 * std::abs(rhs));
  }
}

TEST_CASE("quadrature over finite and semi-infinite ranges") {
  const auto finite = hzeta::integrateFinite([](double x) { return Complex(x * x); }, 0.0, 1.0);
  CHECK(std::abs(finite.value - 1.0 / 3.0) < 1e-14);

  const auto gamma2 = hzeta::integrateSemiInfinite([](double x) { return Complex(x * std::exp(-x)); });
  CHECK(std::abs(gamma2.value - 1.0) < 1e-12);

  const auto zeta2 = hzeta::integrateSemiInfinite([](double x) { return Complex(x / std::expm1(x)); });
  CHECK(std::abs(zeta2.value - kPi * kPi / 6.0) < 1e-12);

  // Two Gauss-Legendre resolutions must agree before the value is trusted.
  const double coarse = gaussLegendre(cubicOverRemainder, 0.0, 80.0, 800);
  const double fine = gaussLegendre(cubicOverRemainder, 0.0, 80.0, 1600);
  REQUIRE(std::abs(coarse - fine) < 1e-13);
  const auto got = hzeta::integrateSemiInfinite([](double x) { return Complex(cubicOverRemainder(x)); });
  CHECK(std::abs(got.value.real() - fine) < 1e-11);
  CHECK(got.converged);
}

TEST_CASE("hurwitzZeta against direct summation") {
  CHECK(std::abs(hzeta::hurwitzZeta(2.0, 0.0) - kPi * kPi / 6.0) < 1e-12);
  CHECK(std::abs(hzeta::hurwitzZeta(2.0, 1.0) - (kPi * kPi / 6.0 - 1.0)) < 1e-12);

  const double a = 0.125;
  const int terms = 1000000;
  long double sum = 0.0L;
  for (int n = terms; n >= 1; --n) sum += 1.0L / std::pow(static_cast<long double>(n) + a, 3);
  const long double edge = static_cast<long double>(terms) + 1 + a;
  // Euler-Maclaurin tail from n = terms + 1
  sum += 1.0L / (2.0L * edge * edge) + 1.0L / (2.0L * edge * edge * edge);
  CHECK(std::abs(hzeta::hurwitzZeta(3.0, a) - static_cast<double>(sum)) < 1e-12);
}
