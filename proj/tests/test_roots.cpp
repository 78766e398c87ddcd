#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>
#include <complex>
#include <sstream>

#include "hzeta/error.hpp"
#include "hzeta/roots.hpp"

using hzeta::Complex;
using hzeta::kPi;

namespace {

using Row = std::array<double, 4>;

// Printed reference tables: x, y, r, theta.
constexpr std::array<Row, 10> kPrintedN2{{
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

constexpr std::array<Row, 10> kPrintedN3{{
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

using LComplex = std::complex<long double>;

// Plain Newton on e^z - T_{N-1}(z) in long double.
LComplex newtonOracle(int order, LComplex z) {
  for (int it = 0; it < 50; ++it) {
    LComplex t = 1.0L, term = 1.0L, tPrev = 1.0L;
    for (int k = 1; k < order; ++k) {
      term *= z / static_cast<long double>(k);
      tPrev = t;
      t += term;
    }
    if (order == 1) tPrev = 0.0L;
    const LComplex f = std::exp(z) - t;
    const LComplex df = std::exp(z) - tPrev;
    const LComplex step = f / df;
    z -= step;
    if (std::abs(step) < 1e-17L * std::abs(z)) break;
  }
  return z;
}

Row oracleRow(int order, const Row& printed) {
  const LComplex z = newtonOracle(order, LComplex(printed[0], printed[1]));
  return {static_cast<double>(z.real()), static_cast<double>(z.imag()), static_cast<double>(std::abs(z)),
          static_cast<double>(std::arg(z))};
}

Row asRow(const hzeta::Root& r) { return {r.x, r.y, r.r, r.theta}; }

double worstDiff(const Row& a, const Row& b) {
  double w = 0.0;
  for (int c = 0; c < 4; ++c) w = std::max(w, std::abs(a[c] - b[c]));
  return w;
}

}  // namespace

TEST_CASE("brackets") {
  const auto b1 = hzeta::bracketN2(1);
  CHECK(b1.first == doctest::Approx(7.06858).epsilon(1e-6));
  CHECK(b1.second == doctest::Approx(7.85398).epsilon(1e-6));
  const auto b2 = hzeta::bracketN2(2);
  CHECK(b2.first == doctest::Approx(13.35177).epsilon(1e-6));
  CHECK(b2.second == doctest::Approx(14.13717).epsilon(1e-6));
  const auto c1 = hzeta::bracketN3(3);
  CHECK(std::abs(c1.first - 6.5 * kPi) < 1e-12);
  CHECK(std::abs(c1.second - 7.0 * kPi) < 1e-12);
  CHECK_THROWS_AS(hzeta::bracketN2(0), hzeta::Error);
}

TEST_CASE("one-dimensional solvers match an independent Newton oracle") {
  for (int k = 1; k <= 10; ++k) {
    CAPTURE(k);
    const Row o2 = oracleRow(2, kPrintedN2[k - 1]);
    const Row o3 = oracleRow(3, kPrintedN3[k - 1]);
    CHECK(worstDiff(asRow(hzeta::solveRootN2(k)), o2) < 1e-11);
    CHECK(worstDiff(asRow(hzeta::solveRootN3(k)), o3) < 1e-11);
  }
}

TEST_CASE("printed tables agree with the oracle except one misprinted entry") {
  for (int k = 1; k <= 10; ++k) {
    CAPTURE(k);
    CHECK(worstDiff(oracleRow(3, kPrintedN3[k - 1]), kPrintedN3[k - 1]) <= 1e-8);
    const Row o2 = oracleRow(2, kPrintedN2[k - 1]);
    if (k != 5) {
      CHECK(worstDiff(o2, kPrintedN2[k - 1]) <= 1e-8);
    } else {
      // 30-digit reference: 3.50126899688345497953 + 32.85054822814877524881i
      CHECK(std::abs(o2[0] - 3.501268996883455) < 1e-14);
      CHECK(std::abs(o2[1] - 32.85054822814878) < 1e-13);
      CHECK(std::abs(o2[0] - kPrintedN2[4][0]) > 1e-8);
      CHECK(std::abs(o2[0] - kPrintedN2[4][0]) < 2e-8);
    }
  }
}

TEST_CASE("root certificates bracket the imaginary part") {
  for (int order : {2, 3}) {
    const auto table = hzeta::rootTable(order, 50);
    CHECK(table.certified);
    for (const auto& root : table.roots) {
      REQUIRE(root.bracket.has_value());
      CHECK(root.y > root.bracket->lo);
      CHECK(root.y < root.bracket->hi);
      const auto b = order == 2 ? hzeta::bracketN2(root.index) : hzeta::bracketN3(root.index);
      CHECK(root.y > b.first);
      CHECK(root.y < b.second);
      CHECK(hzeta::scaledResidual(order, root.z()) < 1e-12);
    }
  }
}

TEST_CASE("refineRoot converges from nearby and conjugate seeds") {
  const auto up = hzeta::refineRoot(2, Complex(2.0, 7.5));
  CHECK(worstDiff(asRow(up), kPrintedN2[0]) < 1e-9);
  const auto down = hzeta::refineRoot(2, Complex(2.0, -7.5));
  CHECK(down.y > 0.0);
  CHECK(std::abs(down.y - up.y) < 1e-12);
  for (int q = 1; q <= 6; ++q) {
    const auto r = hzeta::refineRoot(3, hzeta::asymptoticSeed(3, q));
    CHECK(hzeta::scaledResidual(3, r.z()) < 1e-12);
  }
  CHECK_THROWS_AS(hzeta::refineRoot(2, Complex(0.1, 0.1)), hzeta::Error);
}

TEST_CASE("argument principle counts") {
  // double trivial zero plus two conjugate pairs below radius 20
  CHECK(hzeta::countZerosInDisk(2, 20.0) == 6);
  CHECK(hzeta::countZerosInDisk(3, 20.0) == 3 + 4);
  CHECK(hzeta::countZerosInDisk(1, 10.0) == 3);
}

TEST_CASE("tables for N = 1 and N >= 4") {
  const auto t1 = hzeta::rootTable(1, 5);
  for (const auto& r : t1.roots) {
    CHECK(r.x == 0.0);
    CHECK(std::abs(r.y - 2.0 * kPi * r.index) < 1e-12);
  }
  for (int order : {4, 5, 6}) {
    CAPTURE(order);
    const auto t = hzeta::rootTable(order, 12);
    REQUIRE(t.count() == 12);
    CHECK_NOTHROW(hzeta::checkOrdering(t));
    for (const auto& r : t.roots) {
      CHECK(hzeta::scaledResidual(order, r.z()) < 1e-12);
      const LComplex o = newtonOracle(order, LComplex(r.x, r.y));
      CHECK(std::abs(Complex(static_cast<double>(o.real()), static_cast<double>(o.imag())) - r.z()) < 1e-10);
    }
  }
}

TEST_CASE("ordering and modulus growth") {
  const auto t = hzeta::rootTable(2, 100);
  CHECK_NOTHROW(hzeta::checkOrdering(t));
  const double r1 = t.roots[0].r;
  for (const auto& root : t.roots) {
    const int m = (root.index + 1) / 2;
    CHECK(root.r >= m * r1);
    CHECK(root.theta < kPi / 2);
  }
  auto broken = t;
  std::swap(broken.roots[3], broken.roots[4]);
  CHECK_THROWS_AS(hzeta::checkOrdering(broken), hzeta::Error);
}

TEST_CASE("csv round trip") {
  const auto t = hzeta::rootTable(3, 10);
  std::stringstream ss;
  hzeta::writeCsv(t, ss);
  CHECK(ss.str().rfind("k,x,y,r,theta\n", 0) == 0);
  const auto back = hzeta::readCsv(3, ss);
  REQUIRE(back.count() == 10);
  for (std::size_t i = 0; i < 10; ++i) {
    CHECK(worstDiff(asRow(back.roots[i]), asRow(t.roots[i])) < 1e-8);
  }
}
