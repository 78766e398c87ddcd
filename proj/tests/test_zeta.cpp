#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <json.hpp>

#include "hzeta/bernoulli.hpp"
#include "hzeta/error.hpp"
#include "hzeta/zeta.hpp"

using hzeta::BigRational;
using hzeta::Complex;
using hzeta::kPi;

namespace {

BigRational q(long p, long d) { return BigRational(hzeta::BigInt(p), hzeta::BigInt(d)); }

struct Reference {
  int order;
  Complex s;
  Complex value;
};

// 30-digit continuation computed independently (series expansion on [0, 1],
// direct quadrature on [1, inf)), frozen here.
const Reference kReferences[] = {
    {2, {2.0, 0.0}, {2.2405525442385601, 0.0}},
    {2, {2.0, 1.0}, {1.3098343884665695, -0.80903852019688939}},
    {3, {2.0, 1.0}, {1.4623800840224327, -1.1556434436408478}},
    {3, {2.5, 0.0}, {1.9854196904529033, 0.0}},
    {2, {1.05, 0.0}, {39.882399114642576, 0.0}},
    {4, {3.0, 0.0}, {1.8052588507001012, 0.0}},
    {2, {0.5, 3.0}, {0.34981803098973402, -0.22994153510748958}},
    {1, {-0.5, 0.0}, {-0.20788622497735457, 0.0}},
    {2, {-0.5, 0.0}, {0.42003556293494465, 0.0}},
    {3, {-0.5, 0.0}, {1.5560068024255545, 0.0}},
    {4, {-0.5, 0.0}, {2.8609219912352571, 0.0}},
    {2, {-1.5, 2.0}, {0.01993997099565415, -0.05321555633880638}},
    {2, {-3.0, 5.0}, {-0.039759463400215453, 0.15320472537431839}},
    {3, {-2.5, -1.0}, {-0.0041614957297214228, -0.0014365926701992889}},
    {2, {-2.5, 0.0}, {-0.0023940483247112261, 0.0}},
};

}  // namespace

TEST_CASE("dispatcher matches frozen high-precision references") {
  for (const auto& ref : kReferences) {
    CAPTURE(ref.order);
    CAPTURE(ref.s);
    const auto r = hzeta::evaluate(ref.order, ref.s);
    const double tol = 1e-10 * std::max(1.0, std::abs(ref.value));
    CHECK(std::abs(r.value - ref.value) < tol);
    CHECK(std::abs(r.value - ref.value) <= std::max(10.0 * r.abs_error_estimate, 1e-13));
  }
}

TEST_CASE("classical anchors") {
  CHECK(std::abs(hzeta::zetaRightSeries(1, 2.0).value - kPi * kPi / 6.0) < 1e-12);
  CHECK(std::abs(hzeta::zetaIntegral(1, 2.0).value - kPi * kPi / 6.0) < 1e-12);
  CHECK(std::abs(hzeta::zetaIntegral(1, 3.0).value - 1.2020569031595942) < 1e-12);
  CHECK(std::abs(hzeta::zetaStrip(1, 0.5).value + 1.4603545088095868) < 1e-10);
  const auto m1 = hzeta::evaluate(1, -1.0);
  CHECK(m1.method == hzeta::Method::exact_negative_integer);
  CHECK(m1.value == Complex(-1.0 / 12.0));
}

TEST_CASE("routes agree where they overlap") {
  for (int order = 1; order <= 3; ++order) {
    for (Complex s : {Complex(2.0), Complex(3.0), Complex(2.0, 1.0)}) {
      const auto a = hzeta::zetaRightSeries(order, s);
      const auto b = hzeta::zetaIntegral(order, s);
      CHECK(std::abs(a.value - b.value) < 1e-8);
    }
  }
  for (int order : {2, 3}) {
    const auto strip = hzeta::zetaStrip(order, -0.5);
    const auto left = hzeta::zetaLeftSeries(order, -0.5);
    CHECK(std::abs(strip.value - left.value) < 1e-6);
  }
  for (int order = 1; order <= 3; ++order) {
    for (int n : {-1, -2, -3}) {
      if (n >= 2 - order) continue;
      const auto left = hzeta::zetaLeftSeries(order, double(n));
      const double exact = hzeta::zetaNegativeInt(order, n).toDouble();
      CHECK(std::abs(left.value - exact) <= left.abs_error_estimate + 1e-15);
    }
  }
}

TEST_CASE("mu coefficients") {
  for (int n = 1; n <= 8; ++n) {
    const auto c = hzeta::polyPowerCoeffs(2, n);
    for (int k = 0; k < n; ++k) CHECK(c.poly_coeffs[k] == BigRational(hzeta::binomial(n - 1, k)));
  }
  CHECK(hzeta::polyPowerCoeffs(5, 1).poly_coeffs == std::vector<BigRational>{1});
  CHECK(hzeta::polyPowerCoeffs(3, 3).poly_coeffs == std::vector<BigRational>{1, 2, 2, 1, q(1, 4)});
  CHECK(std::abs(hzeta::muCoefficient(2, 3, 1.0) - 3.0) < 1e-13);
  CHECK(std::abs(hzeta::muCoefficient(1, 9, Complex(0.3, 2.0)) - 1.0) < 1e-15);
  for (int order = 1; order <= 4; ++order) {
    for (int n = 1; n <= 30; ++n) {
      hzeta::BigInt power = 1;
      for (int i = 1; i < order; ++i) power *= n;
      CHECK(hzeta::muCoefficientExact(order, n, BigRational(1)) == BigRational(power));
    }
  }
}

TEST_CASE("exact values at negative integers and residues") {
  CHECK(hzeta::zetaNegativeInt(1, -1) == q(-1, 12));
  CHECK(hzeta::zetaNegativeInt(2, -1) == q(1, 18));
  CHECK(hzeta::zetaNegativeInt(2, -2) == q(-1, 270));
  CHECK(std::abs(hzeta::zetaLeftSeries(2, -1.0).value - 1.0 / 18.0) < 1e-10);
  CHECK(hzeta::evaluate(2, -1.0).value == Complex(1.0 / 18.0));
  for (int order = 1; order <= 4; ++order) CHECK(hzeta::residueAt(order, 1) == BigRational(order));
  CHECK(hzeta::residueAt(2, 0) == q(-2, 3));
  CHECK(hzeta::residueAt(3, -1) == q(3, 40));
  for (int order = 2; order <= 6; ++order) {
    CHECK(hzeta::residueAt(order, 0) == q(-order * (order - 1), order + 1));
  }
}

TEST_CASE("behaviour near s = 1") {
  CHECK(std::abs(hzeta::limitAtOne(1) - hzeta::kEulerGamma) < 1e-12);
  const double g = 0.57721566490153286;
  CHECK(std::abs(hzeta::limitAtOne(2) - (std::log(2.0) - 2.0 * (1.0 - g))) < 1e-14);
  CHECK(std::abs(hzeta::limitAtOne(3) - (std::log(6.0) - 3.0 * (1.5 - g))) < 1e-14);
  CHECK(std::abs(hzeta::limitAtOne(2) + 0.15242148963) < 1e-10);
  for (int order = 1; order <= 3; ++order) {
    CHECK(std::abs(hzeta::limitAtOneProbe(order, 1e-4) - hzeta::limitAtOne(order)) < 1e-3);
  }
  CHECK(std::abs(hzeta::limitAtOneProbe(1, 1e-4) - hzeta::kEulerGamma) < 1e-3);
  hzeta::EvalOptions near;
  near.residue_mode = true;
  for (int order = 1; order <= 4; ++order) {
    const double h = 1e-4;
    CHECK(std::abs(h * hzeta::evaluate(order, 1.0 + h, {}, near).value.real() - order) < 1e-2);
  }
}

TEST_CASE("contour function") {
  for (int order = 1; order <= 3; ++order) {
    for (int n = 2; n <= 5; ++n) CHECK(hzeta::contourFunction(order, double(n)) == Complex(0.0));
  }
  CHECK(hzeta::contourFunction(1, 1.0) == Complex(-1.0));
  CHECK(hzeta::contourFunction(2, 1.0) == Complex(2.0));
  for (int order = 1; order <= 3; ++order) {
    const double h = 1e-3;
    const Complex d = (hzeta::contourFunction(order, 1.0 + h) - hzeta::contourFunction(order, 1.0 - h)) / (2 * h);
    const double sign = order % 2 == 0 ? 1.0 : -1.0;
    const double expected = sign * std::tgamma(order) * std::log(std::tgamma(order + 1.0));
    CHECK(std::abs(d.real() - expected) < 1e-5);
  }
}

TEST_CASE("conjugation symmetry across regions") {
  for (int order = 1; order <= 3; ++order) {
    for (Complex s : {Complex(2.5, 1.5), Complex(0.4, 2.0), Complex(-1.7, 3.0), Complex(-4.2, -0.8)}) {
      const Complex a = hzeta::evaluate(order, s).value;
      const Complex b = hzeta::evaluate(order, std::conj(s)).value;
      CHECK(std::abs(a - std::conj(b)) <= 1e-10 * std::max(1.0, std::abs(a)));
    }
  }
}

TEST_CASE("pole guard, method selection and errors") {
  CHECK_THROWS_AS(hzeta::evaluate(2, 1.0), hzeta::Error);
  CHECK_THROWS_AS(hzeta::evaluate(3, 1e-7), hzeta::Error);
  CHECK_THROWS_AS(hzeta::evaluate(3, -1.0), hzeta::Error);
  CHECK_NOTHROW(hzeta::evaluate(3, -1.0 + 1e-3));
  CHECK_THROWS_AS(hzeta::zetaRightSeries(2, 0.5), hzeta::Error);
  CHECK_THROWS_AS(hzeta::zetaLeftSeries(2, 0.5), hzeta::Error);
  try {
    hzeta::evaluate(2, 0.0);
    FAIL("expected a pole error");
  } catch (const hzeta::Error& e) {
    CHECK(e.kind() == hzeta::ErrorKind::pole);
  }
  hzeta::EvalOptions opts;
  opts.method = hzeta::MethodChoice::integral;
  CHECK(hzeta::evaluate(2, 3.0, {}, opts).method == hzeta::Method::right_integral);
  opts.cross_check = true;
  opts.method = hzeta::MethodChoice::automatic;
  CHECK_NOTHROW(hzeta::evaluate(2, Complex(-1.5, 0.5), {}, opts));
}

TEST_CASE("json shape") {
  const auto r = hzeta::evaluate(1, 2.0);
  const auto j = nlohmann::json::parse(hzeta::toJson(1, 2.0, r));
  CHECK(j["order"] == 1);
  CHECK(j["method"] == "right-series");
  CHECK(j["region"] == "right");
  CHECK(std::abs(j["value"]["re"].get<double>() - kPi * kPi / 6.0) < 1e-12);
}
