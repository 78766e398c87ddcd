#include "hzeta/bernoulli.hpp"

#include <cmath>
#include <cstdio>

#include <json.hpp>

#include "hzeta/error.hpp"

namespace hzeta {

namespace {

std::vector<BigInt> factorialTable(int upTo) {
  std::vector<BigInt> f(upTo + 1);
  f[0] = 1;
  for (int i = 1; i <= upTo; ++i) f[i] = f[i - 1] * i;
  return f;
}

}  // namespace

BernoulliTable generalizedBernoulli(int order, int nMax) {
  if (order < 1) throw Error(ErrorKind::domain, "generalizedBernoulli requires N >= 1");
  if (nMax < 0 || nMax > 500) {
    throw Error(ErrorKind::domain, "generalizedBernoulli requires 0 <= nMax <= 500");
  }
  const auto fact = factorialTable(order + nMax);
  BernoulliTable table;
  table.order = order;
  table.values.reserve(nMax + 1);
  table.values.emplace_back(1);
  for (int n = 1; n <= nMax; ++n) {
    mpq_class sum = 0;
    for (int m = 0; m < n; ++m) {
      // n! / ((N+n-m)! m!) written as (n!/m!) / (N+n-m)!
      sum += mpq_class(fact[n] / fact[m], fact[order + n - m]) * table.values[m].raw();
    }
    table.values.emplace_back(mpq_class(-sum * fact[order]));
  }
  return table;
}

bool satisfiesRecursion(const BernoulliTable& table) {
  const int nMax = table.maxN();
  const auto fact = factorialTable(table.order + nMax);
  for (int n = 1; n <= nMax; ++n) {
    mpq_class sum = 0;
    for (int m = 0; m <= n; ++m) {
      sum += mpq_class(fact[n], fact[table.order + n - m] * fact[m]) * table.values[m].raw();
    }
    if (sum != 0) return false;
  }
  return true;
}

RootSumEstimate bernoulliViaRoots(int order, int n, const RootTable& roots, double rel_tol) {
  if (order < 1 || roots.order != order) {
    throw Error(ErrorKind::domain, "bernoulliViaRoots: root table order mismatch");
  }
  if (n <= order) throw Error(ErrorKind::domain, "bernoulliViaRoots requires n > N");
  if (roots.count() < 2) throw Error(ErrorKind::insufficient_roots, "bernoulliViaRoots needs K >= 2 roots");

  const double log_nfact = std::lgamma(n + 1.0);
  double sum = 0.0;
  for (const Root& root : roots.roots) {
    sum += std::exp(log_nfact - n * std::log(root.r)) * std::cos(n * root.theta);
  }
  const double K = static_cast<double>(roots.count());
  RootSumEstimate est;
  est.roots_used = static_cast<int>(roots.count());
  est.value = -2.0 / order * sum;
  est.tail_bound = 2.0 / order *
                   std::exp(log_nfact - n * std::log(2.0 * kPi) + (1.0 - n) * std::log(K)) / (n - 1.0);
  if (est.tail_bound > rel_tol * std::abs(est.value)) {
    char msg[96];
    std::snprintf(msg, sizeof msg, "root-sum tail bound %.3g exceeds %.3g relative", est.tail_bound, rel_tol);
    throw Error(ErrorKind::insufficient_roots, msg);
  }
  return est;
}

HowardBounds howardBounds(int n, double r1, int order) {
  if (n < 1 || !(r1 > 0.0) || order < 1) throw Error(ErrorKind::domain, "howardBounds: bad arguments");
  const double log_nfact = std::lgamma(n + 1.0);
  HowardBounds b;
  b.bound_2pi = 2.0 / order * std::exp(log_nfact - n * std::log(2.0 * kPi)) * kPi * kPi / 6.0;
  b.bound_r1 = 2.0 * std::exp(log_nfact - n * std::log(r1));
  b.bound_conj = std::exp(log_nfact - n * std::log(7.0));
  return b;
}

std::string toJson(const BernoulliTable& table, bool exact) {
  nlohmann::json values = nlohmann::json::array();
  for (const BigRational& v : table.values) {
    if (exact) {
      values.push_back(v.str());
    } else {
      values.push_back(v.toDouble());
    }
  }
  return nlohmann::json{{"order", table.order}, {"values", values}}.dump();
}

}  // namespace hzeta
