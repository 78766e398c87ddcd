#pragma once

#include <string>
#include <vector>

#include "hzeta/big_rational.hpp"
#include "hzeta/roots.hpp"

namespace hzeta {

/// B_{N,0..nMax}, the Taylor coefficients of (w^N/N!) / (e^w - T_{N-1}(w))
/// scaled by n!.
struct BernoulliTable {
  int order = 0;
  std::vector<BigRational> values;

  const BigRational& operator[](std::size_t n) const { return values.at(n); }
  int maxN() const { return static_cast<int>(values.size()) - 1; }
};

/// Exact table by the recursion
///   B_{N,n} = -N! sum_{m<n} n! B_{N,m} / ((N+n-m)! m!).
/// N = 1 gives the classical Bernoulli numbers (B_1 = -1/2).
BernoulliTable generalizedBernoulli(int order, int nMax);

/// True when sum_{m=0}^{n} n! B_{N,m} / ((N+n-m)! m!) vanishes for every 1 <= n <= maxN.
bool satisfiesRecursion(const BernoulliTable& table);

struct RootSumEstimate {
  double value = 0.0;
  double tail_bound = 0.0;
  int roots_used = 0;
};

/// B_{N,n} ~ -(2 n!/N) sum_k r_k^{-n} cos(n theta_k) over the table's roots.
/// The tail bound is (2 n!/N)(2 pi)^{-n} K^{1-n}/(n-1), from r_k > 2 pi k.
/// Requires n > N. Throws insufficient_roots when the bound exceeds
/// rel_tol * |value|.
RootSumEstimate bernoulliViaRoots(int order, int n, const RootTable& roots, double rel_tol = 1e-8);

struct HowardBounds {
  double bound_2pi = 0.0;  ///< 2 n! / (N (2 pi)^n) * pi^2/6
  double bound_r1 = 0.0;  ///< 2 n! / r1^n
  double bound_conj = 0.0;  ///< n! / 7^n
};

HowardBounds howardBounds(int n, double r1, int order = 2);

/// {"order": N, "values": ["1", "-1/3", ...]} with optional decimal approximations.
std::string toJson(const BernoulliTable& table, bool exact = true);

}  // namespace hzeta
