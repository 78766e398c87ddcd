#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hzeta/numerics.hpp"
#include "hzeta/precision.hpp"

namespace hzeta {

/// Sign-change witness for a root located by a 1-D reduction.
struct BracketCertificate {
  double lo = 0.0;
  double hi = 0.0;
  double f_lo = 0.0;  ///< reduction function at lo (shrunk endpoint for N = 3)
  double f_hi = 0.0;
};

/// Nontrivial zero z = x + iy (y > 0) of e^z - T_{N-1}(z).
struct Root {
  int order = 0;
  int index = 0;
  double x = 0.0;
  double y = 0.0;
  double r = 0.0;
  double theta = 0.0;
  /// Integer q with y = Im Log T_{N-1}(z) + 2 pi q, Log branch centred on (N-1) pi/2.
  int branch = 0;
  std::optional<BracketCertificate> bracket;

  Complex z() const { return {x, y}; }
};

struct RootTable {
  int order = 0;
  std::vector<Root> roots;
  /// True for N <= 3, where every root carries a lemma-backed bracket
  /// (or is known in closed form for N = 1).
  bool certified = false;

  std::size_t count() const { return roots.size(); }
};

using Interval = std::pair<double, double>;

// --- residuals -------------------------------------------------------------

/// |e^z - T_{N-1}(z)| / (|T_{N-1}(z)| max(1, |z|)). A root accepted at
/// root_tol has relative accuracy about root_tol.
double scaledResidual(int order, Complex z);

/// |e^z - T_{N-2}(z)| / (|T_{N-1}(z)| max(1, |z|)); the derivative test for simplicity.
double scaledDerivative(int order, Complex z);

// --- N = 2: e^z = 1 + z ----------------------------------------------------

Interval bracketN2(int k);
/// f(y) = -1 + y cot y - log(y / sin y).
double bracketFnN2(double y);
Root solveRootN2(int k, const PrecisionContext& ctx = {});

// --- N = 3: e^z = 1 + z + z^2/2 --------------------------------------------

Interval bracketN3(int k);
/// F(y) = -sin y + y (cos y + sqrt(1 - sin^2 y / y^2)) - sin y log[...].
double bracketFnN3(double y);
Root solveRootN3(int k, const PrecisionContext& ctx = {});

// --- general N -------------------------------------------------------------

/// Large-modulus estimate of the root on branch q (degree d = N - 1):
/// y ~ 2 q pi + d pi/2, x ~ d log y - log d!.
Complex asymptoticSeed(int order, int q);

/// Damped Newton on e^z - T_{N-1}(z). Lower-half-plane limits are reflected;
/// the index is left at 0 for the caller to assign.
Root refineRoot(int order, Complex seed, const PrecisionContext& ctx = {});

/// Point on the continuous root curve z = Log T_{N-1}(z) + 2 pi i q for real
/// (not necessarily integer) q. Integer q reproduces the roots.
Complex branchPoint(int order, double q, Complex seed);

/// Number of zeros of e^z - T_{N-1}(z) in |z| < radius, counted with
/// multiplicity (the trivial zero contributes N), by the argument principle.
int countZerosInDisk(int order, double radius);

/// First K roots ordered by modulus. N = 1 uses the closed form 2 pi i k;
/// N = 2, 3 use the 1-D reductions; N >= 4 uses seeds plus refinement.
RootTable rootTable(int order, int count, const PrecisionContext& ctx = {});

/// Throws Error(ordering_violation) unless r and theta strictly increase and
/// theta < pi/2.
void checkOrdering(const RootTable& table);

// --- asymptotic seeds ------------------------------------------------------

/// Constants of the modulus lemma for polynomial degree d = N - 1 and radius R.
struct ModulusBounds {
  double radius = 0.0;
  double a = 0.0;
  double b = 0.0;
  double a1 = 0.0;
  double b1 = 0.0;
};

ModulusBounds modulusBounds(int order, double radius);

// --- export ----------------------------------------------------------------

/// CSV with header k,x,y,r,theta and 10 significant digits.
void writeCsv(const RootTable& table, std::ostream& out);
RootTable readCsv(int order, std::istream& in);

}  // namespace hzeta
