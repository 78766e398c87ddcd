#include "hzeta/roots.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>

#include "hzeta/error.hpp"

namespace hzeta {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kNewtonMaxIterations = 64;

void requireOrder(int order, int minimum) {
  if (order < minimum || order > 64) {
    throw Error(ErrorKind::domain, "root order N must lie in [" + std::to_string(minimum) + ", 64]");
  }
}

void requireIndex(int k) {
  if (k < 1) throw Error(ErrorKind::domain, "root index k must be positive");
}

Complex remainder(int order, Complex z) { return expRemainder(z, order); }

// e^z - T_{N-2}(z), the derivative of e^z - T_{N-1}(z).
Complex remainderDerivative(int order, Complex z) {
  return order == 1 ? std::exp(z) : expRemainder(z, order - 1);
}

double branchCentre(int order) { return 0.5 * (order - 1) * kPi; }

Complex centredLog(Complex w, double centre) {
  const double a = std::arg(w * std::polar(1.0, -centre)) + centre;
  return {std::log(std::abs(w)), a};
}

int branchOf(int order, Complex z) {
  if (order == 1) return static_cast<int>(std::lround(z.imag() / (2.0 * kPi)));
  const Complex l = centredLog(taylorPoly(z, order - 1), branchCentre(order));
  return static_cast<int>(std::lround((z.imag() - l.imag()) / (2.0 * kPi)));
}

Root makeRoot(int order, int index, Complex z) {
  Root root;
  root.order = order;
  root.index = index;
  root.x = z.real();
  root.y = z.imag();
  root.r = std::hypot(root.x, root.y);
  root.theta = std::atan2(root.y, root.x);
  root.branch = branchOf(order, z);
  return root;
}

// A few full complex Newton steps on e^z - T_{N-1}(z); a step is kept only if
// it lowers the residual.
Complex polish(int order, Complex z) {
  double best = scaledResidual(order, z);
  for (int i = 0; i < 4 && best > 0.0; ++i) {
    const Complex step = remainder(order, z) / remainderDerivative(order, z);
    const Complex trial = z - step;
    const double res = scaledResidual(order, trial);
    if (!(res < best)) break;
    z = trial;
    best = res;
  }
  return z;
}

void certify(const Root& root, const PrecisionContext& ctx) {
  const double res = scaledResidual(root.order, root.z());
  if (!(res <= ctx.root_tol)) {
    throw Error(ErrorKind::non_convergence,
                "root residual " + std::to_string(res) + " exceeds root_tol");
  }
  if (!(scaledDerivative(root.order, root.z()) > ctx.root_tol)) {
    throw Error(ErrorKind::non_convergence, "root failed the simplicity test");
  }
}

// Bisection down to adjacent doubles; f(lo) > 0 > f(hi) is assumed.
template <typename F>
double bisectDecreasing(F f, double lo, double hi) {
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    (fm > 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

// cos y + sqrt(1 - sin^2 y / y^2) without cancellation on cos y < 0.
double cosPlusRoot(double y, double s, double c) {
  const double root = std::sqrt(1.0 - (s / y) * (s / y));
  if (c >= 0.0) return c + root;
  return s * s * (1.0 - 1.0 / (y * y)) / (root - c);
}

}  // namespace

double scaledResidual(int order, Complex z) {
  const double scale = std::abs(taylorPoly(z, order - 1)) * std::max(1.0, std::abs(z));
  return std::abs(remainder(order, z)) / scale;
}

double scaledDerivative(int order, Complex z) {
  const double scale = std::abs(taylorPoly(z, order - 1)) * std::max(1.0, std::abs(z));
  return std::abs(remainderDerivative(order, z)) / scale;
}

// --- N = 2 -------------------------------------------------------------------

Interval bracketN2(int k) {
  requireIndex(k);
  return {(2.0 * k + 0.25) * kPi, (2.0 * k + 0.5) * kPi};
}

double bracketFnN2(double y) {
  const double s = std::sin(y);
  if (!(s > 0.0)) throw Error(ErrorKind::domain, "bracketFnN2 requires sin y > 0");
  return -1.0 + y * std::cos(y) / s - std::log(y / s);
}

Root solveRootN2(int k, const PrecisionContext& ctx) {
  const auto [lo, hi] = bracketN2(k);
  const double f_lo = bracketFnN2(lo);
  const double f_hi = bracketFnN2(hi);
  if (!(f_lo > 0.0 && f_hi < 0.0)) {
    throw Error(ErrorKind::bracket_failure, "no sign change of f on bracket k=" + std::to_string(k));
  }
  // coarse bisection, then Newton on f with f' = 2 cot y - y csc^2 y - 1/y
  double a = lo;
  double b = hi;
  while (b - a > 1e-6 * b) {
    const double mid = 0.5 * (a + b);
    (bracketFnN2(mid) > 0.0 ? a : b) = mid;
  }
  double y = 0.5 * (a + b);
  for (int i = 0; i < 20; ++i) {
    const double s = std::sin(y);
    const double cot = std::cos(y) / s;
    const double fy = bracketFnN2(y);
    if (std::abs(fy) <= ctx.root_tol * 1e-3) break;
    const double dfy = 2.0 * cot - y / (s * s) - 1.0 / y;
    double next = y - fy / dfy;
    if (!(next > a && next < b)) next = 0.5 * (a + b);
    (bracketFnN2(next) > 0.0 ? a : b) = next;
    const bool done = std::abs(next - y) <= 4.0 * kEps * y;
    y = next;
    if (done) break;
  }
  const double x = std::log(y / std::sin(y));
  Root root = makeRoot(2, k, polish(2, {x, y}));
  if (!(root.y > lo && root.y < hi)) {
    throw Error(ErrorKind::bracket_failure, "polished root left its bracket");
  }
  root.bracket = BracketCertificate{lo, hi, f_lo, f_hi};
  certify(root, ctx);
  return root;
}

// --- N = 3 -------------------------------------------------------------------

Interval bracketN3(int k) {
  requireIndex(k);
  return {(2.0 * k + 0.5) * kPi, (2.0 * k + 1.0) * kPi};
}

double bracketFnN3(double y) {
  const double s = std::sin(y);
  const double c = std::cos(y);
  if (!(y > 1.0)) throw Error(ErrorKind::domain, "bracketFnN3 requires y > 1");
  const double bracket = cosPlusRoot(y, s, c);
  // log argument y^2/sin^2 y * bracket, written so sin y -> 0 stays finite
  const double log_arg = c >= 0.0 ? y * y / (s * s) * bracket
                                  : (y * y - 1.0) / (std::sqrt(1.0 - (s / y) * (s / y)) - c);
  if (!(log_arg > 0.0) || !std::isfinite(log_arg)) {
    throw Error(ErrorKind::domain, "bracketFnN3: log argument is not positive");
  }
  return -s + y * bracket - s * std::log(log_arg);
}

Root solveRootN3(int k, const PrecisionContext& ctx) {
  const auto [lo, hi] = bracketN3(k);
  // F vanishes at (2k+1)pi itself; step inside before looking for the sign change.
  const double shrink = 1e-6 * kPi;
  const double a = lo + shrink;
  const double b = hi - shrink;
  const double f_a = bracketFnN3(a);
  const double f_b = bracketFnN3(b);
  if (!(f_a > 0.0)) {
    throw Error(ErrorKind::bracket_failure, "F not positive at lower end, k=" + std::to_string(k));
  }
  if (!(f_b < 0.0)) {
    throw Error(ErrorKind::no_interior_sign_change, "F has no interior sign change, k=" + std::to_string(k));
  }
  const double y = bisectDecreasing(bracketFnN3, a, b);
  const double s = std::sin(y);
  const double c = std::cos(y);
  // x = log[y (1 + x) / sin y] with 1 + x = (y / sin y)(cos y + sqrt(1 - sin^2 y / y^2))
  const double x = std::log(y * y / (s * s) * cosPlusRoot(y, s, c));
  Root root = makeRoot(3, k, polish(3, {x, y}));
  if (!(root.y > lo && root.y < hi)) {
    throw Error(ErrorKind::bracket_failure, "polished root left its bracket");
  }
  root.bracket = BracketCertificate{a, b, f_a, f_b};
  certify(root, ctx);
  return root;
}

// --- general N ---------------------------------------------------------------

Complex asymptoticSeed(int order, int q) {
  requireOrder(order, 2);
  const int d = order - 1;
  const double log_dfact = std::lgamma(d + 1.0);
  const double y = 2.0 * q * kPi + 0.5 * d * kPi;
  if (!(y - log_dfact > d)) {
    throw Error(ErrorKind::out_of_range, "asymptoticSeed: q too small for the large-modulus regime");
  }
  return {d * std::log(y) - log_dfact, y};
}

Root refineRoot(int order, Complex seed, const PrecisionContext& ctx) {
  requireOrder(order, 1);
  Complex z = seed;
  double res = scaledResidual(order, z);
  bool converged = res <= ctx.root_tol;
  for (int it = 0; it < kNewtonMaxIterations && !converged; ++it) {
    const Complex step = remainder(order, z) / remainderDerivative(order, z);
    double damping = 1.0;
    Complex trial = z - step;
    double trial_res = scaledResidual(order, trial);
    while (!(trial_res < res) && damping > 1e-6) {
      damping *= 0.5;
      trial = z - damping * step;
      trial_res = scaledResidual(order, trial);
    }
    z = trial;
    res = trial_res;
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) break;
    converged = res <= ctx.root_tol;
  }
  if (!converged) {
    throw Error(ErrorKind::non_convergence, "refineRoot did not converge");
  }
  z = polish(order, z);
  if (std::abs(z) < 0.5) {
    throw Error(ErrorKind::converged_to_trivial_root, "refineRoot converged to z = 0");
  }
  if (std::abs(z.imag()) < 1e-8 * std::abs(z)) {
    throw Error(ErrorKind::non_convergence, "refineRoot converged to the real axis");
  }
  if (z.imag() < 0.0) z = std::conj(z);
  Root root = makeRoot(order, 0, z);
  certify(root, ctx);
  return root;
}

Complex branchPoint(int order, double q, Complex seed) {
  requireOrder(order, 1);
  if (order == 1) return {0.0, 2.0 * kPi * q};
  const double centre = branchCentre(order);
  Complex z = seed;
  for (int it = 0; it < 60; ++it) {
    const Complex t = taylorPoly(z, order - 1);
    const Complex g = z - centredLog(t, centre) - Complex(0.0, 2.0 * kPi * q);
    // d/dz [z - Log T_{N-1}(z)] = 1 - T_{N-2}/T_{N-1}
    const Complex dg = 1.0 - taylorPoly(z, order - 2) / t;
    const Complex step = g / dg;
    z -= step;
    if (std::abs(step) <= 8.0 * kEps * std::abs(z)) return z;
  }
  throw Error(ErrorKind::non_convergence, "branchPoint did not converge");
}

int countZerosInDisk(int order, double radius) {
  requireOrder(order, 1);
  if (!(radius > 0.0) || radius > 700.0) {
    throw Error(ErrorKind::domain, "countZerosInDisk requires 0 < radius <= 700");
  }
  for (long samples = std::max(512L, static_cast<long>(16 * radius)); samples <= (1L << 22);
       samples *= 2) {
    double total = 0.0;
    double prev = std::arg(remainder(order, Complex(radius, 0.0)));
    bool resolved = true;
    for (long i = 1; i <= samples; ++i) {
      const double phi = 2.0 * kPi * static_cast<double>(i) / static_cast<double>(samples);
      const double a = std::arg(remainder(order, std::polar(radius, phi)));
      double delta = a - prev;
      while (delta > kPi) delta -= 2.0 * kPi;
      while (delta < -kPi) delta += 2.0 * kPi;
      if (std::abs(delta) > 0.25 * kPi) {
        resolved = false;
        break;
      }
      total += delta;
      prev = a;
    }
    if (resolved) return static_cast<int>(std::lround(total / (2.0 * kPi)));
  }
  throw Error(ErrorKind::non_convergence, "countZerosInDisk could not resolve the winding");
}

namespace {

RootTable generalTable(int order, int count, const PrecisionContext& ctx) {
  std::vector<Root> found;
  auto addCandidate = [&](const Root& candidate) {
    for (const Root& r : found) {
      if (std::abs(r.z() - candidate.z()) <= 1e-8 * r.r) return;
    }
    found.push_back(candidate);
  };
  auto trySeed = [&](Complex seed) {
    try {
      addCandidate(refineRoot(order, seed, ctx));
    } catch (const Error&) {
      // a seed that wanders off is simply discarded
    }
  };

  const int d = order - 1;
  int q_hi = count + order + 4;
  for (int q = -order; q <= q_hi; ++q) {
    const double y = std::max(2.0 * q * kPi + 0.5 * d * kPi, 1.0);
    const Complex seed(d * std::log(y) - std::lgamma(d + 1.0), y);
    trySeed(seed);
    try {
      trySeed(branchPoint(order, q, seed));
    } catch (const Error&) {
    }
  }
  std::sort(found.begin(), found.end(), [](const Root& a, const Root& b) { return a.r < b.r; });
  if (static_cast<int>(found.size()) < count + 1) {
    throw Error(ErrorKind::incomplete_enumeration, "too few roots located for N=" + std::to_string(order));
  }
  const double radius = 0.5 * (found[count - 1].r + found[count].r);
  const int zeros = countZerosInDisk(order, radius);
  if (zeros != order + 2 * count) {
    throw Error(ErrorKind::incomplete_enumeration,
                "argument principle counts " + std::to_string(zeros) + " zeros, expected " +
                    std::to_string(order + 2 * count));
  }
  RootTable table;
  table.order = order;
  table.certified = false;
  for (int k = 1; k <= count; ++k) {
    Root root = found[k - 1];
    root.index = k;
    table.roots.push_back(root);
  }
  return table;
}

}  // namespace

RootTable rootTable(int order, int count, const PrecisionContext& ctx) {
  requireOrder(order, 1);
  if (count < 1) throw Error(ErrorKind::domain, "rootTable requires count >= 1");
  RootTable table;
  table.order = order;
  if (order == 1) {
    table.certified = true;
    for (int k = 1; k <= count; ++k) {
      table.roots.push_back(makeRoot(1, k, {0.0, 2.0 * kPi * k}));
    }
    return table;
  }
  if (order == 2 || order == 3) {
    table.certified = true;
    table.roots.reserve(count);
    for (int k = 1; k <= count; ++k) {
      table.roots.push_back(order == 2 ? solveRootN2(k, ctx) : solveRootN3(k, ctx));
    }
  } else {
    table = generalTable(order, count, ctx);
  }
  checkOrdering(table);
  return table;
}

void checkOrdering(const RootTable& table) {
  const auto& roots = table.roots;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (table.order >= 2 && !(roots[i].theta < 0.5 * kPi)) {
      throw Error(ErrorKind::ordering_violation, "root angle reached pi/2");
    }
    if (i == 0) continue;
    if (!(roots[i].r > roots[i - 1].r)) {
      throw Error(ErrorKind::ordering_violation,
                  "modulus not strictly increasing at k=" + std::to_string(roots[i].index));
    }
    if (table.order >= 2 && table.order <= 3 && !(roots[i].theta > roots[i - 1].theta)) {
      throw Error(ErrorKind::ordering_violation,
                  "angle not strictly increasing at k=" + std::to_string(roots[i].index));
    }
  }
}

ModulusBounds modulusBounds(int order, double radius) {
  requireOrder(order, 2);
  const int d = order - 1;
  if (!(radius > d)) throw Error(ErrorKind::domain, "modulusBounds requires R > N - 1");
  const double eps = d / radius;
  const double geometric = (1.0 - std::pow(eps, d + 1)) / (1.0 - eps);
  const double dfact = std::tgamma(d + 1.0);
  ModulusBounds m;
  m.radius = radius;
  m.a = geometric / dfact;
  m.b = (2.0 - geometric) / dfact;
  m.a1 = std::sqrt(std::pow(m.a, -2.0 / d) - 1.0 / radius);
  m.b1 = std::pow(m.b, -1.0 / d);
  return m;
}

void writeCsv(const RootTable& table, std::ostream& out) {
  out << "k,x,y,r,theta\n";
  char line[160];
  for (const Root& root : table.roots) {
    std::snprintf(line, sizeof line, "%d,%.10g,%.10g,%.10g,%.10g\n", root.index, root.x, root.y,
                  root.r, root.theta);
    out << line;
  }
}

RootTable readCsv(int order, std::istream& in) {
  RootTable table;
  table.order = order;
  std::string line;
  if (!std::getline(in, line) || line != "k,x,y,r,theta") {
    throw Error(ErrorKind::domain, "root CSV: missing header k,x,y,r,theta");
  }
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream fields(line);
    Root root;
    root.order = order;
    char comma = 0;
    if (!(fields >> root.index >> comma >> root.x >> comma >> root.y >> comma >> root.r >> comma >>
          root.theta)) {
      throw Error(ErrorKind::domain, "root CSV: malformed row '" + line + "'");
    }
    root.branch = branchOf(order, root.z());
    table.roots.push_back(root);
  }
  return table;
}

}  // namespace hzeta
