#include "hzeta/cli.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hzeta/bernoulli.hpp"
#include "hzeta/error.hpp"
#include "hzeta/roots.hpp"
#include "hzeta/verify.hpp"
#include "hzeta/zeta.hpp"

namespace hzeta {

namespace {

std::string sig(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

std::string complexText(Complex v, int digits) {
  if (v.imag() == 0.0) return sig(v.real(), digits);
  std::string im = sig(v.imag(), digits);
  if (im.front() != '-') im = "+" + im;
  return sig(v.real(), digits) + im + "i";
}

void writeError(std::ostream& err, std::string_view kind, const std::string& message) {
  err << nlohmann::json{{"error", std::string(kind)}, {"message", message}}.dump() << '\n';
}

MethodChoice parseMethod(const std::string& name) {
  if (name == "series") return MethodChoice::series;
  if (name == "integral") return MethodChoice::integral;
  if (name == "strip") return MethodChoice::strip;
  if (name == "leftsum") return MethodChoice::leftsum;
  return MethodChoice::automatic;
}

struct Options {
  int order = 1;
  double re = 0.0;
  double im = 0.0;
  std::string method = "auto";
  double tol = 0.0;
  std::string format;
  int count = 10;
  int max_n = 10;
  bool exact = false;
  std::string suite = "all";
  std::vector<int> orders{1, 2, 3};
  double sigma_min = 1.1;
  double sigma_max = 5.0;
  double step = 0.05;
};

int doEval(const Options& o, std::ostream& out) {
  PrecisionContext ctx;
  if (o.tol > 0.0) ctx.target_abs_tol = o.tol;
  EvalOptions eo;
  eo.method = parseMethod(o.method);
  const Complex s(o.re, o.im);
  const EvalResult r = evaluate(o.order, s, ctx, eo);
  if (o.format == "json") {
    out << toJson(o.order, s, r) << '\n';
  } else {
    out << complexText(r.value, 11) << '\n';
  }
  return kExitOk;
}

int doRoots(const Options& o, std::ostream& out) {
  const RootTable table = rootTable(o.order, o.count);
  if (o.format == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (const Root& r : table.roots) {
      rows.push_back({{"k", r.index}, {"x", r.x}, {"y", r.y}, {"r", r.r}, {"theta", r.theta}, {"branch", r.branch}});
    }
    out << nlohmann::json{{"order", table.order}, {"certified", table.certified}, {"roots", rows}}.dump() << '\n';
  } else {
    writeCsv(table, out);
  }
  return kExitOk;
}

int doBernoulli(const Options& o, std::ostream& out) {
  const BernoulliTable table = generalizedBernoulli(o.order, o.max_n);
  if (o.format == "json") {
    out << toJson(table, o.exact) << '\n';
    return kExitOk;
  }
  out << "n,B\n";
  for (int n = 0; n <= table.maxN(); ++n) {
    out << n << ',' << (o.exact ? table[n].str() : sig(table[n].toDouble(), 10)) << '\n';
  }
  return kExitOk;
}

int doResidues(const Options& o, std::ostream& out) {
  out << "n,residue,decimal\n";
  for (int n = 1; n >= 2 - o.order; --n) {
    const BigRational r = residueAt(o.order, n);
    out << n << ',' << r.str() << ',' << sig(r.toDouble(), 10) << '\n';
  }
  return kExitOk;
}

int doVerify(const Options& o, std::ostream& out) {
  const auto reports = runSuite(o.suite);
  out << (o.format == "json" ? reportsJson(reports) + "\n" : reportsTable(reports));
  return allAssertedPassed(reports) ? kExitOk : kExitFailure;
}

int doPlot(const Options& o, std::ostream& out) {
  if (!(o.step > 0.0) || !(o.sigma_max >= o.sigma_min)) {
    throw CLI::ValidationError("plot-data", "need step > 0 and sigma-max >= sigma-min");
  }
  const long points = static_cast<long>(std::floor((o.sigma_max - o.sigma_min) / o.step + 1e-9)) + 1;
  if (points > 100000) throw CLI::ValidationError("plot-data", "grid exceeds 100000 points");
  out << "sigma";
  for (int n : o.orders) out << ",zeta" << n;
  out << '\n';
  for (long i = 0; i < points; ++i) {
    const double sigma = o.sigma_min + static_cast<double>(i) * o.step;
    out << sig(sigma, 10);
    for (int n : o.orders) out << ',' << sig(evaluate(n, Complex(sigma, 0.0)).value.real(), 10);
    out << '\n';
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hypergeometric zeta functions: evaluation, roots, Bernoulli numbers and checks", "hzeta"};
  app.require_subcommand(1, 1);
  Options o;
  const auto orderRange = CLI::Range(1, 64);

  auto* eval = app.add_subcommand("eval", "Evaluate zeta_N(s)");
  eval->add_option("--order", o.order, "order N")->required()->check(orderRange);
  eval->add_option("--re", o.re, "real part of s")->required();
  eval->add_option("--im", o.im, "imaginary part of s")->default_val(0.0);
  eval->add_option("--method", o.method, "evaluation route")
      ->check(CLI::IsMember({"auto", "series", "integral", "strip", "leftsum"}))
      ->default_val("auto");
  eval->add_option("--tol", o.tol, "absolute tolerance")->check(CLI::PositiveNumber);
  eval->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}))->default_val("text");

  auto* roots = app.add_subcommand("roots", "Nontrivial zeros of e^z - T_{N-1}(z) in the upper half-plane");
  roots->add_option("--order", o.order, "order N")->required()->check(orderRange);
  roots->add_option("--count", o.count, "number of roots")->required()->check(CLI::Range(1, 10000));
  roots->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->default_val("csv");

  auto* bern = app.add_subcommand("bernoulli", "Generalized Bernoulli numbers B_{N,0..M}");
  bern->add_option("--order", o.order, "order N")->required()->check(orderRange);
  bern->add_option("--max-n", o.max_n, "largest index M")->required()->check(CLI::Range(0, 500));
  bern->add_flag("--exact", o.exact, "print exact rationals p/q");
  bern->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->default_val("csv");

  auto* res = app.add_subcommand("residues", "Exact residues at the poles 2-N..1");
  res->add_option("--order", o.order, "order N")->required()->check(orderRange);

  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--suite", o.suite, "suite name")->check(CLI::IsMember(suiteNames()))->default_val("all");
  verify->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}))->default_val("text");

  auto* plot = app.add_subcommand("plot-data", "CSV of zeta_N(sigma) on a real grid");
  plot->add_option("--orders", o.orders, "comma-separated orders")->delimiter(',')->check(orderRange);
  plot->add_option("--sigma-min", o.sigma_min, "grid start")->default_val(1.1);
  plot->add_option("--sigma-max", o.sigma_max, "grid end")->default_val(5.0);
  plot->add_option("--step", o.step, "grid step")->default_val(0.05);

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    if (eval->parsed()) return doEval(o, out);
    if (roots->parsed()) return doRoots(o, out);
    if (bern->parsed()) return doBernoulli(o, out);
    if (res->parsed()) return doResidues(o, out);
    if (verify->parsed()) return doVerify(o, out);
    if (plot->parsed()) return doPlot(o, out);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    writeError(err, "usage", e.what());
    return kExitUsage;
  } catch (const Error& e) {
    writeError(err, to_string(e.kind()), e.what());
    return kExitFailure;
  } catch (const std::exception& e) {
    writeError(err, "internal", e.what());
    return kExitFailure;
  }
  writeError(err, "usage", "no subcommand given");
  return kExitUsage;
}

}  // namespace hzeta
