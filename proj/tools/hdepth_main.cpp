// hdepth: Hilbert depth of Hilbert functions, with certificates and verification batteries.
//
// Exit codes: 0 success, 1 a mathematical property was violated, 2 bad input or configuration.

#include "hdepth/errors.hpp"
#include "hdepth/hilbert.hpp"
#include "hdepth/hyp.hpp"
#include "hdepth/json_io.hpp"
#include "hdepth/qdepth.hpp"
#include "hdepth/spec.hpp"
#include "hdepth/squarefree.hpp"
#include "hdepth/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace {

using hdepth::Integer;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInput = 2;
constexpr std::uint64_t kDefaultSeed = 1;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

// "@path" reads the argument from a file.
std::string resolveArgument(const std::string& arg) {
  if (arg.empty() || arg[0] != '@') return arg;
  std::ifstream in(arg.substr(1));
  if (!in) throw InputError("cannot read " + arg.substr(1));
  std::stringstream buffer;
  buffer << in.rdbuf();
  return trim(buffer.str());
}

// DSL text, or the JSON function form when the text is a JSON object.
hdepth::HilbertFunction loadFunction(const std::string& text) {
  if (!text.empty() && text[0] == '{') {
    json doc;
    try {
      doc = json::parse(text);
    } catch (const json::parse_error& e) {
      throw hdepth::ParseError(e.byte, {"JSON"}, e.what());
    }
    return hdepth::hilbertFromJson(doc);
  }
  return hdepth::parseFunction(text);
}

std::string formatValues(const std::vector<Integer>& values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? ", " : "") + values[i].get_str();
  return out + "]";
}

void printTable(std::ostream& out, const hdepth::BetaTable& t) {
  out << "beta table (d=" << t.d << "): " << formatValues(t.values) << "\n";
  for (long k = t.startK; k <= t.d; ++k) {
    out << "  beta_" << k << "^" << t.d << " = " << t.at(k) << (t.at(k) < 0 ? "   <0" : "") << "\n";
  }
}

json functionHeader(const std::string& input, const hdepth::HilbertFunction& h) {
  const auto top = hdepth::kf(h);
  return {{"input", input},
          {"function", hdepth::toJson(h)},
          {"k0", hdepth::k0(h)},
          {"kf", top ? json(*top) : json(nullptr)}};
}

void printFunctionHeader(std::ostream& out, const hdepth::HilbertFunction& h) {
  const auto top = hdepth::kf(h);
  out << "function: " << hdepth::toString(h) << "\n";
  out << "k0: " << hdepth::k0(h) << "   kf: " << (top ? std::to_string(*top) : "none (infinite support)") << "\n";
}

struct Options {
  std::string spec;
  std::optional<long> d;
  bool json = false;
  int maxVars = hdepth::kDefaultVariableCap;
  long hypN = 0;
  int sqfN = 0;
  std::string idealJ;
  std::string idealI;
  std::vector<std::string> batteries;
  bool all = false;
  hdepth::BatteryConfig config;
  bool injectSignFlip = false;
};

int cmdQdepth(const Options& o) {
  const std::string text = resolveArgument(o.spec);
  const hdepth::HilbertFunction h = loadFunction(text);
  if (o.d) {
    const hdepth::BetaTable t = hdepth::betaTable(h, *o.d);
    if (o.json) {
      json doc = functionHeader(text, h);
      doc["betaTable"] = hdepth::toJson(t);
      std::cout << doc.dump(2) << "\n";
    } else {
      printFunctionHeader(std::cout, h);
      printTable(std::cout, t);
    }
    return kExitOk;
  }
  const hdepth::QDepthResult r = hdepth::qdepth(h);
  if (o.json) {
    json doc = functionHeader(text, h);
    doc["result"] = hdepth::toJson(r);
    std::cout << doc.dump(2) << "\n";
    return kExitOk;
  }
  printFunctionHeader(std::cout, h);
  std::cout << "bounds: [" << r.lowerBound << ", " << r.upperBound << "]\n";
  std::cout << "qdepth: " << r.qdepth << "\n";
  printTable(std::cout, r.certificate);
  if (r.refutation) {
    std::cout << "refutation: beta_" << r.refutation->k << "^" << r.refutation->d << " = " << r.refutation->beta << "\n";
  } else {
    std::cout << "refutation: none (qdepth meets the upper bound)\n";
  }
  return kExitOk;
}

int cmdBeta(const Options& o) {
  if (o.d) return cmdQdepth(o);
  const std::string text = resolveArgument(o.spec);
  const hdepth::HilbertFunction h = loadFunction(text);
  const hdepth::DepthBounds b = hdepth::bounds(h);
  const std::vector<long> feasible = hdepth::feasibleDepths(h, b.lower, b.upper);
  if (o.json) {
    json doc = functionHeader(text, h);
    doc["window"] = {b.lower, b.upper};
    doc["feasibleDepths"] = feasible;
    std::cout << doc.dump(2) << "\n";
    return kExitOk;
  }
  printFunctionHeader(std::cout, h);
  std::cout << "window: [" << b.lower << ", " << b.upper << "]\nfeasible d:";
  for (long d : feasible) std::cout << " " << d;
  std::cout << "\n";
  return kExitOk;
}

int cmdSqf(const Options& o) {
  const int cap = std::min(o.maxVars, hdepth::kHardVariableCap);
  if (o.sqfN > cap) {
    throw InputError(std::to_string(o.sqfN) + " variables exceed --max-vars=" + std::to_string(cap));
  }
  const auto J = hdepth::parseIdeal(resolveArgument(o.idealJ), o.sqfN);
  const auto I = hdepth::parseIdeal(resolveArgument(o.idealI), o.sqfN);
  const hdepth::SquarefreeQuotient q(J, I);
  const auto alpha = hdepth::alphaVector(q, cap);
  const auto viaAlpha = hdepth::qdepthQuotient(q, cap);
  const auto viaModule = hdepth::qdepth(hdepth::mModule(q, cap));
  const bool match = viaAlpha.qdepth == viaModule.qdepth;
  if (o.json) {
    json a = json::array();
    for (const auto& v : alpha) a.push_back(v.get_str());
    json doc = {{"n", o.sqfN},
                {"J", hdepth::toString(J)},
                {"I", hdepth::toString(I)},
                {"alpha", a},
                {"qdepthQuotient", hdepth::toJson(viaAlpha)},
                {"qdepthModule", hdepth::toJson(viaModule)},
                {"verdict", match ? "MATCH" : "MISMATCH"}};
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "quotient: " << hdepth::toString(q) << "\n";
    std::cout << "alpha: " << formatValues(alpha) << "\n";
    std::cout << "qdepth(J/I): " << viaAlpha.qdepth << "\n";
    printTable(std::cout, viaAlpha.certificate);
    std::cout << "qdepth(h_M(J/I)): " << viaModule.qdepth << "\n";
    printTable(std::cout, viaModule.certificate);
    std::cout << (match ? "MATCH" : "MISMATCH") << "\n";
  }
  return match ? kExitOk : kExitViolation;
}

int cmdHyp(const Options& o) {
  const long n = o.hypN;
  if (n < 1) throw InputError("hyp needs n >= 1");
  bool violated = false;
  std::vector<hdepth::Rational> f;
  for (long k = 0; k <= n; ++k) f.push_back(hdepth::gauss2F1(k, n));
  std::vector<Integer> e;
  for (long k = 2; k <= n; ++k) e.push_back(hdepth::bigE(n, k));
  const hdepth::CoeffTable c(n, n, n);

  auto signOk = [](long k, const hdepth::Rational& v) { return k % 2 == 0 ? sgn(v) > 0 : sgn(v) < 0; };
  if (f[0] != 1 || (n >= 1 && f[1] != 0)) violated = true;
  for (long k = 2; k <= n; ++k) {
    if (!signOk(k, f[static_cast<std::size_t>(k)]) || e[static_cast<std::size_t>(k - 2)] <= 0) violated = true;
    for (long j = 0; j <= n; ++j) {
      if ((j % 2 == 0) != (c.at(k, j) > 0) || c.at(k, j) == 0) violated = true;
    }
  }

  if (o.json) {
    json fj = json::array(), ej = json::object(), cj = json::array();
    for (const auto& v : f) fj.push_back(v.get_str());
    for (long k = 2; k <= n; ++k) ej[std::to_string(k)] = e[static_cast<std::size_t>(k - 2)].get_str();
    for (long k = 1; k <= n; ++k) {
      json row = json::array();
      for (long j = 0; j <= n; ++j) row.push_back(c.at(k, j).get_str());
      cj.push_back(row);
    }
    std::cout << json{{"n", n}, {"gauss2F1", fj}, {"E", ej}, {"c", cj}, {"signsOk", !violated}}.dump(2) << "\n";
    return violated ? kExitViolation : kExitOk;
  }

  std::cout << "n = " << n << "\n2F1(-k, n, -n; -1):\n";
  for (long k = 0; k <= n; ++k) {
    const auto& v = f[static_cast<std::size_t>(k)];
    std::cout << "  k=" << k << ": " << v;
    if (k >= 2) std::cout << "   (-1)^k * value " << (signOk(k, v) ? "> 0 ok" : "<= 0 VIOLATION");
    std::cout << "\n";
  }
  if (n >= 2) {
    std::cout << "E(n, k):\n";
    for (long k = 2; k <= n; ++k) {
      const auto& v = e[static_cast<std::size_t>(k - 2)];
      std::cout << "  k=" << k << ": " << v << (v > 0 ? "   > 0 ok" : "   VIOLATION") << "\n";
    }
  }
  std::cout << "c_k^(j) (rows k, columns j = 0.." << n << "; sign marks (-1)^j c > 0):\n";
  for (long k = 1; k <= n; ++k) {
    std::cout << "  k=" << k << ":";
    for (long j = 0; j <= n; ++j) {
      const Integer& v = c.at(k, j);
      const bool ok = v != 0 && (j % 2 == 0) == (v > 0);
      std::cout << " " << v << (k >= 2 ? (ok ? "" : "!") : "");
    }
    std::cout << "\n";
  }
  return violated ? kExitViolation : kExitOk;
}

int cmdVerify(const Options& o) {
  std::vector<std::string> selected = o.all ? hdepth::batteryNames() : o.batteries;
  if (selected.empty()) throw InputError("select batteries by name or pass --all");
  for (const auto& name : selected) {
    const auto& known = hdepth::batteryNames();
    if (std::find(known.begin(), known.end(), name) == known.end()) throw InputError("unknown battery '" + name + "'");
  }
  std::vector<hdepth::VerificationReport> reports;
  for (const auto& name : selected) reports.push_back(hdepth::runBattery(name, o.config));
  bool passed = true;
  for (const auto& r : reports) passed = passed && r.passed();

  if (o.json) {
    json list = json::array();
    for (const auto& r : reports) list.push_back(hdepth::toJson(r));
    json doc = {{"config",
                 {{"maxN", o.config.maxN},
                  {"maxDegree", o.config.maxDegree},
                  {"trials", o.config.trials},
                  {"seed", o.config.seed},
                  {"maxVars", o.config.maxVars}}},
                {"reports", list},
                {"passed", passed}};
    std::cout << doc.dump(2) << "\n";
    return passed ? kExitOk : kExitViolation;
  }

  std::cout << std::left << std::setw(14) << "battery" << std::right << std::setw(10) << "cases" << std::setw(12)
            << "violations" << std::setw(10) << "ms" << "  status\n";
  for (const auto& r : reports) {
    std::cout << std::left << std::setw(14) << r.batteryName << std::right << std::setw(10) << r.casesRun
              << std::setw(12) << r.violations.size() << std::setw(10) << r.elapsed.count() << "  "
              << (r.passed() ? "PASS" : "FAIL") << "\n";
  }
  constexpr std::size_t kShown = 10;
  for (const auto& r : reports) {
    for (const auto& note : r.notes) std::cout << "note [" << r.batteryName << "]: " << note << "\n";
    for (std::size_t i = 0; i < r.violations.size() && i < kShown; ++i) {
      const auto& v = r.violations[i];
      std::cout << "violation [" << r.batteryName << "]: " << v.descriptor << "\n    expected " << v.expected
                << ", got " << v.actual << "\n";
    }
    if (r.violations.size() > kShown) {
      std::cout << "  ... " << r.violations.size() - kShown << " more in " << r.batteryName << "\n";
    }
  }
  std::cout << (passed ? "all batteries passed" : "VIOLATIONS FOUND") << "\n";
  return passed ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hilbert depth of Hilbert functions: certificates and verification batteries"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  o.config.seed = kDefaultSeed;

  app.add_flag("--inject-beta-sign-flip", o.injectSignFlip, "test hook: negate top beta coefficients")->group("");

  auto* qd = app.add_subcommand("qdepth", "Hilbert depth of a function, with its beta certificate");
  qd->add_option("spec", o.spec, "function expression, JSON function form, or @file")->required();
  qd->add_option("--d", o.d, "print the beta table at this d instead");
  qd->add_flag("--json", o.json, "machine-readable output");

  auto* bt = app.add_subcommand("beta", "beta table at --d, or the feasible depths over the search window");
  bt->add_option("spec", o.spec, "function expression, JSON function form, or @file")->required();
  bt->add_option("--d", o.d, "candidate depth");
  bt->add_flag("--json", o.json, "machine-readable output");

  auto* sq = app.add_subcommand("sqf", "depth of a squarefree quotient J/I, both routes");
  sq->add_option("n", o.sqfN, "number of variables")->required();
  sq->add_option("J", o.idealJ, "ideal J, e.g. \"x1*x2, x3\" (or 0, 1, @file)")->required();
  sq->add_option("I", o.idealI, "ideal I inside J")->required();
  sq->add_option("--max-vars", o.maxVars, "variable cap (hard ceiling 28)")->check(CLI::Range(1, hdepth::kHardVariableCap));
  sq->add_flag("--json", o.json, "machine-readable output");

  auto* hy = app.add_subcommand("hyp", "2F1(-k,n,-n;-1), E(n,k) and the c_k^(j) table for one n");
  hy->add_option("n", o.hypN, "n >= 1")->required();
  hy->add_flag("--json", o.json, "machine-readable output");

  auto* vf = app.add_subcommand("verify", "run verification batteries");
  vf->add_option("batteries", o.batteries, "poly ci ci-recursion coro free extension laws qq lemma bd2 elink");
  vf->add_flag("--all", o.all, "run every battery");
  vf->add_option("--max-n", o.config.maxN, "largest n (default 6)")->check(CLI::Range(1L, 200L));
  vf->add_option("--max-degree", o.config.maxDegree, "largest form degree (default 5)")->check(CLI::Range(2L, 12L));
  vf->add_option("--trials", o.config.trials, "random cases per battery (default 200)")->check(CLI::Range(1L, 1000000L));
  vf->add_option("--seed", o.config.seed, "seed (default 1)");
  vf->add_option("--max-vars", o.config.maxVars, "variable cap for qq (default 20)")
      ->check(CLI::Range(1, hdepth::kHardVariableCap));
  vf->add_option("--parallel", o.config.threads, "worker threads (default 1)")->check(CLI::Range(1u, 256u));
  vf->add_flag("--json", o.json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  hdepth::fault::setBetaSignFlip(o.injectSignFlip);
  try {
    if (*qd) return cmdQdepth(o);
    if (*bt) return cmdBeta(o);
    if (*sq) return cmdSqf(o);
    if (*hy) return cmdHyp(o);
    if (*vf) return cmdVerify(o);
  } catch (const hdepth::Error& e) {
    std::cerr << "error: " << hdepth::toString(e.kind()) << ": " << e.what() << "\n";
    return kExitInput;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
