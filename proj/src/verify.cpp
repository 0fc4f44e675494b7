#include "hdepth/verify.hpp"

#include "hdepth/errors.hpp"
#include "hdepth/hilbert.hpp"
#include "hdepth/hyp.hpp"
#include "hdepth/parallel.hpp"
#include "hdepth/qdepth.hpp"
#include "hdepth/spec.hpp"
#include "hdepth/squarefree.hpp"

#include <algorithm>
#include <chrono>
#include <functional>

namespace hdepth {

namespace {

using Clock = std::chrono::steady_clock;
using Violations = std::vector<Violation>;

std::string joinInts(const std::vector<int>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(xs[i]);
  }
  return out;
}

std::string ciSpec(long n, const std::vector<int>& degrees) {
  return "ci(" + std::to_string(n) + ";" + (degrees.empty() ? "" : " " + joinInts(degrees)) + ")";
}

std::string qdepthReplay(const std::string& spec) { return "hdepth qdepth \"" + spec + "\""; }

std::string betaReplay(const std::string& spec, long d) {
  return "hdepth beta \"" + spec + "\" --d=" + std::to_string(d);
}

std::string tableString(const BetaTable& t) {
  std::string out = "[";
  for (std::size_t i = 0; i < t.values.size(); ++i) {
    if (i > 0) out += ", ";
    out += t.values[i].get_str();
  }
  return out + "]";
}

// Runs `count` independent cases and gathers their violations in case order.
VerificationReport runCases(const std::string& name, std::size_t count, unsigned threads,
                            const std::function<Violations(std::size_t)>& check) {
  const auto start = Clock::now();
  auto perCase = parallelMap(count, threads, [&](std::size_t i) {
    try {
      return check(i);
    } catch (const Error& e) {
      return Violations{{name + " case " + std::to_string(i), "no error", std::string(toString(e.kind())) + ": " + e.what()}};
    }
  });
  VerificationReport report{name, count, {}, {}, {}};
  for (auto& vs : perCase) {
    for (auto& v : vs) report.violations.push_back(std::move(v));
  }
  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
  return report;
}

// All nondecreasing sequences of length r over [lo, hi].
void multisets(long r, int lo, int hi, std::vector<int>& prefix, std::vector<std::vector<int>>& out) {
  if (static_cast<long>(prefix.size()) == r) {
    out.push_back(prefix);
    return;
  }
  for (int d = prefix.empty() ? lo : prefix.back(); d <= hi; ++d) {
    prefix.push_back(d);
    multisets(r, lo, hi, prefix, out);
    prefix.pop_back();
  }
}

struct CICase {
  long n;
  std::vector<int> degrees;
};

std::vector<CICase> ciCases(long nmax, long dmax, bool strictlyFewerForms) {
  std::vector<CICase> cases;
  for (long n = 1; n <= nmax; ++n) {
    for (long r = 0; r <= n; ++r) {
      if (strictlyFewerForms && r == n) continue;
      std::vector<std::vector<int>> all;
      std::vector<int> prefix;
      multisets(r, 2, static_cast<int>(dmax), prefix, all);
      for (auto& degrees : all) cases.push_back({n, std::move(degrees)});
    }
  }
  return cases;
}

}  // namespace

std::string randomFunctionSpec(SeededRng& rng, int depth) {
  const long choice = rng.uniform(0, depth < 2 ? 7 : 3);
  switch (choice) {
    case 0: {
      const long start = rng.uniform(-3, 3);
      const long length = rng.uniform(1, 6);
      std::string out = "table(";
      for (long i = 0; i < length; ++i) {
        if (i > 0) out += ",";
        out += std::to_string(start + i) + ":" + std::to_string(rng.uniform(i == 0 ? 1 : 0, 9));
      }
      return out + ")";
    }
    case 1:
      return "poly(" + std::to_string(rng.uniform(1, 4)) + ")";
    case 2: {
      const long n = rng.uniform(1, 4);
      const long m = rng.uniform(1, 3);
      std::string out = "free(" + std::to_string(n) + "; ";
      for (long i = 0; i < m; ++i) {
        if (i > 0) out += ",";
        out += std::to_string(rng.uniform(-3, 3));
      }
      return out + ")";
    }
    case 3: {
      const long n = rng.uniform(1, 4);
      const long r = rng.uniform(0, n);
      std::vector<int> degrees;
      for (long i = 0; i < r; ++i) degrees.push_back(static_cast<int>(rng.uniform(1, 4)));
      return ciSpec(n, degrees);
    }
    case 4:
      return "shift(" + randomFunctionSpec(rng, depth + 1) + ", " + std::to_string(rng.uniform(-3, 3)) + ")";
    case 5:
      return "sum(" + randomFunctionSpec(rng, depth + 1) + ", " + randomFunctionSpec(rng, depth + 1) + ")";
    case 6:
      return "extend(" + randomFunctionSpec(rng, depth + 1) + ")";
    default:
      return "scale(" + randomFunctionSpec(rng, depth + 1) + ", " + std::to_string(rng.uniform(1, 3)) + ")";
  }
}

VerificationReport verifyPolyRing(long nmax, unsigned threads) {
  return runCases("poly", static_cast<std::size_t>(std::max(0L, nmax)), threads, [](std::size_t i) {
    const long n = static_cast<long>(i) + 1;
    const std::string spec = "poly(" + std::to_string(n) + ")";
    const QDepthResult r = qdepth(polynomialRing(static_cast<int>(n)));
    Violations out;
    if (r.qdepth != n) out.push_back({qdepthReplay(spec), std::to_string(n), std::to_string(r.qdepth)});
    return out;
  });
}

VerificationReport verifyCI(long nmax, long dmax, unsigned threads) {
  const auto cases = ciCases(nmax, dmax, false);
  return runCases("ci", cases.size(), threads, [&cases](std::size_t i) {
    const auto& c = cases[i];
    const std::string spec = ciSpec(c.n, c.degrees);
    const HilbertFunction h = completeIntersection(static_cast<int>(c.n), c.degrees);
    Violations out;
    const QDepthResult r = qdepth(h);
    if (r.qdepth != c.n) out.push_back({qdepthReplay(spec), std::to_string(c.n), std::to_string(r.qdepth)});

    const bool allTwos = static_cast<long>(c.degrees.size()) == c.n &&
                         std::all_of(c.degrees.begin(), c.degrees.end(), [](int d) { return d == 2; });
    if (allTwos) {
      BetaTable expected{c.n, 0, std::vector<Integer>(static_cast<std::size_t>(c.n + 1), Integer(0))};
      expected.values[0] = 1;
      const BetaTable actual = betaTable(h, c.n);
      if (actual != expected) out.push_back({betaReplay(spec, c.n), tableString(expected), tableString(actual)});
    }
    if (c.degrees.empty() && !(h == polynomialRing(static_cast<int>(c.n)))) {
      out.push_back({qdepthReplay(spec), "poly(" + std::to_string(c.n) + ")", toString(h)});
    }
    return out;
  });
}

VerificationReport verifyCIRecursion(long samples, std::uint64_t seed, unsigned threads) {
  return runCases("ci-recursion", static_cast<std::size_t>(std::max(0L, samples)), threads, [seed](std::size_t i) {
    SeededRng rng(SeededRng::caseSeed(seed, i));
    const long n = rng.uniform(1, 6);
    std::vector<int> degrees;
    for (long k = 0; k + 1 < n; ++k) degrees.push_back(static_cast<int>(rng.uniform(2, 5)));
    const int dn = static_cast<int>(rng.uniform(3, 5));
    degrees.push_back(dn);

    std::vector<int> iDegrees = degrees;
    iDegrees.back() = dn - 1;
    const std::vector<int> primeDegrees(degrees.begin(), degrees.end() - 1);

    const HilbertFunction hJ = completeIntersection(static_cast<int>(n), degrees);
    const HilbertFunction hI = completeIntersection(static_cast<int>(n), iDegrees);
    const HilbertFunction hPrime = n > 1 ? completeIntersection(static_cast<int>(n - 1), primeDegrees)
                                         : fromTable({{0, Integer(1)}});
    const std::string spec = ciSpec(n, degrees);
    const std::string tag = "  # seed=" + std::to_string(seed) + " case=" + std::to_string(i);

    Violations out;
    const HilbertFunction split = add(hI, shift(hPrime, -(dn - 1)));
    if (!(split == hJ)) {
      out.push_back({qdepthReplay(spec) + tag + " series split", toString(hJ), toString(split)});
    }
    const BetaTable bJ = betaTable(hJ, n);
    const BetaTable bI = betaTable(hI, n);
    for (long k = 0; k <= n; ++k) {
      Integer expected = bI.at(k);
      if (k >= dn - 1) expected += beta(hPrime, n - dn + 1, k - dn + 1);
      if (bJ.at(k) != expected) {
        out.push_back({betaReplay(spec, n) + tag + " k=" + std::to_string(k), expected.get_str(), bJ.at(k).get_str()});
      }
      if (bI.at(k) < 0) {
        out.push_back({betaReplay(ciSpec(n, iDegrees), n) + tag + " k=" + std::to_string(k), ">= 0",
                       bI.at(k).get_str()});
      }
    }
    return out;
  });
}

VerificationReport verifyCoroTruncation(long nmax, long dmax, unsigned threads) {
  const auto cases = ciCases(nmax, dmax, true);
  return runCases("coro", cases.size(), threads, [&cases](std::size_t i) {
    const auto& c = cases[i];
    std::vector<int> padded = c.degrees;
    padded.resize(static_cast<std::size_t>(c.n), static_cast<int>(c.n + 1));
    const HilbertFunction h = completeIntersection(static_cast<int>(c.n), c.degrees);
    const HilbertFunction hPadded = completeIntersection(static_cast<int>(c.n), padded);
    Violations out;
    for (long j = 0; j <= c.n; ++j) {
      const Integer a = evaluate(h, j), b = evaluate(hPadded, j);
      if (a != b) {
        out.push_back({qdepthReplay(ciSpec(c.n, c.degrees)) + "  # vs " + ciSpec(c.n, padded) + " at j=" +
                           std::to_string(j),
                       a.get_str(), b.get_str()});
      }
    }
    const BetaTable t = betaTable(h, c.n), tPadded = betaTable(hPadded, c.n);
    if (t != tPadded) out.push_back({betaReplay(ciSpec(c.n, padded), c.n), tableString(t), tableString(tPadded)});
    return out;
  });
}

VerificationReport verifyFree(long samples, std::uint64_t seed, long nmax, unsigned threads) {
  return runCases("free", static_cast<std::size_t>(std::max(0L, samples)), threads, [seed, nmax](std::size_t i) {
    SeededRng rng(SeededRng::caseSeed(seed, i));
    const long n = rng.uniform(1, std::max(1L, nmax));
    const long n1 = rng.uniform(1, 4);
    const long n2 = rng.uniform(0, n1 - 1);
    const long a = rng.uniform(-4, 4);
    const long r = rng.uniform(0, 3);
    std::vector<long> shifts(static_cast<std::size_t>(n1), a);
    shifts.insert(shifts.end(), static_cast<std::size_t>(n2), a - 1);
    for (long j = 0; j < r; ++j) shifts.push_back(rng.uniform(a - 6, a - 2));

    std::string spec = "free(" + std::to_string(n) + "; ";
    for (std::size_t j = 0; j < shifts.size(); ++j) spec += (j ? "," : "") + std::to_string(shifts[j]);
    spec += ")";

    Violations out;
    const QDepthResult res = qdepth(freeModule(static_cast<int>(n), shifts));
    if (res.qdepth != n - a) out.push_back({qdepthReplay(spec), std::to_string(n - a), std::to_string(res.qdepth)});
    return out;
  });
}

namespace {

// beta_d^d(extend(h)) against the sum of h(l) over k0 <= l <= d with l = d (mod 2).
Violations parityCheck(const HilbertFunction& h, const std::string& spec, long span) {
  Violations out;
  const HilbertFunction ext = extend(h);
  const long start = k0(h);
  for (long d = start; d <= start + span; ++d) {
    Integer expected = 0;
    for (long l = start; l <= d; ++l) {
      if ((d - l) % 2 == 0) expected += evaluate(h, l);
    }
    const Integer actual = beta(ext, d, d);
    if (actual != expected) {
      out.push_back({betaReplay("extend(" + spec + ")", d) + "  # parity identity", expected.get_str(), actual.get_str()});
    }
  }
  return out;
}

}  // namespace

VerificationReport verifyExtension(long samples, std::uint64_t seed, unsigned threads) {
  return runCases("extension", static_cast<std::size_t>(std::max(0L, samples)), threads, [seed](std::size_t i) {
    SeededRng rng(SeededRng::caseSeed(seed, i));
    const std::string spec = randomFunctionSpec(rng);
    const HilbertFunction h = parseFunction(spec);
    Violations out;
    const long q = qdepth(h).qdepth;
    const long qExt = qdepth(extend(h)).qdepth;
    if (qExt < q) out.push_back({qdepthReplay("extend(" + spec + ")"), ">= " + std::to_string(q), std::to_string(qExt)});
    for (auto& v : parityCheck(h, spec, 12)) out.push_back(std::move(v));
    return out;
  });
}

VerificationReport verifyLaws(long samples, std::uint64_t seed, unsigned threads) {
  return runCases("laws", static_cast<std::size_t>(std::max(0L, samples)), threads, [seed](std::size_t i) {
    SeededRng rng(SeededRng::caseSeed(seed, i));
    const std::string spec = randomFunctionSpec(rng);
    const std::string other = randomFunctionSpec(rng);
    const long m = rng.uniform(-5, 5);
    const HilbertFunction h = parseFunction(spec);
    const HilbertFunction h2 = parseFunction(other);
    Violations out;

    const QDepthResult r = qdepth(h);
    const long q = r.qdepth;
    const DepthBounds b = bounds(h);
    if (q < b.lower || q > b.upper) {
      out.push_back({qdepthReplay(spec) + "  # bounds", "[" + std::to_string(b.lower) + ", " + std::to_string(b.upper) + "]",
                     std::to_string(q)});
    }
    if (auto top = kf(h); top && q > *top) {
      out.push_back({qdepthReplay(spec) + "  # finite-support cap", "<= " + std::to_string(*top), std::to_string(q)});
    }
    if (!r.certificate.nonnegative() || r.certificate.d != q) {
      out.push_back({qdepthReplay(spec) + "  # certificate", "nonnegative table at d=" + std::to_string(q),
                     tableString(r.certificate)});
    }
    if (r.refutation) {
      const Integer recomputed = beta(h, r.refutation->d, r.refutation->k);
      if (recomputed != r.refutation->beta || recomputed >= 0) {
        out.push_back({qdepthReplay(spec) + "  # refutation", r.refutation->beta.get_str() + " < 0", recomputed.get_str()});
      }
    }

    const std::string shifted = "shift(" + spec + ", " + std::to_string(m) + ")";
    if (const long qs = qdepth(shift(h, m)).qdepth; qs != q - m) {
      out.push_back({qdepthReplay(shifted), std::to_string(q - m), std::to_string(qs)});
    }
    for (long factor : {2L, 3L, 7L}) {
      if (const long qs = qdepth(scale(h, factor)).qdepth; qs != q) {
        out.push_back({qdepthReplay("scale(" + spec + ", " + std::to_string(factor) + ")"), std::to_string(q),
                       std::to_string(qs)});
      }
    }
    const long q2 = qdepth(h2).qdepth;
    if (const long qsum = qdepth(add(h, h2)).qdepth; qsum < std::min(q, q2)) {
      out.push_back({qdepthReplay("sum(" + spec + ", " + other + ")"), ">= " + std::to_string(std::min(q, q2)),
                     std::to_string(qsum)});
    }
    if (const long qe = qdepth(extend(h)).qdepth; qe < q) {
      out.push_back({qdepthReplay("extend(" + spec + ")"), ">= " + std::to_string(q), std::to_string(qe)});
    }

    const long start = k0(h);
    for (long d = start; d <= start + 12; ++d) {
      const BetaTable t = betaTable(h, d);
      for (long k = start; k <= d; ++k) {
        const Integer back = reconstruct(t, k);
        const Integer value = evaluate(h, k);
        if (back != value) {
          out.push_back({betaReplay(spec, d) + "  # inversion at k=" + std::to_string(k), value.get_str(), back.get_str()});
        }
      }
    }
    for (auto& v : parityCheck(h, spec, 12)) out.push_back(std::move(v));
    return out;
  });
}

VerificationReport verifyQQ(long trials, std::uint64_t seed, long nmax, int variableCap, unsigned threads) {
  return runCases("qq", static_cast<std::size_t>(std::max(0L, trials)), threads, [=](std::size_t i) {
    SeededRng rng(SeededRng::caseSeed(seed, i));
    const int n = static_cast<int>(rng.uniform(1, std::max(1L, nmax)));
    const int gJ = static_cast<int>(rng.uniform(1, 4));
    // With one variable every nonzero I equals J, so I gets at most n-1 generators.
    const int gI = static_cast<int>(rng.uniform(0, std::min(4, n - 1)));
    const SquarefreeQuotient q = randomQuotient(n, rng.next(), gJ, gI);
    const std::string replay = "hdepth sqf " + std::to_string(n) + " \"" + toString(q.J()) + "\" \"" + toString(q.I()) + "\"";

    Violations out;
    const QDepthResult viaAlpha = qdepthQuotient(q, variableCap);
    const HilbertFunction m = mModule(q, variableCap);
    const QDepthResult viaModule = qdepth(m);
    if (viaAlpha.qdepth != viaModule.qdepth) {
      out.push_back({replay, std::to_string(viaAlpha.qdepth), std::to_string(viaModule.qdepth)});
    }
    const auto top = kf(m);
    if (!top || viaModule.qdepth > *top || *top > n) {
      out.push_back({replay + "  # finite-support cap", "qdepth <= kf <= " + std::to_string(n),
                     std::to_string(viaModule.qdepth) + " / " + (top ? std::to_string(*top) : "none")});
    }
    const std::vector<Integer> alpha = alphaVector(q, variableCap);
    const ValueFn alphaValue = [&alpha](long j) { return alpha[static_cast<std::size_t>(j)]; };
    const long start = k0(m);
    for (long d = 0; d <= n; ++d) {
      const BetaTable fromAlpha = betaTableFromValues(alphaValue, 0, d);
      for (long k = 0; k <= d; ++k) {
        const Integer expected = k >= start ? beta(m, d, k) : Integer(0);
        if (fromAlpha.at(k) != expected) {
          out.push_back({replay + "  # beta consistency d=" + std::to_string(d) + " k=" + std::to_string(k),
                         expected.get_str(), fromAlpha.at(k).get_str()});
        }
      }
    }
    return out;
  });
}

const std::vector<std::string>& batteryNames() {
  static const std::vector<std::string> names = {"poly", "ci",   "ci-recursion", "coro",  "free", "extension",
                                                 "laws", "qq",   "lemma",        "bd2",   "elink"};
  return names;
}

VerificationReport runBattery(const std::string& name, const BatteryConfig& c) {
  if (name == "poly") return verifyPolyRing(c.maxN, c.threads);
  if (name == "ci") return verifyCI(c.maxN, c.maxDegree, c.threads);
  if (name == "ci-recursion") return verifyCIRecursion(c.trials, c.seed, c.threads);
  if (name == "coro") return verifyCoroTruncation(c.maxN, c.maxDegree, c.threads);
  if (name == "free") return verifyFree(c.trials, c.seed, c.maxN, c.threads);
  if (name == "extension") return verifyExtension(c.trials, c.seed, c.threads);
  if (name == "laws") return verifyLaws(c.trials, c.seed, c.threads);
  if (name == "qq") return verifyQQ(c.trials, c.seed, std::min<long>(c.maxN, c.maxVars), c.maxVars, c.threads);
  if (name == "lemma") return checkSignLemma(c.maxN);
  if (name == "bd2") return checkBetaIdentity(c.maxN);
  if (name == "elink") return checkELink(c.maxN);
  throw Error(ErrorKind::OutOfRange, "unknown battery '" + name + "'");
}

}  // namespace hdepth
