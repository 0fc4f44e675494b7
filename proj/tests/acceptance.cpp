// One PASS/FAIL line per acceptance criterion; exit status is nonzero if any fails.
#include "hdepth/hilbert.hpp"
#include "hdepth/hyp.hpp"
#include "hdepth/qdepth.hpp"
#include "hdepth/verify.hpp"

#include "cli_support.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string detail;
};

Outcome fromReport(const hdepth::VerificationReport& r) {
  std::ostringstream s;
  s << r.casesRun << " cases, " << r.violations.size() << " violations";
  if (!r.violations.empty()) s << "; first: " << r.violations.front().descriptor;
  return {r.passed() && r.casesRun > 0, s.str()};
}

Outcome both(Outcome a, const Outcome& b) {
  a.ok = a.ok && b.ok;
  a.detail += "; " + b.detail;
  return a;
}

int failures = 0;

void criterion(int id, const std::string& name, double limitSeconds, const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  const bool inTime = limitSeconds <= 0 || seconds < limitSeconds;
  const bool pass = out.ok && inTime;
  if (!pass) ++failures;
  std::printf("%s  %2d %-22s %7.2fs", pass ? "PASS" : "FAIL", id, name.c_str(), seconds);
  if (limitSeconds > 0) std::printf(" (limit %.0fs)", limitSeconds);
  std::printf("  %s%s\n", out.detail.c_str(), inTime ? "" : " [time limit exceeded]");
  std::fflush(stdout);
}

Outcome polyDepths() {
  long bad = 0;
  for (int n = 1; n <= 64; ++n) {
    if (hdepth::qdepth(hdepth::polynomialRing(n)).qdepth != n) ++bad;
  }
  return {bad == 0, "n = 1..64, " + std::to_string(bad) + " mismatches"};
}

Outcome rowOneAgainstSeries() {
  long bad = 0;
  for (long n = 1; n <= 30; ++n) {
    const auto table = hdepth::coeffTable(n, 1, 2 * n);
    const auto series = oracle::rowOneBySeries(n, 2 * n);
    for (long j = 0; j <= 2 * n; ++j) {
      if (table.at(1, j) != series[static_cast<std::size_t>(j)]) ++bad;
    }
  }
  return {bad == 0, "row 1 vs series oracle: " + std::to_string(bad) + " mismatches"};
}

Outcome artinianExample() {
  const auto h = hdepth::completeIntersection(3, std::vector<int>{3});
  const auto r = hdepth::qdepth(h);
  const bool ok = r.qdepth == 3 && !hdepth::kf(h).has_value();
  return {ok, "qdepth " + std::to_string(r.qdepth) + ", kf " + (hdepth::kf(h) ? "present" : "absent")};
}

// First violation line's replay command, with the leading program name stripped.
std::string firstReplay(const std::string& out) {
  const auto at = out.find("violation [");
  if (at == std::string::npos) return {};
  const auto start = out.find("hdepth ", at);
  const auto end = out.find('\n', start);
  std::string line = out.substr(start + 7, end - start - 7);
  if (const auto hash = line.find("  #"); hash != std::string::npos) line.resize(hash);
  return line;
}

Outcome cliContract() {
  const auto clean = clitest::run("verify --all");
  if (clean.exitCode != 0) return {false, "verify --all exited " + std::to_string(clean.exitCode)};
  const auto broken = clitest::run("verify --all --inject-beta-sign-flip");
  if (broken.exitCode != 1) return {false, "with sign flip exited " + std::to_string(broken.exitCode)};
  const std::string replay = firstReplay(broken.out);
  if (replay.empty()) return {false, "no violation descriptor printed"};
  // Replaying under the same fault must change the answer; without it the answer is restored.
  const auto faulty = clitest::run(replay + " --inject-beta-sign-flip");
  const auto healthy = clitest::run(replay);
  const bool reproduced = faulty.exitCode == 0 && healthy.exitCode == 0 && faulty.out != healthy.out;
  return {reproduced, "exit 0 / exit 1; replay '" + replay + "' " + (reproduced ? "reproduces" : "does not reproduce")};
}

}  // namespace

int main() {
  using namespace hdepth;
  criterion(1, "poly-ring depth", 10, polyDepths);
  criterion(2, "complete intersections", 60, [] { return fromReport(verifyCI(6, 5)); });
  criterion(3, "sign lemma", 30, [] { return fromReport(checkSignLemma(60)); });
  criterion(4, "beta identity", 0, [] { return fromReport(checkBetaIdentity(60)); });
  criterion(5, "E link", 0, [] { return both(fromReport(checkELink(30)), rowOneAgainstSeries()); });
  criterion(6, "structural laws", 0, [] { return both(fromReport(verifyLaws(1000, 1)), fromReport(verifyExtension(1000, 1))); });
  criterion(7, "squarefree quotients", 60, [] { return fromReport(verifyQQ(500, 1, 10)); });
  criterion(8, "CI recursion", 0, [] { return fromReport(verifyCIRecursion(200, 1)); });
  criterion(9, "free modules", 0, [] { return fromReport(verifyFree(200, 1, 6)); });
  criterion(10, "Artinian bound example", 0, artinianExample);
  criterion(11, "CLI contract", 0, cliContract);
  std::printf("%s: %d failing\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
  return failures == 0 ? 0 : 1;
}
