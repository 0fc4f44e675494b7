#pragma once

// Seeded verification batteries. Each returns a report whose violation
// descriptors are hdepth command lines that replay the failing case.

#include "hdepth/report.hpp"
#include "hdepth/rng.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace hdepth {

/// Random function-DSL text built from every constructor (tables, rational forms, CI instances).
std::string randomFunctionSpec(SeededRng& rng, int depth = 0);

VerificationReport verifyPolyRing(long nmax, unsigned threads = 1);
VerificationReport verifyCI(long nmax, long dmax, unsigned threads = 1);
VerificationReport verifyCIRecursion(long samples, std::uint64_t seed, unsigned threads = 1);
VerificationReport verifyCoroTruncation(long nmax, long dmax, unsigned threads = 1);
VerificationReport verifyFree(long samples, std::uint64_t seed, long nmax, unsigned threads = 1);
VerificationReport verifyExtension(long samples, std::uint64_t seed, unsigned threads = 1);
/// Shift, scale, superadditivity, extension, bounds, finite-support cap, inversion,
/// parity identity and refutation soundness on random functions.
VerificationReport verifyLaws(long samples, std::uint64_t seed, unsigned threads = 1);
VerificationReport verifyQQ(long trials, std::uint64_t seed, long nmax, int variableCap = 20,
                            unsigned threads = 1);

struct BatteryConfig {
  long maxN = 6;
  long maxDegree = 5;
  long trials = 200;
  std::uint64_t seed = 1;
  int maxVars = 20;
  unsigned threads = 1;
};

/// poly, ci, ci-recursion, coro, free, extension, laws, qq, lemma, bd2, elink.
const std::vector<std::string>& batteryNames();

/// Throws Error(OutOfRange) for an unknown name.
VerificationReport runBattery(const std::string& name, const BatteryConfig& config);

}  // namespace hdepth
