#pragma once

// Beta coefficients, their inversion, and the Hilbert depth
//
//   beta_k^d(h) = sum_{j=k0}^{k} (-1)^{k-j} C(d-j, k-j) h(j),   k0 <= k <= d
//   qdepth(h)   = max { d : beta_k^d(h) >= 0 for all k0 <= k <= d }.
//
// The search is confined to [k0, k0 + floor(h(k0+1)/h(k0))]: beta_{k0+1}^d
// equals h(k0+1) - (d-k0) h(k0), which is negative beyond that window.

#include "hdepth/hilbert.hpp"
#include "hdepth/numbers.hpp"

#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace hdepth {

struct BetaTable {
  long d = 0;
  long startK = 0;
  std::vector<Integer> values;  // values[i] = beta_{startK+i}^d

  const Integer& at(long k) const;
  bool nonnegative() const;
  friend bool operator==(const BetaTable&, const BetaTable&) = default;
};

/// A negative coefficient beta_k^d witnessing that depth d is infeasible.
struct Refutation {
  long d = 0;
  long k = 0;
  Integer beta;
  friend bool operator==(const Refutation&, const Refutation&) = default;
};

struct QDepthResult {
  long qdepth = 0;
  BetaTable certificate;  // at d = qdepth, all entries >= 0
  long lowerBound = 0;
  long upperBound = 0;
  std::optional<Refutation> refutation;  // at d = qdepth + 1 iff qdepth < upperBound
};

struct DepthBounds {
  long lower = 0;
  long upper = 0;
  friend bool operator==(const DepthBounds&, const DepthBounds&) = default;
};

/// Throws OutOfRange unless k0(h) <= k <= d.
Integer beta(const HilbertFunction& h, long d, long k);
/// Throws OutOfRange if d < k0(h).
BetaTable betaTable(const HilbertFunction& h, long d);
/// Inverse transform: sum_j C(d-j, k-j) beta_j^d. Throws OutOfRange outside [startK, d].
Integer reconstruct(const BetaTable& table, long k);

DepthBounds bounds(const HilbertFunction& h);
QDepthResult qdepth(const HilbertFunction& h);

/// Every d in [from, to] for which the full beta table is nonnegative. Diagnostic only:
/// it exposes the shape of the feasible set rather than just its maximum.
std::vector<long> feasibleDepths(const HilbertFunction& h, long from, long to);

/// Value-level machinery shared with other modules. `value(j)` must return h(j) for j >= startK.
using ValueFn = std::function<Integer(long)>;

BetaTable betaTableFromValues(const ValueFn& value, long startK, long d);

struct DepthScan {
  long qdepth = 0;
  BetaTable certificate;
  std::optional<Refutation> refutation;  // from d = qdepth + 1 when that was scanned
};

/// Largest feasible d in [dLow, dHigh], scanning downward. Throws OutOfRange if none is feasible.
DepthScan scanDepths(const ValueFn& value, long startK, long dLow, long dHigh);

namespace fault {

/// Test hook: when enabled, every top coefficient beta_d^d with d > startK is negated.
void setBetaSignFlip(bool enabled) noexcept;
bool betaSignFlip() noexcept;

}  // namespace fault

}  // namespace hdepth
