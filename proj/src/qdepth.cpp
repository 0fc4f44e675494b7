#include "hdepth/qdepth.hpp"

#include "hdepth/errors.hpp"

#include <atomic>

namespace hdepth {

namespace fault {
namespace {
std::atomic<bool> gBetaSignFlip{false};
}  // namespace

void setBetaSignFlip(bool enabled) noexcept { gBetaSignFlip.store(enabled); }
bool betaSignFlip() noexcept { return gBetaSignFlip.load(); }
}  // namespace fault

namespace {

// Memoizes h(j) for j >= startK; windows are scanned repeatedly.
class ValueCache {
 public:
  ValueCache(const ValueFn& value, long startK) : value_(value), startK_(startK) {}

  const Integer& operator()(long j) {
    const auto idx = static_cast<std::size_t>(j - startK_);
    while (cache_.size() <= idx) cache_.push_back(value_(startK_ + static_cast<long>(cache_.size())));
    return cache_[idx];
  }

 private:
  const ValueFn& value_;
  long startK_;
  std::vector<Integer> cache_;
};

Integer betaCore(ValueCache& h, long startK, long d, long k) {
  Integer sum = 0;
  for (long j = startK; j <= k; ++j) {
    const Integer& v = h(j);
    if (v == 0) continue;
    Integer term = binomial(d - j, k - j) * v;
    if ((k - j) % 2 == 0) sum += term;
    else sum -= term;
  }
  if (k == d && d > startK && fault::betaSignFlip()) sum = -sum;
  return sum;
}

ValueFn valuesOf(const HilbertFunction& h) {
  return [&h](long j) { return evaluate(h, j); };
}

}  // namespace

const Integer& BetaTable::at(long k) const {
  if (k < startK || k > d) {
    throw Error(ErrorKind::OutOfRange, "k = " + std::to_string(k) + " outside [" + std::to_string(startK) +
                                           ", " + std::to_string(d) + "]");
  }
  return values[static_cast<std::size_t>(k - startK)];
}

bool BetaTable::nonnegative() const {
  for (const auto& v : values) {
    if (v < 0) return false;
  }
  return true;
}

BetaTable betaTableFromValues(const ValueFn& value, long startK, long d) {
  if (d < startK) {
    throw Error(ErrorKind::OutOfRange, "d = " + std::to_string(d) + " is below k0 = " + std::to_string(startK));
  }
  ValueCache cache(value, startK);
  BetaTable table{d, startK, {}};
  table.values.reserve(static_cast<std::size_t>(d - startK + 1));
  for (long k = startK; k <= d; ++k) table.values.push_back(betaCore(cache, startK, d, k));
  return table;
}

DepthScan scanDepths(const ValueFn& value, long startK, long dLow, long dHigh) {
  ValueCache cache(value, startK);
  std::optional<Refutation> previous;  // witness for d + 1 when d is examined
  for (long d = dHigh; d >= dLow; --d) {
    BetaTable table{d, startK, {}};
    std::optional<Refutation> failure;
    for (long k = startK; k <= d; ++k) {
      Integer b = betaCore(cache, startK, d, k);
      if (b < 0) {
        failure = Refutation{d, k, std::move(b)};
        break;
      }
      table.values.push_back(std::move(b));
    }
    if (!failure) return DepthScan{d, std::move(table), std::move(previous)};
    previous = std::move(failure);
  }
  throw Error(ErrorKind::OutOfRange, "no feasible depth in [" + std::to_string(dLow) + ", " +
                                         std::to_string(dHigh) + "]");
}

Integer beta(const HilbertFunction& h, long d, long k) {
  const long start = k0(h);
  if (k < start || k > d) {
    throw Error(ErrorKind::OutOfRange, "beta needs k0 <= k <= d (k0 = " + std::to_string(start) +
                                           ", k = " + std::to_string(k) + ", d = " + std::to_string(d) + ")");
  }
  const ValueFn value = valuesOf(h);
  ValueCache cache(value, start);
  return betaCore(cache, start, d, k);
}

BetaTable betaTable(const HilbertFunction& h, long d) { return betaTableFromValues(valuesOf(h), k0(h), d); }

Integer reconstruct(const BetaTable& table, long k) {
  if (k < table.startK || k > table.d) {
    throw Error(ErrorKind::OutOfRange, "k = " + std::to_string(k) + " outside [" + std::to_string(table.startK) +
                                           ", " + std::to_string(table.d) + "]");
  }
  Integer sum = 0;
  for (long j = table.startK; j <= k; ++j) sum += binomial(table.d - j, k - j) * table.at(j);
  return sum;
}

// Downward scans reject the top of a wide window in a few terms each, but the
// number of candidates still has to stay bounded.
constexpr long kMaxWindow = 1000000;

DepthBounds bounds(const HilbertFunction& h) {
  const long low = k0(h);
  const Integer h0 = evaluate(h, low);
  const Integer h1 = evaluate(h, low + 1);
  const Integer ratio = h1 / h0;  // both nonnegative: truncation is floor
  if (!ratio.fits_slong_p() || ratio > kMaxWindow) {
    throw Error(ErrorKind::OutOfRange, "depth window h(k0+1)/h(k0) = " + ratio.get_str() + " is too wide");
  }
  return {low, low + ratio.get_si()};
}

QDepthResult qdepth(const HilbertFunction& h) {
  const DepthBounds b = bounds(h);
  DepthScan scan = scanDepths(valuesOf(h), b.lower, b.lower, b.upper);
  QDepthResult result;
  result.qdepth = scan.qdepth;
  result.certificate = std::move(scan.certificate);
  result.lowerBound = b.lower;
  result.upperBound = b.upper;
  if (result.qdepth < b.upper) result.refutation = std::move(scan.refutation);
  return result;
}

std::vector<long> feasibleDepths(const HilbertFunction& h, long from, long to) {
  const long start = k0(h);
  const ValueFn value = valuesOf(h);
  std::vector<long> out;
  for (long d = std::max(from, start); d <= to; ++d) {
    if (betaTableFromValues(value, start, d).nonnegative()) out.push_back(d);
  }
  return out;
}

}  // namespace hdepth
