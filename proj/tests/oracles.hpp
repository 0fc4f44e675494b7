#pragma once

// Test-only reference computations. Deliberately naive and independent of the
// library's code paths: power series are expanded by repeated prefix sums,
// binomials by explicit falling factorials, subsets by explicit variable lists.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <vector>

namespace oracle {

inline mpz_class fallingBinomial(long m, long r) {
  if (r < 0) return 0;
  mpz_class num = 1, den = 1;
  for (long i = 0; i < r; ++i) {
    num *= m - i;
    den *= i + 1;
  }
  return num / den;
}

inline mpz_class iteratedFactorial(long j) {
  mpz_class out = 1;
  for (long i = 2; i <= j; ++i) out *= i;
  return out;
}

/// Coefficients of t^lo..t^hi of numerator/(1-t)^p, expanding 1/(1-t) as a prefix sum p times.
inline std::vector<mpz_class> seriesWindow(const std::map<long, mpz_class>& numerator, int p, long lo, long hi) {
  long start = lo;
  for (const auto& [e, c] : numerator) start = std::min(start, e);
  std::vector<mpz_class> coeffs(static_cast<std::size_t>(hi - start + 1), 0);
  for (const auto& [e, c] : numerator) {
    if (e <= hi) coeffs[static_cast<std::size_t>(e - start)] += c;
  }
  for (int i = 0; i < p; ++i) {
    for (std::size_t k = 1; k < coeffs.size(); ++k) coeffs[k] += coeffs[k - 1];
  }
  return {coeffs.begin() + (lo - start), coeffs.end()};
}

/// beta_k^d by the defining sum over a value map (missing degrees are 0).
inline mpz_class beta(const std::map<long, mpz_class>& h, long startK, long d, long k) {
  mpz_class sum = 0;
  for (long j = startK; j <= k; ++j) {
    auto it = h.find(j);
    if (it == h.end()) continue;
    mpz_class term = fallingBinomial(d - j, k - j) * it->second;
    sum += ((k - j) % 2 == 0) ? term : mpz_class(-term);
  }
  return sum;
}

/// Definition-level depth: the largest d in [dLow, dHigh] whose full beta table is nonnegative.
inline long depthBySearch(const std::map<long, mpz_class>& h, long startK, long dLow, long dHigh) {
  long best = dLow - 1;
  for (long d = dLow; d <= dHigh; ++d) {
    bool ok = true;
    for (long k = startK; k <= d && ok; ++k) ok = beta(h, startK, d, k) >= 0;
    if (ok) best = d;
  }
  return best;
}

/// j! [x^j] (1 - x^2)^{-n}, from multiplying n truncated copies of 1 + x^2 + x^4 + ...
inline std::vector<mpz_class> rowOneBySeries(long n, long jmax) {
  std::vector<mpz_class> geometric(static_cast<std::size_t>(jmax + 1), 0);
  for (long j = 0; j <= jmax; j += 2) geometric[static_cast<std::size_t>(j)] = 1;
  std::vector<mpz_class> product(static_cast<std::size_t>(jmax + 1), 0);
  product[0] = 1;
  for (long f = 0; f < n; ++f) {
    std::vector<mpz_class> next(product.size(), 0);
    for (std::size_t a = 0; a < product.size(); ++a) {
      if (product[a] == 0) continue;
      for (std::size_t b = 0; a + b < product.size(); ++b) next[a + b] += product[a] * geometric[b];
    }
    product = std::move(next);
  }
  for (long j = 0; j <= jmax; ++j) product[static_cast<std::size_t>(j)] *= iteratedFactorial(j);
  return product;
}

using Generator = std::vector<int>;  // variable indices, 1-based

/// alpha_k by listing every subset of {1..n} and testing divisibility variable by variable.
inline std::vector<long> alphaBySubsets(int n, const std::vector<Generator>& J, const std::vector<Generator>& I) {
  auto member = [](const std::vector<int>& subset, const std::vector<Generator>& gens) {
    for (const auto& g : gens) {
      bool divides = true;
      for (int v : g) {
        bool found = false;
        for (int s : subset) found = found || s == v;
        divides = divides && found;
      }
      if (divides) return true;
    }
    return false;
  };
  std::vector<long> alpha(static_cast<std::size_t>(n + 1), 0);
  for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
    std::vector<int> subset;
    for (int v = 1; v <= n; ++v) {
      if (bits >> (v - 1) & 1u) subset.push_back(v);
    }
    if (member(subset, J) && !member(subset, I)) ++alpha[subset.size()];
  }
  return alpha;
}

}  // namespace oracle
