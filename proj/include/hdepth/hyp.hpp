#pragma once

// Terminating hypergeometric quantities attached to the polynomial ring:
//
//   2F1(-k, n, -n; -1) = sum_{j=0}^{k} (-k)_j (n)_j / ((-n)_j j!) (-1)^j
//   E(n, k)            = sum_{j=0}^{k} (-1)^{k-j} C(k, j) (n)_j (n-k+1)_{k-j}
//
// and the Taylor coefficients c_k^(j) = g_k^(j)(0) of
// g_k(x) = (1-x)^{k-1} / (1-x^2)^n, which satisfy
//   c_k^(0) = 1,  c_k^(j) = c_{k-1}^(j) - j c_{k-1}^(j-1)   (k >= 2).

#include "hdepth/numbers.hpp"
#include "hdepth/report.hpp"

#include <vector>

namespace hdepth {

/// Exact 2F1(-k, n, -n; -1). Requires 0 <= k <= n.
Rational gauss2F1(long k, long n);

/// E(n, k) for 2 <= k <= n.
Integer bigE(long n, long k);

class CoeffTable {
 public:
  CoeffTable(long n, long kmax, long jmax);

  long n() const noexcept { return n_; }
  long kmax() const noexcept { return kmax_; }
  long jmax() const noexcept { return jmax_; }
  /// c_k^(j) for 1 <= k <= kmax, 0 <= j <= jmax.
  const Integer& at(long k, long j) const;

 private:
  long n_;
  long kmax_;
  long jmax_;
  std::vector<std::vector<Integer>> rows_;
};

/// Row k = 1 in closed form: c_1^(2l) = C(n+l-1, l) (2l)!, odd entries vanish.
Integer coeffRowOne(long n, long j);

CoeffTable coeffTable(long n, long kmax, long jmax);

/// Sign checks for 2 <= k <= n <= nmax: (-1)^k 2F1 > 0, E(n,k) > 0, (-1)^j c_k^(j) > 0
/// for 0 <= j <= k; plus the k = 0, 1 values 1 and 0.
VerificationReport checkSignLemma(long nmax);

/// beta_k^n(poly(n)) == (-1)^k C(n,k) 2F1(-k,n,-n;-1) for 0 <= k <= n <= nmax.
VerificationReport checkBetaIdentity(long nmax);

/// E(n,k) == (-1)^k c_k^(k) for 2 <= k <= n <= nmax.
VerificationReport checkELink(long nmax);

}  // namespace hdepth
