#pragma once

// Squarefree monomial ideals over K[x_1..x_n], encoded as bitmasks: variable
// x_i is bit i-1, so a squarefree monomial is a subset of {1..n}.

#include "hdepth/hilbert.hpp"
#include "hdepth/qdepth.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hdepth {

inline constexpr int kDefaultVariableCap = 20;
inline constexpr int kHardVariableCap = 28;

using MonomialMask = std::uint32_t;

struct Monomial {
  MonomialMask mask = 0;
  int degree() const noexcept { return __builtin_popcount(mask); }
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Minimal generators, sorted. No generators is the zero ideal; the single generator 1 (mask 0) is S.
class SquarefreeIdeal {
 public:
  SquarefreeIdeal(int n, std::vector<MonomialMask> generators);

  static SquarefreeIdeal zero(int n) { return SquarefreeIdeal(n, {}); }
  static SquarefreeIdeal unit(int n) { return SquarefreeIdeal(n, {0}); }

  int variables() const noexcept { return n_; }
  const std::vector<MonomialMask>& generators() const noexcept { return generators_; }
  bool isZero() const noexcept { return generators_.empty(); }

  bool contains(Monomial u) const noexcept;
  bool contains(const SquarefreeIdeal& other) const noexcept;

  friend bool operator==(const SquarefreeIdeal&, const SquarefreeIdeal&) = default;

 private:
  int n_;
  std::vector<MonomialMask> generators_;
};

/// Drops generators divisible by another generator; sorts and deduplicates.
std::vector<MonomialMask> minimalize(std::vector<MonomialMask> generators);

/// "x1*x3, x2*x4", "0" or "1". Throws ParseError on syntax, Error(InvalidIdeal) on bad variables.
SquarefreeIdeal parseIdeal(std::string_view text, int n);
std::string toString(const SquarefreeIdeal& ideal);

/// J/I with I strictly contained in J.
class SquarefreeQuotient {
 public:
  /// Throws InvalidIdeal if n differs, I is not inside J, or J \ I is empty.
  SquarefreeQuotient(SquarefreeIdeal J, SquarefreeIdeal I);

  int variables() const noexcept { return J_.variables(); }
  const SquarefreeIdeal& J() const noexcept { return J_; }
  const SquarefreeIdeal& I() const noexcept { return I_; }

  friend bool operator==(const SquarefreeQuotient&, const SquarefreeQuotient&) = default;

 private:
  SquarefreeIdeal J_;
  SquarefreeIdeal I_;
};

/// alpha_k = #{squarefree u of degree k : u in J, u not in I}, k = 0..n, by full 2^n scan.
/// Throws TooManyVariables when n exceeds variableCap (itself at most kHardVariableCap).
std::vector<Integer> alphaVector(const SquarefreeQuotient& q, int variableCap = kDefaultVariableCap);

/// Max d in [0, n] with beta_k^d(J/I) >= 0 for all 0 <= k <= d. The certificate starts at k = 0.
QDepthResult qdepthQuotient(const SquarefreeQuotient& q, int variableCap = kDefaultVariableCap);

/// Hilbert function of (J + (x_i^2)) / (I + (x_i^2)): the alpha vector as a table.
HilbertFunction mModule(const SquarefreeQuotient& q, int variableCap = kDefaultVariableCap);

/// Both routes to the depth agree.
bool checkPropQQ(const SquarefreeQuotient& q, int variableCap = kDefaultVariableCap);

/// Seeded random quotient with genCountJ nonconstant generators for J and genCountI for I;
/// each I generator is multiplied up into J. Throws GenerationFailed after bounded retries.
SquarefreeQuotient randomQuotient(int n, std::uint64_t seed, int genCountJ, int genCountI);

std::string toString(const SquarefreeQuotient& q);

}  // namespace hdepth
