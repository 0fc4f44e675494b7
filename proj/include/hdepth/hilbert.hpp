#pragma once

// Hilbert functions represented by their rational generating function
//   H(t) = numerator(t) / (1 - t)^denomPower,   h(k) = [t^k] H(t).
// Values are always kept in canonical form: (1 - t) is divided out of the
// numerator as long as denomPower > 0, and the lowest numerator coefficient
// (which equals h(k0)) is positive. Structural equality is therefore
// equality of functions.

#include "hdepth/laurent.hpp"
#include "hdepth/numbers.hpp"

#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace hdepth {

class HilbertFunction {
 public:
  /// Canonicalizes. Throws EmptyFunction for a zero numerator and
  /// NegativeValue when h(k0) would be negative.
  static HilbertFunction fromRational(LaurentPolynomial numerator, int denomPower);

  const LaurentPolynomial& numerator() const noexcept { return numerator_; }
  int denomPower() const noexcept { return denomPower_; }

  friend bool operator==(const HilbertFunction&, const HilbertFunction&) = default;

 private:
  HilbertFunction(LaurentPolynomial numerator, int denomPower)
      : numerator_(std::move(numerator)), denomPower_(denomPower) {}

  LaurentPolynomial numerator_;
  int denomPower_ = 0;
};

// Constructors.

/// Finite table of values; denomPower 0.
HilbertFunction fromTable(const std::map<long, Integer>& values);
/// K[x_1..x_n].
HilbertFunction polynomialRing(int n);
/// S(a_1) + ... + S(a_m) over S = K[x_1..x_n].
HilbertFunction freeModule(int n, std::span<const long> shifts);
/// S/(f_1..f_r) for a graded complete intersection with deg f_i = degrees[i].
HilbertFunction completeIntersection(int n, std::span<const int> degrees);

// Queries.

/// h(k). Throws NegativeValue if the coefficient is negative.
Integer evaluate(const HilbertFunction& h, long k);
/// h(from), ..., h(to).
std::vector<Integer> evaluateRange(const HilbertFunction& h, long from, long to);
long k0(const HilbertFunction& h);
/// Top nonzero degree; nullopt for infinite support.
std::optional<long> kf(const HilbertFunction& h);

// Algebra.

HilbertFunction add(const HilbertFunction& a, const HilbertFunction& b);
HilbertFunction scale(const HilbertFunction& h, long r);
/// M(m): result(k) = h(k + m).
HilbertFunction shift(const HilbertFunction& h, long m);
/// M[x_{n+1}]: result(j) = sum_{l <= j} h(l).
HilbertFunction extend(const HilbertFunction& h);

/// Human-readable rational form, e.g. "(1 + t - t^3)/(1-t)^2".
std::string toString(const HilbertFunction& h);
inline std::ostream& operator<<(std::ostream& out, const HilbertFunction& h) { return out << toString(h); }

}  // namespace hdepth
