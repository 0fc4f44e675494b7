#pragma once

#include "hdepth/numbers.hpp"

#include <map>
#include <optional>

namespace hdepth {

/// Finitely supported integer polynomial in t and 1/t. Zero coefficients are never stored.
class LaurentPolynomial {
 public:
  using Terms = std::map<long, Integer>;

  LaurentPolynomial() = default;
  explicit LaurentPolynomial(Terms terms);

  static LaurentPolynomial monomial(long exponent, const Integer& coefficient = 1);
  /// 1 + t + ... + t^{length-1}.
  static LaurentPolynomial geometric(long length);

  bool isZero() const noexcept { return terms_.empty(); }
  const Terms& terms() const noexcept { return terms_; }
  Integer coefficient(long exponent) const;
  /// Requires a nonzero polynomial.
  long minExponent() const;
  long maxExponent() const;
  Integer valueAtOne() const;

  LaurentPolynomial shifted(long by) const;

  /// Exact quotient by (1 - t); nullopt when (1 - t) does not divide.
  std::optional<LaurentPolynomial> divideByOneMinusT() const;
  LaurentPolynomial multiplyByOneMinusT() const;

  LaurentPolynomial& operator+=(const LaurentPolynomial& other);
  LaurentPolynomial& operator-=(const LaurentPolynomial& other);
  LaurentPolynomial& operator*=(const Integer& scalar);

  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

 private:
  void addTerm(long exponent, const Integer& coefficient);

  Terms terms_;
};

}  // namespace hdepth
