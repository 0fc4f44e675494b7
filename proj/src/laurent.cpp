#include "hdepth/laurent.hpp"

#include "hdepth/errors.hpp"

namespace hdepth {

LaurentPolynomial::LaurentPolynomial(Terms terms) {
  for (auto& [e, c] : terms) {
    if (c != 0) terms_.emplace(e, std::move(c));
  }
}

LaurentPolynomial LaurentPolynomial::monomial(long exponent, const Integer& coefficient) {
  LaurentPolynomial p;
  p.addTerm(exponent, coefficient);
  return p;
}

LaurentPolynomial LaurentPolynomial::geometric(long length) {
  LaurentPolynomial p;
  for (long e = 0; e < length; ++e) p.terms_.emplace(e, 1);
  return p;
}

Integer LaurentPolynomial::coefficient(long exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Integer(0) : it->second;
}

long LaurentPolynomial::minExponent() const {
  if (terms_.empty()) throw Error(ErrorKind::EmptyFunction, "zero polynomial has no exponents");
  return terms_.begin()->first;
}

long LaurentPolynomial::maxExponent() const {
  if (terms_.empty()) throw Error(ErrorKind::EmptyFunction, "zero polynomial has no exponents");
  return terms_.rbegin()->first;
}

Integer LaurentPolynomial::valueAtOne() const {
  Integer sum = 0;
  for (const auto& [e, c] : terms_) sum += c;
  return sum;
}

LaurentPolynomial LaurentPolynomial::shifted(long by) const {
  LaurentPolynomial p;
  for (const auto& [e, c] : terms_) p.terms_.emplace_hint(p.terms_.end(), e + by, c);
  return p;
}

std::optional<LaurentPolynomial> LaurentPolynomial::divideByOneMinusT() const {
  if (terms_.empty()) return LaurentPolynomial{};
  if (valueAtOne() != 0) return std::nullopt;
  // N = (1 - t) Q  =>  q_e = n_e + q_{e-1}; Q stops one below max exponent of N.
  LaurentPolynomial q;
  Integer running = 0;
  const long lo = minExponent();
  const long hi = maxExponent();
  for (long e = lo; e < hi; ++e) {
    running += coefficient(e);
    if (running != 0) q.terms_.emplace_hint(q.terms_.end(), e, running);
  }
  return q;
}

LaurentPolynomial LaurentPolynomial::multiplyByOneMinusT() const {
  LaurentPolynomial out = *this;
  for (const auto& [e, c] : terms_) out.addTerm(e + 1, -c);
  return out;
}

void LaurentPolynomial::addTerm(long exponent, const Integer& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& other) {
  for (const auto& [e, c] : other.terms_) addTerm(e, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& other) {
  for (const auto& [e, c] : other.terms_) addTerm(e, -c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const Integer& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  LaurentPolynomial out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out.addTerm(ea + eb, ca * cb);
  }
  return out;
}

}  // namespace hdepth
