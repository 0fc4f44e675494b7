#include "hdepth/hilbert.hpp"

#include "hdepth/errors.hpp"

namespace hdepth {

HilbertFunction HilbertFunction::fromRational(LaurentPolynomial numerator, int denomPower) {
  if (denomPower < 0) throw Error(ErrorKind::InvalidArity, "denominator power must be nonnegative");
  if (numerator.isZero()) throw Error(ErrorKind::EmptyFunction, "the zero function is not a valid Hilbert function");
  while (denomPower > 0) {
    auto quotient = numerator.divideByOneMinusT();
    if (!quotient) break;
    numerator = std::move(*quotient);
    --denomPower;
  }
  if (numerator.terms().begin()->second < 0) {
    throw Error(ErrorKind::NegativeValue,
                "lowest coefficient is negative: h(" + std::to_string(numerator.minExponent()) + ") < 0");
  }
  return HilbertFunction(std::move(numerator), denomPower);
}

HilbertFunction fromTable(const std::map<long, Integer>& values) {
  LaurentPolynomial::Terms terms;
  for (const auto& [k, v] : values) {
    if (v < 0) throw Error(ErrorKind::NegativeValue, "table value at " + std::to_string(k) + " is negative");
    if (v != 0) terms.emplace(k, v);
  }
  if (terms.empty()) throw Error(ErrorKind::EmptyFunction, "table has no positive value");
  return HilbertFunction::fromRational(LaurentPolynomial(std::move(terms)), 0);
}

HilbertFunction polynomialRing(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidArity, "polynomial ring needs at least one variable");
  return HilbertFunction::fromRational(LaurentPolynomial::monomial(0), n);
}

HilbertFunction freeModule(int n, std::span<const long> shifts) {
  if (n < 1) throw Error(ErrorKind::InvalidArity, "free module needs at least one variable");
  if (shifts.empty()) throw Error(ErrorKind::InvalidArity, "free module needs at least one summand");
  LaurentPolynomial numerator;
  for (long a : shifts) numerator += LaurentPolynomial::monomial(-a);
  return HilbertFunction::fromRational(std::move(numerator), n);
}

HilbertFunction completeIntersection(int n, std::span<const int> degrees) {
  if (n < 1) throw Error(ErrorKind::InvalidArity, "complete intersection needs at least one variable");
  if (degrees.size() > static_cast<std::size_t>(n)) {
    throw Error(ErrorKind::TooManyForms, std::to_string(degrees.size()) + " forms exceed " +
                                             std::to_string(n) + " variables");
  }
  LaurentPolynomial numerator = LaurentPolynomial::monomial(0);
  for (int d : degrees) {
    if (d < 1) throw Error(ErrorKind::InvalidDegree, "form degree " + std::to_string(d) + " is below 1");
    numerator = numerator * LaurentPolynomial::geometric(d);
  }
  return HilbertFunction::fromRational(std::move(numerator), n - static_cast<int>(degrees.size()));
}

Integer evaluate(const HilbertFunction& h, long k) {
  const int p = h.denomPower();
  Integer value = 0;
  if (p == 0) {
    value = h.numerator().coefficient(k);
  } else {
    for (const auto& [a, c] : h.numerator().terms()) {
      if (a > k) break;
      value += c * binomial(k - a + p - 1, p - 1);
    }
  }
  if (value < 0) {
    throw Error(ErrorKind::NegativeValue, "h(" + std::to_string(k) + ") = " + value.get_str() + " is negative");
  }
  return value;
}

std::vector<Integer> evaluateRange(const HilbertFunction& h, long from, long to) {
  std::vector<Integer> out;
  if (to < from) return out;
  out.reserve(static_cast<std::size_t>(to - from + 1));
  for (long k = from; k <= to; ++k) out.push_back(evaluate(h, k));
  return out;
}

long k0(const HilbertFunction& h) { return h.numerator().minExponent(); }

std::optional<long> kf(const HilbertFunction& h) {
  if (h.denomPower() > 0) return std::nullopt;
  return h.numerator().maxExponent();
}

HilbertFunction add(const HilbertFunction& a, const HilbertFunction& b) {
  const int p = std::max(a.denomPower(), b.denomPower());
  auto lift = [p](const HilbertFunction& h) {
    LaurentPolynomial num = h.numerator();
    for (int i = h.denomPower(); i < p; ++i) num = num.multiplyByOneMinusT();
    return num;
  };
  return HilbertFunction::fromRational(lift(a) + lift(b), p);
}

HilbertFunction scale(const HilbertFunction& h, long r) {
  if (r < 1) throw Error(ErrorKind::InvalidArity, "scale factor must be positive");
  LaurentPolynomial num = h.numerator();
  num *= Integer(r);
  return HilbertFunction::fromRational(std::move(num), h.denomPower());
}

HilbertFunction shift(const HilbertFunction& h, long m) {
  return HilbertFunction::fromRational(h.numerator().shifted(-m), h.denomPower());
}

HilbertFunction extend(const HilbertFunction& h) {
  return HilbertFunction::fromRational(h.numerator(), h.denomPower() + 1);
}

std::string toString(const HilbertFunction& h) {
  std::string num;
  bool first = true;
  for (const auto& [e, c] : h.numerator().terms()) {
    Integer mag = abs(c);
    if (first) {
      if (c < 0) num += "-";
    } else {
      num += c < 0 ? " - " : " + ";
    }
    first = false;
    const bool unit = (mag == 1);
    if (e == 0) {
      num += mag.get_str();
      continue;
    }
    if (!unit) num += mag.get_str() + "*";
    num += e == 1 ? std::string("t") : "t^" + std::to_string(e);
  }
  if (h.denomPower() == 0) return num;
  std::string out = h.numerator().terms().size() > 1 ? "(" + num + ")" : num;
  out += "/(1-t)";
  if (h.denomPower() > 1) out += "^" + std::to_string(h.denomPower());
  return out;
}

}  // namespace hdepth
