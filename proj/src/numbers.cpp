#include "hdepth/numbers.hpp"

#include "hdepth/errors.hpp"

#include <cctype>

namespace hdepth {

Integer binomial(const Integer& m, long r) {
  Integer out;
  if (r < 0) return out;
  // mpz_bin_ui handles negative m via (-1)^r binomial(r-m-1, r).
  mpz_bin_ui(out.get_mpz_t(), m.get_mpz_t(), static_cast<unsigned long>(r));
  return out;
}

Integer binomial(long m, long r) { return binomial(Integer(m), r); }

Integer factorial(unsigned long j) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), j);
  return out;
}

Rational pochhammer(const Rational& a, unsigned long j) {
  Rational out = 1;
  Rational factor = a;
  for (unsigned long i = 0; i < j; ++i) {
    out *= factor;
    if (out == 0) break;
    factor += 1;
  }
  out.canonicalize();
  return out;
}

Integer pochhammer(const Integer& a, unsigned long j) {
  Integer out = 1;
  Integer factor = a;
  for (unsigned long i = 0; i < j; ++i) {
    out *= factor;
    if (out == 0) break;
    ++factor;
  }
  return out;
}

std::string toString(const Integer& value) { return value.get_str(); }

std::string toString(const Rational& value) { return value.get_str(); }

Integer parseInteger(std::string_view text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) throw Error(ErrorKind::OutOfRange, "malformed integer '" + std::string(text) + "'");
  for (std::size_t p = i; p < text.size(); ++p) {
    if (!std::isdigit(static_cast<unsigned char>(text[p])))
      throw Error(ErrorKind::OutOfRange, "malformed integer '" + std::string(text) + "'");
  }
  std::string digits(text.substr(text[0] == '+' ? 1 : 0));
  return Integer(digits, 10);
}

}  // namespace hdepth
