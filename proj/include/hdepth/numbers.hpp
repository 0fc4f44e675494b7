#pragma once

// Exact integer and rational arithmetic backed by GMP, plus the
// combinatorial primitives used across the library.

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hdepth {

using Integer = mpz_class;
using Rational = mpq_class;

/// Generalized binomial m(m-1)...(m-r+1)/r!. Zero for r < 0; defined for any m.
Integer binomial(const Integer& m, long r);
Integer binomial(long m, long r);

Integer factorial(unsigned long j);

/// Rising factorial a(a+1)...(a+j-1); (a)_0 = 1.
Rational pochhammer(const Rational& a, unsigned long j);
Integer pochhammer(const Integer& a, unsigned long j);

/// (-1)^e as +1/-1.
inline int signPower(long e) { return (e % 2 == 0) ? 1 : -1; }

std::string toString(const Integer& value);
std::string toString(const Rational& value);

/// Parses an optionally signed decimal integer. Throws hdepth::Error(OutOfRange) on malformed text.
Integer parseInteger(std::string_view text);

}  // namespace hdepth
