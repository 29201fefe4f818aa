#pragma once

#include <gmpxx.h>

#include <span>
#include <string>

namespace swh {

/// Exact probability carrier. GMP keeps values in lowest terms with a
/// positive denominator as long as construction goes through make_rational
/// or arithmetic on already-canonical values.
using Rational = mpq_class;

Rational make_rational(long numerator, long denominator);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

double to_double(const Rational& value);

/// Sum of numerators[i] / denominators[i] by binary splitting: partial sums
/// stay unreduced and a single gcd runs at the end.
Rational sum_fractions(std::span<const mpz_class> numerators,
                       std::span<const mpz_class> denominators);

/// Sum of 1/m for m in [first, last]; zero when the range is empty.
Rational harmonic_range(int first, int last);

}  // namespace swh
