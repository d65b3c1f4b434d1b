#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace helly {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses an optional sign, a decimal integer and an optional "/q" with
/// q > 0. Non-canonical input such as "4/6" is accepted and reduced.
Rational parse_rational(std::string_view text);

/// Parses an optional sign followed by decimal digits.
Integer parse_integer(std::string_view text);

/// Lowest-terms text: "p" when the denominator is 1, else "p/q".
std::string to_string(const Rational &value);
std::string to_string(const Integer &value);

Integer floor(const Rational &value);
Integer ceil(const Rational &value);

bool fits_int64(const Integer &value);
/// Throws std::overflow_error when the value does not fit.
std::int64_t to_int64(const Integer &value);

inline Integer to_integer(std::int64_t v) {
  Integer out;
  // mpz_class has no int64 constructor on every platform.
  mpz_set_si(out.get_mpz_t(), static_cast<long>(v));
  return out;
}

inline Rational to_rational(std::int64_t v) { return Rational(to_integer(v)); }

Integer gcd(const Integer &a, const Integer &b);
Integer lcm(const Integer &a, const Integer &b);

} // namespace helly
