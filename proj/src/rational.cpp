#include "helly/rational.hpp"

#include <limits>
#include <stdexcept>

#include "helly/errors.hpp"

namespace helly {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty())
    return false;
  for (char c : s)
    if (c < '0' || c > '9')
      return false;
  return true;
}

} // namespace

Integer parse_integer(std::string_view text) {
  std::string_view digits = text;
  bool negative = false;
  if (!digits.empty() && (digits.front() == '+' || digits.front() == '-')) {
    negative = digits.front() == '-';
    digits.remove_prefix(1);
  }
  if (!all_digits(digits))
    throw InvalidInput("malformed integer literal \"" + std::string(text) + "\"");
  Integer value(std::string(digits), 10);
  return negative ? Integer(-value) : value;
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos)
    return Rational(parse_integer(text));
  std::string_view den_text = text.substr(slash + 1);
  if (!all_digits(den_text))
    throw InvalidInput("malformed rational literal \"" + std::string(text) + "\"");
  Integer num = parse_integer(text.substr(0, slash));
  Integer den(std::string(den_text), 10);
  if (den == 0)
    throw InvalidInput("zero denominator in \"" + std::string(text) + "\"");
  Rational out(num, den);
  out.canonicalize();
  return out;
}

std::string to_string(const Integer &value) { return value.get_str(10); }

std::string to_string(const Rational &value) {
  if (value.get_den() == 1)
    return value.get_num().get_str(10);
  return value.get_num().get_str(10) + "/" + value.get_den().get_str(10);
}

Integer floor(const Rational &value) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return out;
}

Integer ceil(const Rational &value) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return out;
}

bool fits_int64(const Integer &value) {
  static const Integer lo = to_integer(std::numeric_limits<std::int64_t>::min());
  static const Integer hi = to_integer(std::numeric_limits<std::int64_t>::max());
  return value >= lo && value <= hi;
}

std::int64_t to_int64(const Integer &value) {
  if (!fits_int64(value))
    throw std::overflow_error("integer " + to_string(value) + " exceeds 64 bits");
  return static_cast<std::int64_t>(mpz_get_si(value.get_mpz_t()));
}

Integer gcd(const Integer &a, const Integer &b) {
  Integer out;
  mpz_gcd(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

Integer lcm(const Integer &a, const Integer &b) {
  Integer out;
  mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

} // namespace helly
