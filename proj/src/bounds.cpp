#include "helly/bounds.hpp"

#include <string>

#include "helly/errors.hpp"

namespace helly {

namespace {

Integer uint_to_integer(std::uint64_t v) {
  Integer out;
  mpz_import(out.get_mpz_t(), 1, 1, sizeof v, 0, 0, &v);
  return out;
}

// ceil(2(k+1)/3)
Integer two_thirds_ceiling(std::uint64_t k) {
  Integer num = 2 * (uint_to_integer(k) + 1);
  Integer out;
  mpz_cdiv_q_ui(out.get_mpz_t(), num.get_mpz_t(), 3);
  return out;
}

Integer pow2(unsigned n) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, n);
  return out;
}

} // namespace

Integer c_upper(unsigned n, std::uint64_t k) {
  if (n < 1)
    throw InvalidInput("c_upper requires n >= 1");
  Integer t = two_thirds_ceiling(k);
  return t * pow2(n) - 2 * t + 2;
}

std::string_view to_string(Tightness t) {
  switch (t) {
  case Tightness::Tight:
    return "tight";
  case Tightness::NotTight:
    return "not_tight";
  case Tightness::Unknown:
    break;
  }
  return "unknown";
}

BoundReport c_report(unsigned n, std::uint64_t k) {
  BoundReport r{n, k, c_upper(n, k), std::nullopt, Tightness::Unknown};
  if (k == 0) {
    r.exact_known = pow2(n);
    r.tight = Tightness::Tight;
  } else if (k == 1) {
    r.exact_known = 2 * (pow2(n) - 1);
    r.tight = Tightness::Tight;
  } else if (n == 2 && k >= 3) {
    r.tight = Tightness::NotTight;
  }
  if (r.exact_known && *r.exact_known > r.upper)
    throw PostconditionFailure("known exact value exceeds the upper bound");
  return r;
}

FloorIdentity floor_identity(std::uint64_t k) {
  Integer t = two_thirds_ceiling(k);
  Integer value;
  mpz_fdiv_q_ui(value.get_mpz_t(), Integer(3 * t).get_mpz_t(), 2);
  FloorClass cls = (k % 3 == 1) ? FloorClass::KPlus2 : FloorClass::KPlus1;
  Integer expected = uint_to_integer(k) + (cls == FloorClass::KPlus2 ? 2 : 1);
  if (value != expected)
    throw PostconditionFailure("floor identity fails at k = " + std::to_string(k));
  return {value, cls};
}

} // namespace helly
