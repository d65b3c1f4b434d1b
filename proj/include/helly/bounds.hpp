#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "helly/rational.hpp"

namespace helly {

/// ceil(2(k+1)/3) * 2^n - 2 ceil(2(k+1)/3) + 2. Requires n >= 1.
Integer c_upper(unsigned n, std::uint64_t k);

enum class Tightness { Tight, NotTight, Unknown };
std::string_view to_string(Tightness t);

struct BoundReport {
  unsigned n;
  std::uint64_t k;
  Integer upper;
  /// Known exact value of c(n,k): 2^n for k = 0, 2(2^n - 1) for k = 1.
  std::optional<Integer> exact_known;
  Tightness tight;
};

BoundReport c_report(unsigned n, std::uint64_t k);

enum class FloorClass { KPlus1, KPlus2 };

struct FloorIdentity {
  Integer value;
  FloorClass classification;
};

/// floor(3/2 * ceil(2(k+1)/3)), classified k+1 when k = 0,2 (mod 3) and k+2
/// when k = 1 (mod 3). Throws PostconditionFailure if the value disagrees
/// with its class.
FloorIdentity floor_identity(std::uint64_t k);

} // namespace helly
