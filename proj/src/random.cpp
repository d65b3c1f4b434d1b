#include "helly/random.hpp"

#include <stdexcept>

namespace helly {

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  if (lo > hi)
    throw std::invalid_argument("Rng::uniform with empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
  if (span == UINT64_MAX)
    return static_cast<std::int64_t>(next());
  const std::uint64_t range = span + 1;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
  std::uint64_t draw;
  do {
    draw = next();
  } while (draw >= limit);
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + draw % range);
}

Integer Rng::uniform_below(const Integer &bound) {
  if (bound <= 0)
    throw std::invalid_argument("Rng::uniform_below needs a positive bound");
  const std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
  while (true) {
    Integer candidate = 0;
    std::size_t filled = 0;
    while (filled < bits) {
      std::uint64_t chunk = next();
      std::size_t take = bits - filled < 64 ? bits - filled : 64;
      if (take < 64)
        chunk &= (std::uint64_t{1} << take) - 1;
      Integer part;
      mpz_import(part.get_mpz_t(), 1, 1, sizeof chunk, 0, 0, &chunk);
      candidate = (candidate << static_cast<mp_bitcnt_t>(take)) + part;
      filled += take;
    }
    if (candidate < bound)
      return candidate;
  }
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  // splitmix64 finaliser over the pair.
  std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

} // namespace helly
