#ifndef TRACECODE_SRC_RNG_HPP
#define TRACECODE_SRC_RNG_HPP

#include <cstdint>
#include <limits>
#include <random>

namespace tracecode::detail {

// Uniform in [0, n) by rejection; same stream on every platform for a given seed.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t r;
  do r = rng();
  while (r >= limit);
  return r % n;
}

}  // namespace tracecode::detail

#endif  // TRACECODE_SRC_RNG_HPP
