#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace swh {

using Engine = std::mt19937_64;

__extension__ using uint128 = unsigned __int128;

/// Independent stream number `index` under `seed`. Streams are keyed by
/// (seed, index) only, so results do not depend on which thread draws them.
inline Engine substream(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32),
                    0x5357u};
  return Engine(seq);
}

/// Uniform integer in [0, bound) by Lemire's multiply-and-reject method.
/// Portable across standard libraries, unlike std::uniform_int_distribution.
inline std::uint64_t uniform_below(Engine& rng, std::uint64_t bound) {
  std::uint64_t x = rng();
  uint128 m = static_cast<uint128>(x) * bound;
  auto low = static_cast<std::uint64_t>(m);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      x = rng();
      m = static_cast<uint128>(x) * bound;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

/// The last `count` steps of a Fisher-Yates pass run from the back: afterwards
/// the final `count` slots hold a uniformly random ordered sample of the
/// items, whatever the prior arrangement. count = size gives a full shuffle.
template <class T>
void shuffle_tail(std::span<T> items, std::size_t count, Engine& rng) {
  const std::size_t n = items.size();
  for (std::size_t i = n; i > n - count && i > 1; --i) {
    const std::size_t j = uniform_below(rng, i);
    std::swap(items[i - 1], items[j]);
  }
}

template <class T>
void fisher_yates(std::span<T> items, Engine& rng) {
  shuffle_tail(items, items.size(), rng);
}

}  // namespace swh
