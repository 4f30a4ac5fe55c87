#include "rng.hpp"

namespace randcliff {

uint64_t CounterRng::next_below(uint64_t bound) {
  // Lemire's multiply-shift rejection method; exact uniformity over [0, bound).
  uint64_t x = next_u64();
  __uint128_t m = static_cast<__uint128_t>(x) * bound;
  uint64_t lo = static_cast<uint64_t>(m);
  if (lo < bound) {
    uint64_t threshold = (0 - bound) % bound;
    while (lo < threshold) {
      x = next_u64();
      m = static_cast<__uint128_t>(x) * bound;
      lo = static_cast<uint64_t>(m);
    }
  }
  return static_cast<uint64_t>(m >> 64);
}

uint64_t derive_stream(uint64_t master_seed, uint64_t stream_index) {
  // Double mix so nearby (seed, index) pairs share no arithmetic structure.
  return CounterRng::mix(CounterRng::mix(master_seed) ^ (stream_index + 0xD1B54A32D192ED03ULL));
}

} // namespace randcliff
