#pragma once

#include <cstdint>
#include <initializer_list>

namespace pbc {

// SplitMix64 (Steele/Lea/Vigna).  One 64-bit state word, one
// multiply-xorshift finalizer per output.  This is the repo-wide generator:
// trivially seedable, counter-based, and bit-exact across platforms, which
// is what makes every run in this project reproducible from its seed.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next_u64() {
    uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0,1), 53-bit resolution.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform in [0,n).  Modulo reduction; bias is negligible for the small n
  /// used here and the mapping is pinned so streams stay reproducible.
  uint64_t next_below(uint64_t n) { return next_u64() % n; }

  bool next_bit() { return (next_u64() >> 63) != 0; }

 private:
  uint64_t state_;
};

/// Pinned seed-derivation hash: folds parts through SplitMix64 finalizer
/// rounds.  Used everywhere a run needs decorrelated sub-seeds (per sweep
/// cell, per run index, alphabet vs. generator vs. tie-break streams).
inline uint64_t mix_seed(std::initializer_list<uint64_t> parts) {
  uint64_t h = 0x9E3779B97F4A7C15ull;
  for (uint64_t p : parts) {
    SplitMix64 s(h ^ p);
    h = s.next_u64();
  }
  return h;
}

}  // namespace pbc
