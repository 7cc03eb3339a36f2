#pragma once

#include <cstdint>
#include <string_view>

namespace gallery {

// Counter-based splittable PRNG. Each stream is a pure function of
// (master seed, purpose tag, counter), so independent streams can be split
// off one master seed without sharing state, and replaying a stream from the
// same seed is bit-identical on every platform.
//
// The mixing function is SplitMix64 (Steele et al.), driven in counter mode.
class RngStream {
 public:
  RngStream() = default;
  RngStream(std::uint64_t seed, std::uint64_t stream_id)
      : key_(mix(seed ^ (stream_id * 0x9e3779b97f4a7c15ULL))) {}

  std::uint64_t next_u64() { return mix(key_ + (++counter_) * 0x9e3779b97f4a7c15ULL); }

  // Uniform in [0, 1) with 53 random bits.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform in [lo, hi).
  double next_uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  // Uniform integer in [0, n). n must be > 0.
  std::uint64_t next_below(std::uint64_t n) { return next_u64() % n; }

  void reset() { counter_ = 0; }

 private:
  static constexpr std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t key_ = 0;
  std::uint64_t counter_ = 0;
};

// Stable stream ids for the purposes a run needs. Streams derived from the
// same master seed are independent; consuming one never perturbs another.
enum class RngPurpose : std::uint64_t {
  init = 1,     // parameter initialization
  dropout = 2,  // dropout masks
  data = 3,     // synthetic dataset generation
};

// The per-run generator bundle: one master seed, one stream per purpose.
struct RngBundle {
  RngBundle() = default;
  explicit RngBundle(std::uint64_t master_seed)
      : seed(master_seed),
        init(master_seed, static_cast<std::uint64_t>(RngPurpose::init)),
        dropout(master_seed, static_cast<std::uint64_t>(RngPurpose::dropout)),
        data(master_seed, static_cast<std::uint64_t>(RngPurpose::data)) {}

  std::uint64_t seed = 0;
  RngStream init;
  RngStream dropout;
  RngStream data;
};

inline RngBundle set_seed(std::uint64_t seed) { return RngBundle(seed); }

}  // namespace gallery
