#pragma once

#include <cstdint>
#include <initializer_list>
#include <string_view>

namespace abc {

// Project-wide generator: splitmix64. Chosen because it is trivially
// splittable (independent streams are derived by hashing a seed path),
// fully specified by ~10 lines of integer arithmetic, and therefore
// bit-reproducible across platforms. The generator name is recorded in
// all output metadata as "splitmix64".
inline constexpr const char* kRngName = "splitmix64";

uint64_t mix64(uint64_t x);

// Derives an independent stream seed from a base seed and a tag path.
// Equal (base, path) always yields the same seed; distinct paths yield
// statistically independent streams.
uint64_t derive_seed(uint64_t base, std::initializer_list<uint64_t> path);

// FNV-1a hash of a string, finalized through mix64; used to fold names
// (model, method) into seed paths.
uint64_t hash_tag(std::string_view tag);

class RandomStream {
 public:
  explicit RandomStream(uint64_t seed) : state_(mix64(seed ^ 0x5851f42d4c957f2dULL)) {}

  uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix64(state_);
  }

  // Uniform on [0,1), 53-bit resolution.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform on the open interval (0,1); safe input for quantile functions.
  double next_open() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  double next_uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  // Standard normal via the inverse CDF; exactly one u64 consumed per draw.
  double next_normal();

  // Exponential with the given rate; rate 0 yields +infinity.
  double next_exponential(double rate);

 private:
  uint64_t state_;
};

}  // namespace abc
