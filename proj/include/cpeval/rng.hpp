#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace cpeval {

// Deterministic RNG with samplers that behave identically on every platform.
// std::mt19937_64 output is fully specified by the standard; the std::*
// distributions are not, so they are not used here.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  // Labeled substream of a base seed (single config seed fanned out to
  // independent per-purpose streams).
  static Rng substream(uint64_t base_seed, std::string_view label);
  static uint64_t substream_seed(uint64_t base_seed, std::string_view label);

  uint64_t next_u64() { return engine_(); }

  // Uniform in [0, 1) with 53 random bits.
  double next_double() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  double log_uniform(double lo, double hi);

  double normal(double mean, double stddev);

  // Uniform index in [0, n).
  std::size_t index(std::size_t n);

 private:
  std::mt19937_64 engine_;
};

}  // namespace cpeval
