#include "cpeval/rng.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "cpeval/error.hpp"
#include "cpeval/util.hpp"

namespace cpeval {

uint64_t Rng::substream_seed(uint64_t base_seed, std::string_view label) {
  std::string key = std::to_string(base_seed) + ":" + std::string(label);
  std::string digest = sha256_hex(key);
  uint64_t seed = 0;
  for (int i = 0; i < 16; ++i) {
    char c = digest[i];
    uint64_t nibble = c <= '9' ? c - '0' : c - 'a' + 10;
    seed = (seed << 4) | nibble;
  }
  return seed;
}

Rng Rng::substream(uint64_t base_seed, std::string_view label) {
  return Rng(substream_seed(base_seed, label));
}

double Rng::log_uniform(double lo, double hi) {
  if (!(lo > 0.0) || !(hi >= lo)) throw InputError("log_uniform requires 0 < lo <= hi");
  return std::exp(uniform(std::log(lo), std::log(hi)));
}

double Rng::normal(double mean, double stddev) {
  // Box-Muller, one value per call (its pair is discarded) so the stream
  // position is independent of how results are consumed.
  double u1 = next_double();
  double u2 = next_double();
  while (u1 <= 0.0) u1 = next_double();
  double z = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  return mean + stddev * z;
}

std::size_t Rng::index(std::size_t n) {
  if (n == 0) throw InputError("index from empty range");
  // Rejection sampling keeps the choice exactly uniform.
  uint64_t bound = n;
  uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  uint64_t x = next_u64();
  while (x >= limit) x = next_u64();
  return static_cast<std::size_t>(x % bound);
}

}  // namespace cpeval
