#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

namespace sigrec {

/// Splittable seeding: every consumer derives its own engine from
/// (master seed, stream name), so adding a consumer never perturbs the
/// draws of another.
inline std::mt19937_64 rng_stream(std::uint64_t seed, std::string_view name) {
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a
  auto mix = [&h](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xff;
      h *= 1099511628211ull;
    }
  };
  mix(seed);
  for (char ch : name) {
    h ^= static_cast<unsigned char>(ch);
    h *= 1099511628211ull;
  }
  return std::mt19937_64(h);
}

}  // namespace sigrec
