#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>

namespace specfill {

// splitmix64 finalizer; used to derive independent seeds from a master seed.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// FNV-1a
inline std::uint64_t hash_str(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

inline std::uint64_t derive_seed(std::uint64_t master, std::string_view tag, std::uint64_t salt) {
  return mix64(master ^ mix64(hash_str(tag)) ^ mix64(salt + 0x517cc1b727220a95ull));
}

// Unbiased draw from [0, n) by mask rejection. std::uniform_int_distribution is
// implementation-defined, which would break seeded reproducibility across stdlibs.
inline std::uint64_t uniform_index(std::mt19937_64& rng, std::uint64_t n) {
  std::uint64_t mask = n - 1;
  mask |= mask >> 1;
  mask |= mask >> 2;
  mask |= mask >> 4;
  mask |= mask >> 8;
  mask |= mask >> 16;
  mask |= mask >> 32;
  for (;;) {
    std::uint64_t v = rng() & mask;
    if (v < n) return v;
  }
}

// Uniform double in [0, 1) with 53 random bits.
inline double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Standard normal draws via Box-Muller (std::normal_distribution is likewise
// implementation-defined).
class NormalSampler {
 public:
  double operator()(std::mt19937_64& rng) {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = 1.0 - uniform_unit(rng);  // (0, 1]
    double u2 = uniform_unit(rng);
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
  }

 private:
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace specfill
