#pragma once

// Deterministic randomness. Every random choice in the library flows from a
// 64-bit root seed through named derivations, so a whole experiment is a pure
// function of its seed regardless of thread scheduling. Sampling is
// hand-rolled on top of mt19937_64 because the std distributions are not
// bit-stable across standard library implementations.

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace stylo {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// FNV-1a, used to fold stage names and item ids into seed derivations.
inline std::uint64_t hash_str(std::string_view s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
  return splitmix64(a ^ splitmix64(b));
}

inline std::uint64_t derive_seed(std::uint64_t root, std::string_view stage) {
  return mix_seed(root, hash_str(stage));
}

inline std::uint64_t derive_seed(std::uint64_t root, std::string_view stage,
                                 std::uint64_t item) {
  return mix_seed(mix_seed(root, hash_str(stage)), item);
}

inline std::uint64_t derive_seed(std::uint64_t root, std::string_view stage,
                                 std::string_view item) {
  return mix_seed(mix_seed(root, hash_str(stage)), hash_str(item));
}

inline std::uint64_t derive_seed(std::uint64_t root, std::string_view stage,
                                 std::string_view item, std::uint64_t k) {
  return mix_seed(derive_seed(root, stage, item), k);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, 1).
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Unbiased integer in [0, n). n must be positive.
  std::size_t below(std::size_t n) {
    const std::uint64_t span = static_cast<std::uint64_t>(n);
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t x = next_u64();
    while (x >= limit) x = next_u64();
    return static_cast<std::size_t>(x % span);
  }

  // Standard normal via Box-Muller. No spare caching so the draw count per
  // call is fixed.
  double normal() {
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
  }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[below(i)]);
    }
  }

  // k distinct indices from [0, n), uniform without replacement (partial
  // Fisher-Yates). Order of the result is the draw order.
  std::vector<std::size_t> sample_indices(std::size_t n, std::size_t k) {
    std::vector<std::size_t> pool(n);
    for (std::size_t i = 0; i < n; ++i) pool[i] = i;
    std::vector<std::size_t> out;
    out.reserve(k);
    for (std::size_t i = 0; i < k && i < n; ++i) {
      const std::size_t j = i + below(n - i);
      std::swap(pool[i], pool[j]);
      out.push_back(pool[i]);
    }
    return out;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace stylo
