#pragma once

#include <cstdint>
#include <string>

namespace nilq {

/// splitmix64: tiny deterministic generator, identical across platforms.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound), bias-free by rejection.
  std::uint64_t below(std::uint64_t bound) {
    std::uint64_t limit = (~0ULL) - (~0ULL) % bound;
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return x % bound;
  }

  std::uint64_t nonzero_below(std::uint64_t bound) { return 1 + below(bound - 1); }

private:
  std::uint64_t state_;
};

inline std::uint64_t hash64(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline std::uint64_t derive_seed(std::uint64_t master, const std::string& tag) {
  Rng r(master ^ hash64(tag));
  return r.next();
}

}  // namespace nilq
