#pragma once

#include <cstdint>

namespace megkit {

/// splitmix64 generator. Output for a fixed seed is identical on every
/// platform, which keeps generated graphs reproducible.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform value in [0, bound); bound must be positive.
  int below(int bound) noexcept {
    return static_cast<int>(
        (static_cast<unsigned __int128>(next()) *
         static_cast<unsigned __int128>(static_cast<std::uint64_t>(bound))) >>
        64);
  }

  /// True with probability p.
  bool chance(double p) noexcept {
    return static_cast<double>(next() >> 11) * 0x1.0p-53 < p;
  }

 private:
  std::uint64_t state_;
};

}  // namespace megkit
