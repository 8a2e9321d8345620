// Copyright (c) 2026 polsarclass developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <span>

namespace polsar {

// Reproducibility contract: every algorithm below is fixed by this file, not
// by the standard library, so a given (seed, domain, index) produces the same
// stream on any platform and in any future version.
//
//   engine        xoshiro256++ (Blackman & Vigna)
//   seeding       splitmix64 expansion of a 64-bit seed
//   substreams    child(master, domain, index) = splitmix64 chain over the
//                 three values; domains keep e.g. mosaic tiles and prototype
//                 samples on provably disjoint streams
//   uniform       53-bit mantissa from the top bits, in [0, 1)
//   normal        Marsaglia polar method, second variate cached

/// splitmix64 finalizer; also used as the substream key derivation.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Purpose tags for derived substreams. Values are arbitrary but frozen.
enum class StreamDomain : std::uint64_t {
  General = 0x706f6c7361722d30ULL,
  MosaicTile = 0x706f6c7361722d31ULL,
  PrototypeClass = 0x706f6c7361722d32ULL,
  Trial = 0x706f6c7361722d33ULL,
};

class Stream {
 public:
  explicit Stream(std::uint64_t seed) {
    // Canonical xoshiro seeding: fill the state with a splitmix64 sequence.
    std::uint64_t s = seed;
    for (auto& w : state_) {
      s += 0x9e3779b97f4a7c15ULL;
      w = mix64(s - 0x9e3779b97f4a7c15ULL);
    }
    if (state_[0] == 0 && state_[1] == 0 && state_[2] == 0 && state_[3] == 0) {
      state_[0] = 1;  // all-zero state is the one invalid xoshiro state
    }
  }

  /// Deterministic substream for (master seed, purpose, index).
  static Stream child(std::uint64_t master_seed, StreamDomain domain,
                      std::uint64_t index) {
    const std::uint64_t key =
        mix64(mix64(master_seed ^ static_cast<std::uint64_t>(domain)) ^ index);
    return Stream(key);
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  /// Uniform double in [0, 1) with a full 53-bit mantissa.
  double uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Standard normal variate (Marsaglia polar method).
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u, v, s;
    do {
      u = 2.0 * uniform01() - 1.0;
      v = 2.0 * uniform01() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * f;
    have_spare_ = true;
    return u * f;
  }

  void normals(std::span<double> out) {
    for (auto& x : out) x = normal();
  }

 private:
  static constexpr std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::array<std::uint64_t, 4> state_{};
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace polsar
