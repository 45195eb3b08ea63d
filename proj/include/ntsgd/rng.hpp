#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace ntsgd {

// Deterministic splittable PRNG.
//
// Each stream is identified by a 64-bit key. The uniform generator is
// xoshiro256++ whose state is expanded from the key with SplitMix64.
// split(label) derives a child key as
//
//   child_key = splitmix64_step(parent_key ^ fnv1a64(label))
//
// so a child stream depends only on the root seed and the chain of labels,
// never on how far the parent has been consumed. Identical (seed, labels)
// give bit-identical sequences on every platform.
class SplitRng {
 public:
  explicit SplitRng(std::uint64_t seed);

  std::uint64_t next_u64();

  // Uniform on [0, 1), 53-bit resolution: (next_u64() >> 11) * 2^-53.
  double next_unit();

  // Uniform integer in [0, n), n >= 1, via 128-bit multiply-shift.
  std::uint64_t next_below(std::uint64_t n);

  // One N(0, sigma^2) draw from the Box-Muller cosine branch:
  //   z = sqrt(-2 ln u1) * cos(2 pi u2),  u1 in (0,1], u2 in [0,1).
  // Always consumes exactly two 64-bit words; no spare is cached.
  double next_gaussian(double sigma);

  // Child stream derived from (key, label). Parent state is untouched.
  [[nodiscard]] SplitRng split(std::string_view label) const;

  std::uint64_t key() const { return key_; }

 private:
  std::uint64_t key_;
  std::uint64_t s_[4];
};

// n i.i.d. N(0, sigma^2) draws. sigma = 0 returns exact zeros without
// consuming the stream.
std::vector<double> sample_gaussian(SplitRng& rng, std::size_t n, double sigma);

}  // namespace ntsgd
