#include "ntsgd/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ntsgd {

namespace {

inline std::uint64_t rotl(std::uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}

// One SplitMix64 step: advances the state and returns the mixed output.
inline std::uint64_t splitmix64_step(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  return h;
}

}  // namespace

SplitRng::SplitRng(std::uint64_t seed) : key_(seed) {
  std::uint64_t sm = seed;
  for (auto& word : s_) {
    word = splitmix64_step(sm);
  }
  // xoshiro256++ must not start from the all-zero state.
  if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) {
    s_[0] = 0x9E3779B97F4A7C15ULL;
  }
}

std::uint64_t SplitRng::next_u64() {
  const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

double SplitRng::next_unit() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::uint64_t SplitRng::next_below(std::uint64_t n) {
  if (n == 0) {
    throw std::invalid_argument("SplitRng::next_below: n must be >= 1");
  }
  return static_cast<std::uint64_t>(
      (static_cast<__uint128_t>(next_u64()) * n) >> 64);
}

double SplitRng::next_gaussian(double sigma) {
  // u1 in (0, 1] keeps the log finite; u2 in [0, 1).
  const double u1 = static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
  const double u2 = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  const double r = std::sqrt(-2.0 * std::log(u1));
  return sigma * r * std::cos(2.0 * std::numbers::pi * u2);
}

SplitRng SplitRng::split(std::string_view label) const {
  std::uint64_t state = key_ ^ fnv1a64(label);
  return SplitRng(splitmix64_step(state));
}

std::vector<double> sample_gaussian(SplitRng& rng, std::size_t n,
                                    double sigma) {
  if (sigma < 0) {
    throw std::invalid_argument("sample_gaussian: sigma must be >= 0");
  }
  if (sigma == 0) {
    return std::vector<double>(n, 0.0);
  }
  std::vector<double> out(n);
  for (double& v : out) {
    v = rng.next_gaussian(sigma);
  }
  return out;
}

}  // namespace ntsgd
