#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <cmath>

namespace pdmp {

/// Purpose tags for RNG sub-streams. Streams with distinct (seed, trajectory,
/// purpose) triples are statistically independent; identical triples replay
/// the same draw sequence.
enum class StreamPurpose : std::uint64_t {
  Chain = 1,
  Coupling = 2,
  JumpCheck = 3,
  FlowCheck = 4,
  Analysis = 5,
  Bootstrap = 6,
  Generic = 7,
};

namespace detail {
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}
}  // namespace detail

/// Deterministic counter-free RNG stream (xoshiro256**). All randomness in
/// the library flows through streams keyed by (seed, trajectory, purpose);
/// no global RNG exists.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t trajectory,
            StreamPurpose purpose = StreamPurpose::Generic) {
    std::uint64_t sm = seed;
    sm ^= 0x6a09e667f3bcc909ULL + detail::splitmix64(sm);
    sm ^= trajectory * 0xff51afd7ed558ccdULL + 0x2545f4914f6cdd1dULL;
    sm ^= static_cast<std::uint64_t>(purpose) * 0xc2b2ae3d27d4eb4fULL;
    for (auto& w : s_) w = detail::splitmix64(sm);
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  /// Uniform draw on [0,1) with 53 random bits.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Exponential(rate) via inverse CDF; consumes exactly one uniform.
  double exponential(double rate) {
    if (rate <= 0.0) throw std::invalid_argument("exponential: rate must be positive");
    return -std::log1p(-uniform()) / rate;
  }

  /// Index draw proportional to the (nonnegative, not necessarily normalized)
  /// weight vector; consumes exactly one uniform.
  std::size_t discrete(std::span<const double> weights) {
    double total = 0.0;
    for (double w : weights) total += w;
    if (!(total > 0.0)) throw std::invalid_argument("discrete: weights must have positive mass");
    double u = uniform() * total;
    for (std::size_t k = 0; k + 1 < weights.size(); ++k) {
      u -= weights[k];
      if (u < 0.0) return k;
    }
    return weights.size() - 1;
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
  std::uint64_t s_[4];
};

}  // namespace pdmp
