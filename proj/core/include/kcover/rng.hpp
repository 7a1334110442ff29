#pragma once

#include <cstdint>

namespace kcover {

// Stream tags used to derive independent substreams from one run seed.
// Draws taken from one stream never perturb another.
inline constexpr std::uint64_t kStreamTopology = 0x746f706f6c6f6779ULL;
inline constexpr std::uint64_t kStreamLoss = 0x6c6f737300000001ULL;
inline constexpr std::uint64_t kStreamSleep = 0x736c656570000001ULL;

/// Counter-based generator (splitmix64) keyed by a seed plus up to three
/// stream identifiers. Identical keys yield identical draw sequences on
/// every platform, which is what makes traces byte-reproducible.
class SubstreamRng {
 public:
  explicit SubstreamRng(std::uint64_t seed, std::uint64_t s0 = 0,
                        std::uint64_t s1 = 0, std::uint64_t s2 = 0)
      : state_(mix(seed)) {
    absorb(s0);
    absorb(s1);
    absorb(s2);
  }

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix(state_);
  }

  /// Uniform draw in [0, 1).
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform integer in [0, bound). bound must be positive.
  std::uint64_t next_below(std::uint64_t bound) {
    return next_u64() % bound;
  }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  void absorb(std::uint64_t v) { state_ = mix(state_ ^ mix(v)); }

  std::uint64_t state_;
};

}  // namespace kcover
