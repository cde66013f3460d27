#pragma once

#include <cstdint>

namespace secnoma {

/// Counter-based uniform generator: the n-th draw of a stream is a pure
/// function of (key, n), so any partition of the counter range across
/// workers reproduces the serial sequence exactly.
///
/// Each draw hashes key and counter through two rounds of the SplitMix64
/// finalizer. Output is in the open interval (0, 1) with 53 bits of
/// resolution.
class CounterRng {
 public:
  explicit constexpr CounterRng(std::uint64_t key) noexcept : key_(mix(key ^ kKeySalt)) {}

  constexpr std::uint64_t bits(std::uint64_t counter) const noexcept {
    return mix(mix(counter * kGolden + key_) ^ key_);
  }

  constexpr double uniform(std::uint64_t counter) const noexcept {
    // (k + 0.5) / 2^53 never hits 0 or 1
    return (static_cast<double>(bits(counter) >> 11) + 0.5) * 0x1.0p-53;
  }

  constexpr std::uint64_t key() const noexcept { return key_; }

  static constexpr std::uint64_t mix(std::uint64_t z) noexcept {
    z += kGolden;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  static constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;
  static constexpr std::uint64_t kKeySalt = 0x5ec7e7a11ce5eedULL;
  std::uint64_t key_;
};

/// Derives an independent stream key, e.g. one per sweep point.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) noexcept {
  return CounterRng::mix(seed ^ CounterRng::mix(stream + 0x632be59bd9b4e019ULL));
}

}  // namespace secnoma
