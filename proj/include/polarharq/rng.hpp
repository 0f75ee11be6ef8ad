#pragma once

#include <cstdint>
#include <random>

namespace polarharq {

/// SplitMix64: a splittable counter-based 64-bit generator. Streams are
/// derived by hashing the master seed together with experiment coordinates,
/// so results never depend on worker count or scheduling.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~static_cast<result_type>(0); }

  result_type operator()() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Stream seed for coordinates (a, b), e.g. (snr index, trial index).
inline std::uint64_t derive_stream_seed(std::uint64_t master, std::uint64_t a,
                                        std::uint64_t b) {
  std::uint64_t s = mix64(master ^ 0x243f6a8885a308d3ULL);
  s = mix64(s + 0x9e3779b97f4a7c15ULL * (a + 1));
  s = mix64(s + 0x9e3779b97f4a7c15ULL * (b + 1));
  return s;
}

class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : eng_(seed) {}

  double gaussian() { return normal_(eng_); }

  /// Uniform on the open interval (0, 1).
  double uniform_open01() {
    return (static_cast<double>(eng_() >> 11) + 0.5) * 0x1.0p-53;
  }

  std::uint8_t bit() { return static_cast<std::uint8_t>(eng_() >> 63); }

  SplitMix64& engine() { return eng_; }

 private:
  SplitMix64 eng_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace polarharq
