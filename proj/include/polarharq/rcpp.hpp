#pragma once

#include <cstdint>
#include <vector>

#include "polarharq/polar_core.hpp"

namespace polarharq {

/// Puncturing pattern over the m codeword positions: 1 = reserved,
/// 0 = punctured. Exactly m - n zeros.
struct PuncturePattern {
  std::vector<std::uint8_t> mask;
  std::int32_t m = 0;
  std::int32_t n = 0;

  void validate() const;
};

std::int32_t next_power_of_two(std::int32_t n);

/// Quasi-uniform puncturing: all-ones, zero the first m - n entries,
/// bit-reversal permute. Uniquely determined by (m, n).
PuncturePattern qup_pattern(std::int32_t m, std::int32_t n);

/// Keep the reserved positions of v, order preserved.
BitVector puncture(const BitVector& v, const PuncturePattern& pat);

/// Spread r over the reserved positions; punctured positions get LLR 0.
std::vector<double> depuncture(const std::vector<double>& r, const PuncturePattern& pat);

/// A concrete rate-compatible punctured polar code.
struct CodeSpec {
  std::int32_t k = 0;
  std::int32_t n = 0;
  std::int32_t m = 0;
  InfoSet info_set;
  PuncturePattern pattern;

  void validate() const;
};

}  // namespace polarharq
