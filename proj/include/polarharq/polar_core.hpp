#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace polarharq {

using BitVector = std::vector<std::uint8_t>;

/// Indices of the synthesized channels carrying information bits.
/// Indices are 0-based internally (documentation follows the usual 1-based
/// channel numbering).
struct InfoSet {
  std::vector<std::int32_t> indices;  // sorted, unique, in [0, m)
  std::int32_t m = 0;                 // base code length, a power of two

  std::int32_t k() const { return static_cast<std::int32_t>(indices.size()); }
  void validate() const;
};

inline bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

/// Reverse the low `bits` bits of `index`.
inline std::size_t bit_reversed(std::size_t index, int bits) {
  std::size_t r = 0;
  for (int j = 0; j < bits; ++j) {
    r = (r << 1) | (index & 1);
    index >>= 1;
  }
  return r;
}

inline int log2_exact(std::size_t n) {
  int b = 0;
  while ((std::size_t{1} << b) < n) ++b;
  return b;
}

/// out[i] = in[rev(i)]; an involution on any power-of-two length vector.
template <typename T>
std::vector<T> bit_reversal_permutation(const std::vector<T>& v) {
  if (!is_power_of_two(v.size()))
    throw std::invalid_argument("bit_reversal_permutation: length must be a power of 2");
  const int bits = log2_exact(v.size());
  std::vector<T> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[bit_reversed(i, bits)];
  return out;
}

/// v = u * B * F^{(x)n} over GF(2), the bit-reversed generator form.
/// Self-inverse: polar_encode(polar_encode(u)) == u.
BitVector polar_encode(const BitVector& u);

/// Interleave information and frozen bits into a full source block.
BitVector assemble_source_block(const InfoSet& info, const BitVector& info_bits,
                                const BitVector& frozen_values);

enum class FUpdateRule { Exact, MinSum };

struct ScResult {
  BitVector info_bits;  // hard decisions on information positions, index order
  BitVector codeword;   // re-encoded codeword estimate
};

/// Successive cancellation decoding over per-position LLRs (length m).
/// Punctured positions carry LLR 0. Frozen values default to all-zero.
ScResult sc_decode(const std::vector<double>& llr, const InfoSet& info,
                   const BitVector& frozen_values,
                   FUpdateRule rule = FUpdateRule::Exact);
ScResult sc_decode(const std::vector<double>& llr, const InfoSet& info,
                   FUpdateRule rule = FUpdateRule::Exact);

}  // namespace polarharq
