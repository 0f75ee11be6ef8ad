#pragma once

#include <cstdint>
#include <vector>

#include "polarharq/channel.hpp"
#include "polarharq/rcpp.hpp"

namespace polarharq {

/// Gaussian-approximation reliabilities of the m synthesized channels,
/// indexed in decoder channel order.
struct ReliabilityProfile {
  std::vector<double> means;  // LLR means, nonnegative
  std::vector<double> pe;     // per-channel error probabilities in [0, 0.5]
};

/// Two-piece phi approximation used by the density-evolution recursion.
/// Strictly decreasing on [0, inf); the pieces are joined at their
/// crossing point so the bisection inverse is well defined.
double ga_phi(double x);
double ga_phi_inv(double t);

/// Check-branch mean update: phi^{-1}(1 - (1 - phi(a))(1 - phi(b))).
/// A zero mean (zero-capacity virtual channel) is absorbing.
double ga_check_combine(double a, double b);

/// Density-evolution recursion over per-position input means (codeword
/// order, length a power of two). Output means follow the decoder's
/// channel order; the variable branch is exact addition.
std::vector<double> ga_polarize(const std::vector<double>& input_means);

/// P_e = Q(sqrt(m/2)) for an LLR ~ N(m, 2m).
double error_prob_from_mean(double m);

/// Profile for a punctured code over AWGN with variance sigma2: input mean
/// 2/sigma2 at reserved positions, 0 at punctured ones. Quasi-uniform
/// patterns take a fast path that tracks the two-valued step structure of
/// the recursion.
ReliabilityProfile reliability_profile(const PuncturePattern& pattern, double sigma2);

ReliabilityProfile profile_from_means(std::vector<double> means);

/// The k most reliable channels; ties broken toward the smaller index.
InfoSet select_info_set(const ReliabilityProfile& profile, std::int32_t k);

/// Assemble a code: m = 2^ceil(log2 n), quasi-uniform pattern, information
/// set selected at the design noise variance.
CodeSpec build_rcpp_code(std::int32_t k, std::int32_t n, double design_sigma2);

/// Union bound on the block error rate under SC decoding, clamped to 1.
double bler_bound_at_variance(const CodeSpec& code, double sigma2);
double bler_bound(const CodeSpec& code, const ChannelSpec& ch);

}  // namespace polarharq
