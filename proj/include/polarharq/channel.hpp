#pragma once

#include <vector>

#include "polarharq/polar_core.hpp"
#include "polarharq/rng.hpp"

namespace polarharq {

enum class ChannelKind { Awgn, RayleighFast };

/// SNR axis conventions for external interfaces.
///   OneOverSigma2: SNR(dB) = 10*log10(1 / sigma^2)
///   EsOverN0:      SNR(dB) = 10*log10(1 / (2*sigma^2))
enum class SnrConvention { OneOverSigma2, EsOverN0 };

struct ChannelSpec {
  ChannelKind kind = ChannelKind::Awgn;
  double sigma2 = 1.0;     // Gaussian noise variance per dimension
  double sigma2_eq = 1.0;  // equivalent AWGN variance; equals sigma2 for AWGN

  static ChannelSpec awgn(double sigma2);
  /// Solves the equivalent AWGN variance from the ergodic capacity.
  static ChannelSpec rayleigh_fast(double sigma2);

  void validate() const;
};

struct ReceivedBlock {
  std::vector<double> y;  // channel outputs
  std::vector<double> a;  // fading gains, all 1 for AWGN
  int t = 1;              // transmission index
};

/// BPSK map s = 1 - 2x, y = a*s + z with z ~ N(0, sigma^2). For the
/// Rayleigh channel the gains are i.i.d. per symbol and per transmission
/// with density p(a) = 2a*exp(-a^2), E[a^2] = 1.
ReceivedBlock transmit(const BitVector& x, const ChannelSpec& ch, RandomStream& rng,
                       int t = 1);

/// Receiver-side LLRs with known gains: r_i = 2 a_i y_i / sigma^2.
std::vector<double> llr_of(const ReceivedBlock& rx, const ChannelSpec& ch);

/// Symmetric capacity of the binary-input AWGN channel, in bits.
double awgn_capacity(double sigma2);

/// Ergodic capacity of the uncorrelated Rayleigh fast fading channel.
double rayleigh_capacity(double sigma2);

/// sigma2_eq with I_G(sigma2_eq) = I_R(sigma2), residual below 1e-6.
double equivalent_awgn_sigma2(double sigma2);

double sigma2_from_snr_db(double snr_db, SnrConvention convention);
double snr_db_from_sigma2(double sigma2, SnrConvention convention);

}  // namespace polarharq
