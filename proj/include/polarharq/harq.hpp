#pragma once

#include <cstdint>
#include <vector>

#include "polarharq/construction.hpp"

namespace polarharq {

/// Receiver-side buffer of combined LLRs over the m codeword positions.
struct LlrBuffer {
  std::vector<double> values;
  int round_count = 0;
};

/// Termwise sum; increments the round counter.
LlrBuffer chase_combine(const LlrBuffer& buffer, const std::vector<double>& new_llrs);

struct SessionResult {
  bool success = false;
  int rounds_used = 0;
  bool first_round_error = false;
};

/// One HARQ session: transmit the identical codeword until the decoded
/// block matches (genie-aided detection) or t_max rounds elapse.
SessionResult run_session(const CodeSpec& code, const ChannelSpec& ch, int t_max,
                          RandomStream& rng, FUpdateRule rule = FUpdateRule::Exact);

/// eta = K (1 - Pr(E_T)) / (N (1 + sum_{t=1}^{T-1} Pr(E_t))).
double throughput_bound(std::int32_t k, std::int32_t n,
                        const std::vector<double>& per_round_pe);

/// Pr(E_t) = union BLER bound at variance sigma2_eq / t, t = 1..t_max.
std::vector<double> per_round_error_probs(const CodeSpec& code, const ChannelSpec& ch,
                                          int t_max);

struct HarqDesign {
  CodeSpec code;
  int t_max = 0;
  std::int64_t q = 0;                // permitted transmitted bits
  std::vector<double> per_round_pe;  // Pr(E_1) .. Pr(E_T)
  double eta_bound = 0.0;
  std::int64_t ga_evals = 0;         // density-evolution evaluations spent
};

struct DesignOptions {
  int threads = 0;               // 0 = hardware concurrency
  bool early_termination = true; // dominance cut K/n < eta_opt
};

/// Scan candidate code lengths n in [K, floor(Q/T)], construct each
/// candidate at the first-transmission channel and keep the
/// highest-throughput configuration (ties toward smaller n).
HarqDesign design_search(std::int32_t k, std::int64_t q, int t_max,
                         const ChannelSpec& ch, const DesignOptions& opt = {});

}  // namespace polarharq
