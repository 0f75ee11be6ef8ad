#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "polarharq/harq.hpp"

namespace polarharq {

enum class ExperimentKind { BlerCurve, HarqThroughput, DesignTable };
enum class OutputFormat { Csv, Json };

struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::BlerCurve;
  ChannelKind channel = ChannelKind::Awgn;
  std::vector<double> snr_grid_db;
  std::int32_t k = 1024;
  std::int64_t q = 16384;
  int t_max = 6;
  std::int32_t n_override = 0;  // 0: take N from the design search
  std::int64_t trials = 1000;
  std::uint64_t seed = 1;
  SnrConvention snr_convention = SnrConvention::EsOverN0;
  std::string output_path;  // empty: stdout
  OutputFormat format = OutputFormat::Csv;
  FUpdateRule decoder_rule = FUpdateRule::Exact;
  // Optional per-point early stopping: keep simulating past `trials` until
  // this many block-error events, capped at 100x trials. 0 = off.
  std::int64_t min_error_events = 0;
  int threads = 0;

  void validate() const;
};

struct SimRow {
  double snr_db = 0.0;
  std::int32_t n = 0;
  std::int32_t m = 0;
  std::int32_t k = 0;
  double bler_round1 = 0.0;
  double bler_bound = 0.0;
  double avg_transmissions = 0.0;
  double throughput_sim = 0.0;
  double throughput_bound = 0.0;
  std::int64_t trials = 0;
  std::uint64_t seed = 0;
  double ci95 = 0.0;  // 95% half-width of the primary measured quantity
};

struct SimReport {
  ExperimentConfig config;
  std::vector<SimRow> rows;
  std::vector<HarqDesign> designs;  // populated by design/harq runs
};

/// Order-insensitive per-trial counters; integer sums keep aggregation
/// exact under any worker count.
struct McCounters {
  std::int64_t trials = 0;
  std::int64_t first_round_errors = 0;
  std::int64_t successes = 0;
  std::int64_t rounds_sum = 0;
  std::int64_t rounds_sq_sum = 0;
  std::int64_t success_rounds_sum = 0;

  McCounters& operator+=(const McCounters& o);
};

/// Trials [trial_offset, trial_offset + trials); the stream of trial i is
/// derived from (master_seed, snr_index, i).
McCounters simulate_sessions(const CodeSpec& code, const ChannelSpec& ch, int t_max,
                             std::int64_t trials, std::uint64_t master_seed,
                             std::uint64_t snr_index, std::int64_t trial_offset,
                             int threads, FUpdateRule rule);

SimReport run_bler_experiment(const ExperimentConfig& cfg);
SimReport run_harq_experiment(const ExperimentConfig& cfg);
SimReport run_design_table(const ExperimentConfig& cfg);
SimReport run_experiment(const ExperimentConfig& cfg);

void write_report_csv(const SimReport& report, std::ostream& os);
void write_report_json(const SimReport& report, std::ostream& os);
/// Writes to config.output_path (or stdout) in config.format.
void write_report(const SimReport& report);

std::string to_string(ExperimentKind kind);
std::string to_string(ChannelKind kind);
std::string to_string(SnrConvention convention);
std::string to_string(OutputFormat format);
ExperimentKind experiment_kind_from_string(const std::string& s);
ChannelKind channel_kind_from_string(const std::string& s);
SnrConvention snr_convention_from_string(const std::string& s);
OutputFormat output_format_from_string(const std::string& s);
FUpdateRule f_update_rule_from_string(const std::string& s);

/// Parse "a,b,c" or "start:step:stop" into a grid.
std::vector<double> parse_snr_grid(const std::string& text);

/// Load an ExperimentConfig from a JSON file.
ExperimentConfig load_config_json(const std::string& path);

}  // namespace polarharq
