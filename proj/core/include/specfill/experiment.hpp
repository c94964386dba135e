#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "specfill/degradation.hpp"
#include "specfill/metrics.hpp"
#include "specfill/stft.hpp"
#include "specfill/tf_solver.hpp"

namespace specfill {

inline constexpr const char* kMethodJanssenTfRaw = "janssen_tf_raw";
inline constexpr const char* kMethodJanssenTfContext = "janssen_tf_context";
inline constexpr const char* kMethodGapwiseJanssen = "gapwise_janssen";

bool is_known_method(const std::string& name);

struct ExperimentConfig {
  std::string corpus_dir;
  std::string output_dir;
  std::vector<std::string> methods = {kMethodJanssenTfRaw, kMethodJanssenTfContext,
                                      kMethodGapwiseJanssen};
  std::vector<int> gap_lengths = {1, 2, 3, 4, 5, 6};
  int n_gaps = 5;
  std::uint64_t seed = 1;
  StftParams stft;
  AdmmConfig admm;
  int baseline_order = 512;
  int baseline_iters = 10;
  std::size_t baseline_context = 0;  // 0 -> max(2 * baseline_order, 4096)
  int margin_columns = -1;           // -1 -> win_len / hop
  int separation_columns = -1;       // -1 -> 2 * win_len / hop
  double alpha = 0.05;
  int n_resamples = 10000;
  int jobs = 1;
  int column_offset = 0;  // shift applied to external mask column indices
};

// Parses the line-based `key = value` config format ('#' starts a comment).
ExperimentConfig load_config_file(const std::string& path);
// Applies one `key=value` override; errors on unknown keys or bad values.
void apply_config_override(ExperimentConfig& cfg, const std::string& key,
                           const std::string& value);
// Fills derived defaults (context, margins) and checks invariants.
ExperimentConfig resolved(const ExperimentConfig& cfg);

// Mask file: line-based `key = value` text holding the gap plan plus the STFT
// geometry it refers to.
void save_mask_file(const std::string& path, const DegradationPlan& plan,
                    const StftParams& params);

struct MaskFile {
  DegradationPlan plan;
  StftParams params;
  TFMask mask;
};

MaskFile load_mask_file(const std::string& path, int column_offset = 0);

// records.csv round trip (header: signal_id,method,gap_len,snr_db,runtime_s).
void write_records_csv(const std::string& path, const std::vector<MetricsRecord>& records);
std::vector<MetricsRecord> read_records_csv(const std::string& path);

// Writes aggregate.csv and one plot_<method>.dat per method into output_dir.
void write_aggregate_outputs(const std::string& output_dir,
                             const std::vector<AggregateRow>& rows,
                             const std::vector<std::string>& methods);

struct ExperimentResult {
  std::vector<MetricsRecord> records;
  std::vector<AggregateRow> aggregate_rows;
  std::vector<std::string> failures;  // per-task error messages, tasks skipped
};

// Full degradation/reconstruction/evaluation sweep over all WAVs in
// corpus_dir. Writes records.csv, gap_snr.csv, aggregate.csv, summary.txt,
// plot_<method>.dat, masks/ and recon/ under output_dir. Deterministic in the
// config and master seed (runtime_s columns excepted); independent of jobs.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

}  // namespace specfill
