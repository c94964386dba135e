// Batch front end: degrade / inpaint / evaluate / run-experiment / version.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "specfill/degradation.hpp"
#include "specfill/experiment.hpp"
#include "specfill/metrics.hpp"
#include "specfill/stft.hpp"
#include "specfill/td_baseline.hpp"
#include "specfill/tf_solver.hpp"
#include "specfill/wav_io.hpp"

namespace fs = std::filesystem;
using namespace specfill;

namespace {

constexpr const char* kVersion = "0.1.0";

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::invalid_parameter:
    case ErrorCode::unsupported_format:
      return 2;
    default:
      return 1;
  }
}

void print_warnings(const std::vector<std::string>& warnings) {
  for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
}

struct DegradeArgs {
  std::string input;
  std::string output_dir;
  int gap_len = 3;
  int n_gaps = 5;
  std::uint64_t seed = 1;
  int margin = -1;
  int separation = -1;
  StftParams stft;
};

int run_degrade(const DegradeArgs& args) {
  std::vector<std::string> warnings;
  const TimeSignal x = load_wav(args.input, &warnings);
  print_warnings(warnings);

  StftOperator op(args.stft);
  const Spectrogram X = op.analyze(x);
  const int margin = args.margin >= 0 ? args.margin : args.stft.win_len / args.stft.hop;
  const int separation =
      args.separation >= 0 ? args.separation : 2 * args.stft.win_len / args.stft.hop;
  const DegradationPlan plan =
      plan_gaps(X.n_frames, args.gap_len, args.n_gaps, args.seed, margin, separation);
  auto [X_cor, mask] = degrade(X, plan);

  fs::create_directories(args.output_dir);
  const std::string stem = fs::path(args.input).stem().string();
  const std::string tag = stem + "__g" + std::to_string(args.gap_len);
  const fs::path mask_path = fs::path(args.output_dir) / (tag + ".mask");
  const fs::path wav_path = fs::path(args.output_dir) / (tag + "_corrupted.wav");
  save_mask_file(mask_path.string(), plan, args.stft);
  save_wav(wav_path.string(), truncated(op.synthesize(X_cor), x.size()));

  std::cout << "mask: " << mask_path.string() << "\n";
  std::cout << "corrupted: " << wav_path.string() << "\n";
  std::cout << "columns: " << X.n_frames << ", missing: " << mask.missing_columns.size() << "\n";
  return 0;
}

struct InpaintArgs {
  std::string input;
  std::string mask_path;
  std::string method = kMethodJanssenTfRaw;
  std::string output;
  std::string reference;
  int column_offset = 0;
  AdmmConfig admm;
  int baseline_order = 512;
  int baseline_iters = 10;
  std::size_t baseline_context = 0;
};

int run_inpaint(const InpaintArgs& args) {
  if (!is_known_method(args.method))
    fail(ErrorCode::invalid_parameter, "unknown method '" + args.method + "'");
  std::vector<std::string> warnings;
  const TimeSignal x = load_wav(args.input, &warnings);
  print_warnings(warnings);

  const MaskFile mf = load_mask_file(args.mask_path, args.column_offset);
  StftOperator op(mf.params);
  const Spectrogram X = op.analyze(x);
  if (mf.mask.total_columns != X.n_frames)
    fail(ErrorCode::inconsistent_mask, "mask was made for " +
                                           std::to_string(mf.mask.total_columns) +
                                           " columns, signal has " + std::to_string(X.n_frames));
  auto [X_cor, mask] = degrade(X, mf.plan);

  TimeSignal estimate;
  if (args.method == kMethodGapwiseJanssen) {
    TimeSignal x_time = op.synthesize(X_cor);
    const TimeMask affected = affected_samples(mask, mf.params, x_time.size());
    for (std::size_t i = 0; i < x_time.size(); ++i) {
      if (!affected.reliable[i]) x_time.samples[i] = 0.0;
    }
    const std::size_t context = args.baseline_context != 0
                                    ? args.baseline_context
                                    : std::max<std::size_t>(2 * args.baseline_order, 4096);
    estimate = gapwise_janssen(x_time, affected, args.baseline_order, args.baseline_iters, context);
  } else {
    const JanssenTfResult res = janssen_tf(X_cor, mask, args.admm);
    estimate = args.method == kMethodJanssenTfRaw
                   ? res.x
                   : op.synthesize(res.spectrogram_with_context);
  }
  estimate = truncated(estimate, x.size());
  const std::size_t clipped = save_wav(args.output, estimate);
  if (clipped > 0)
    std::cerr << "warning: " << clipped << " samples outside [-1, 1] in " << args.output << "\n";
  std::cout << "wrote " << args.output << "\n";

  if (!args.reference.empty()) {
    const TimeSignal ref = load_wav(args.reference);
    std::printf("snr_db = %.6f\n", snr(ref, estimate));
  }
  return 0;
}

struct EvaluateArgs {
  std::string reference;
  std::string estimate;
  std::string mask_path;
  std::string records;
  std::string output_dir;
  double alpha = 0.05;
  int n_resamples = 10000;
  std::uint64_t seed = 1;
  int column_offset = 0;
};

int run_evaluate(const EvaluateArgs& args) {
  if (!args.records.empty()) {
    if (args.output_dir.empty())
      fail(ErrorCode::invalid_parameter, "--output-dir is required with --records");
    const auto records = read_records_csv(args.records);
    if (records.empty()) fail(ErrorCode::insufficient_data, "no records in " + args.records);
    const auto rows = aggregate(records, args.alpha, args.n_resamples, args.seed);
    std::vector<std::string> methods;
    for (const auto& r : records) methods.push_back(r.method);
    write_aggregate_outputs(args.output_dir, rows, methods);
    std::cout << "wrote " << (fs::path(args.output_dir) / "aggregate.csv").string() << "\n";
    return 0;
  }
  if (args.reference.empty() || args.estimate.empty())
    fail(ErrorCode::invalid_parameter, "need --reference and --estimate, or --records");
  const TimeSignal ref = load_wav(args.reference);
  const TimeSignal est = load_wav(args.estimate);
  std::printf("snr_db = %.6f\n", snr(ref, est));
  if (!args.mask_path.empty()) {
    const MaskFile mf = load_mask_file(args.mask_path, args.column_offset);
    const TimeMask region = affected_samples(mf.mask, mf.params, ref.size());
    std::printf("gap_snr_db = %.6f\n", snr_masked(ref.samples, est.samples, region));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"specfill: autoregressive spectrogram inpainting toolkit"};
  app.require_subcommand(1);

  // degrade
  DegradeArgs dg;
  auto* degrade_cmd = app.add_subcommand("degrade", "zero out spectrogram columns of a WAV");
  degrade_cmd->add_option("--input", dg.input, "input WAV")->required();
  degrade_cmd->add_option("--output-dir", dg.output_dir, "output directory")->required();
  degrade_cmd->add_option("--gap-len", dg.gap_len, "missing columns per gap (1..6)");
  degrade_cmd->add_option("--n-gaps", dg.n_gaps, "number of gaps");
  degrade_cmd->add_option("--seed", dg.seed, "placement seed");
  degrade_cmd->add_option("--margin", dg.margin, "margin columns (default win_len/hop)");
  degrade_cmd->add_option("--separation", dg.separation,
                          "separation columns (default 2*win_len/hop)");
  degrade_cmd->add_option("--win-len", dg.stft.win_len, "STFT window length");
  degrade_cmd->add_option("--hop", dg.stft.hop, "STFT hop");
  degrade_cmd->add_option("--n-channels", dg.stft.n_channels, "DFT channels");

  // inpaint
  InpaintArgs ip;
  auto* inpaint_cmd = app.add_subcommand("inpaint", "reconstruct missing spectrogram columns");
  inpaint_cmd->add_option("--input", ip.input, "input WAV (observed signal)")->required();
  inpaint_cmd->add_option("--mask", ip.mask_path, "mask file")->required();
  inpaint_cmd->add_option("--output", ip.output, "output WAV")->required();
  inpaint_cmd->add_option("--method", ip.method,
                          "janssen_tf_raw | janssen_tf_context | gapwise_janssen");
  inpaint_cmd->add_option("--reference", ip.reference, "clean WAV; prints SNR when given");
  inpaint_cmd->add_option("--column-offset", ip.column_offset,
                          "shift applied to mask column indices");
  inpaint_cmd->add_option("--rho", ip.admm.rho, "ADMM step size");
  inpaint_cmd->add_option("--inner-iters", ip.admm.inner_iters, "ADMM inner iterations (K)");
  inpaint_cmd->add_option("--outer-iters", ip.admm.outer_iters, "outer iterations (I)");
  inpaint_cmd->add_option("--ar-order", ip.admm.ar_order, "AR model order (p)");
  inpaint_cmd->add_option("--baseline-order", ip.baseline_order, "baseline AR order");
  inpaint_cmd->add_option("--baseline-iters", ip.baseline_iters, "baseline iterations");
  inpaint_cmd->add_option("--baseline-context", ip.baseline_context,
                          "baseline context samples per side (0 = max(2*order, 4096))");

  // evaluate
  EvaluateArgs ev;
  auto* evaluate_cmd = app.add_subcommand("evaluate", "SNR of a pair, or aggregate a records CSV");
  evaluate_cmd->add_option("--reference", ev.reference, "clean WAV");
  evaluate_cmd->add_option("--estimate", ev.estimate, "reconstructed WAV");
  evaluate_cmd->add_option("--mask", ev.mask_path, "mask file; prints gap-only SNR too");
  evaluate_cmd->add_option("--records", ev.records, "records.csv to aggregate");
  evaluate_cmd->add_option("--output-dir", ev.output_dir, "where to write aggregate outputs");
  evaluate_cmd->add_option("--alpha", ev.alpha, "CI significance level");
  evaluate_cmd->add_option("--n-resamples", ev.n_resamples, "bootstrap resamples");
  evaluate_cmd->add_option("--seed", ev.seed, "bootstrap seed");
  evaluate_cmd->add_option("--column-offset", ev.column_offset,
                           "shift applied to mask column indices");

  // run-experiment
  std::string config_path;
  std::vector<std::string> overrides;
  std::string corpus_override;
  std::string output_override;
  int jobs_override = 0;
  auto* run_cmd = app.add_subcommand("run-experiment", "degradation/reconstruction sweep");
  run_cmd->add_option("--config", config_path, "key = value config file");
  run_cmd->add_option("--set", overrides, "override, e.g. --set ar_order=256")->take_all();
  run_cmd->add_option("--corpus-dir", corpus_override, "corpus directory (overrides config)");
  run_cmd->add_option("--output-dir", output_override, "output directory (overrides config)");
  run_cmd->add_option("--jobs", jobs_override, "parallel tasks (overrides config)");

  auto* version_cmd = app.add_subcommand("version", "print version");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (degrade_cmd->parsed()) return run_degrade(dg);
    if (inpaint_cmd->parsed()) return run_inpaint(ip);
    if (evaluate_cmd->parsed()) return run_evaluate(ev);
    if (version_cmd->parsed()) {
      std::cout << "specfill " << kVersion << "\n";
      return 0;
    }
    if (run_cmd->parsed()) {
      ExperimentConfig cfg;
      if (!config_path.empty()) cfg = load_config_file(config_path);
      for (const auto& kv : overrides) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos)
          fail(ErrorCode::invalid_parameter, "--set expects key=value, got '" + kv + "'");
        apply_config_override(cfg, kv.substr(0, eq), kv.substr(eq + 1));
      }
      if (!corpus_override.empty()) cfg.corpus_dir = corpus_override;
      if (!output_override.empty()) cfg.output_dir = output_override;
      if (jobs_override > 0) cfg.jobs = jobs_override;

      const ExperimentResult result = run_experiment(cfg);
      std::cout << "records: " << result.records.size() << ", failures: "
                << result.failures.size() << "\n";
      for (const auto& f : result.failures) std::cerr << "failed: " << f << "\n";
      std::cout << "outputs in " << resolved(cfg).output_dir << "\n";
      return result.failures.empty() ? 0 : 1;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
