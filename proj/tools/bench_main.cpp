// Copyright 2026 The Zinc HE Authors.
// SPDX-License-Identifier: Apache-2.0

// Encryption benchmark driver: vanilla vs Zinc vs Rache.
//
//   bench micro   --preset desk --pivots 4,8,16,32 --messages 1024 --reps 5 --out report.json
//   bench dataset --csv data.csv --column 3 --variant bfv --out report.md
//   bench synth   --dist uniform-int:0:511 --count 34424 --seed 7
//
// Exit status: 0 on success, 2 if any ciphertext failed to decrypt, 1 otherwise.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "zinc/bench.hpp"
#include "zinc/params.hpp"

namespace {

using namespace zinc;
using namespace zinc::bench;

struct CommonOptions {
  std::string preset = "desk";
  std::string params_file;
  std::string variant;
  std::vector<size_t> pivots;
  size_t reps = 5;
  size_t warmup = 1;
  uint64_t radix = 2;
  uint64_t seed = 1;
  std::string out;
  std::string format;
};

void add_common(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--preset", o.preset, "Parameter preset: desk, paper or toy")
      ->capture_default_str();
  cmd->add_option("--params", o.params_file,
                  "Key-value parameter file (n, q, t, delta_log2, sigma, kappa, variant)");
  cmd->add_option("--variant", o.variant, "Scheme variant: bfv, bgv or ckks");
  cmd->add_option("--pivots", o.pivots, "Rache pivot counts, comma separated")
      ->delimiter(',');
  cmd->add_option("--reps", o.reps, "Timed repetitions")->capture_default_str();
  cmd->add_option("--warmup", o.warmup, "Untimed warm-up runs")->capture_default_str();
  cmd->add_option("--radix", o.radix, "Rache radix")->capture_default_str();
  cmd->add_option("--seed", o.seed, "Seed for keys, messages and noise")
      ->capture_default_str();
  cmd->add_option("--out", o.out, "Report path (.json, .csv or .md)");
  cmd->add_option("--format", o.format, "Report format: json, csv or md");
}

BenchConfig make_config(const CommonOptions& o,
                        const std::vector<size_t>& default_pivots) {
  BenchConfig config;
  config.preset = o.preset;
  config.params = preset(o.preset);
  if (!o.params_file.empty()) {
    config.params = load_param_file(o.params_file, config.params);
  }
  if (!o.variant.empty()) config.params.variant = parse_variant(o.variant);
  config.pivots = o.pivots.empty() ? default_pivots : o.pivots;
  config.repetitions = o.reps;
  config.warmup = o.warmup;
  config.radix = o.radix;
  config.seed = o.seed;
  config.validate();
  return config;
}

void output(const TimingReport& report, const CommonOptions& o) {
  if (o.out.empty()) {
    emit_report(report, o.format.empty() ? ReportFormat::kMarkdown
                                         : parse_format(o.format),
                std::cout);
    return;
  }
  const ReportFormat format =
      o.format.empty() ? format_for_path(o.out) : parse_format(o.format);
  write_report(report, format, o.out);
  std::cerr << "wrote " << o.out << '\n';
}

void write_messages(const MessageSet& data, std::ostream& out) {
  out << "value\n";
  if (data.integral) {
    for (int64_t v : data.ints) out << v << '\n';
  } else {
    char buf[64];
    for (double v : data.reals) {
      std::snprintf(buf, sizeof buf, "%.17g", v);
      out << buf << '\n';
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Encryption benchmark: vanilla RLWE vs Zinc vs Rache"};
  app.set_config("--config", "", "INI/TOML file with option values (flags win)");
  app.require_subcommand(1);

  CommonOptions micro_opts;
  size_t micro_messages = 1024;
  auto* micro = app.add_subcommand("micro", "Micro-benchmark over random integers");
  add_common(micro, micro_opts);
  micro->add_option("--messages", micro_messages, "Messages per run")
      ->capture_default_str();

  CommonOptions data_opts;
  std::string csv_path;
  std::string column = "0";
  std::string synth_dist;
  size_t synth_count = 10000;
  uint64_t synth_seed = 7;
  auto* dataset = app.add_subcommand("dataset", "Total encryption time over a data column");
  add_common(dataset, data_opts);
  auto* csv_opt = dataset->add_option("--csv", csv_path, "CSV file");
  dataset->add_option("--column", column, "Column name or zero-based index")
      ->capture_default_str();
  auto* synth_opt = dataset->add_option("--synth", synth_dist,
                                        "Synthetic source instead of a CSV, e.g. "
                                        "uniform-int:0:511");
  dataset->add_option("--count", synth_count, "Synthetic row count")
      ->capture_default_str();
  dataset->add_option("--synth-seed", synth_seed, "Synthetic generator seed")
      ->capture_default_str();
  csv_opt->excludes(synth_opt);

  std::string dist = "uniform-int:0:511";
  size_t count = 34424;
  uint64_t seed = 7;
  std::string synth_out;
  auto* synth = app.add_subcommand("synth", "Generate a synthetic message column");
  synth->add_option("--dist", dist, "uniform-int:LO:HI or lognormal-real:MU:SIGMA")
      ->capture_default_str();
  synth->add_option("--count", count, "Number of values")->capture_default_str();
  synth->add_option("--seed", seed, "Generator seed")->capture_default_str();
  synth->add_option("--out", synth_out, "Write a one-column CSV instead of stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*micro) {
      BenchConfig config = make_config(micro_opts, {4, 8, 16, 32, 64});
      config.messages = micro_messages;
      config.validate();
      output(run_micro(config), micro_opts);
    } else if (*dataset) {
      BenchConfig config = make_config(data_opts, {32, 9});
      MessageSet data;
      std::string source;
      if (!csv_path.empty()) {
        data = load_csv_column(csv_path, column);
        source = csv_path + "[" + column + "]";
      } else if (!synth_dist.empty()) {
        data = synth_generate(parse_synth_spec(synth_dist, synth_count, synth_seed));
        source = "synthetic " + synth_dist;
      } else {
        throw CLI::RequiredError("--csv or --synth");
      }
      config.messages = data.size();
      output(run_dataset(config, data, source), data_opts);
    } else if (*synth) {
      const MessageSet data = synth_generate(parse_synth_spec(dist, count, seed));
      if (synth_out.empty()) {
        write_messages(data, std::cout);
      } else {
        std::ofstream out(synth_out);
        if (!out) throw std::runtime_error("cannot write " + synth_out);
        write_messages(data, out);
      }
    }
  } catch (const BenchFailure& e) {
    std::cerr << "decryption failure: " << e.what() << '\n';
    return 2;
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
