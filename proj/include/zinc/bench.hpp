// Copyright 2026 The Zinc HE Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "zinc/params.hpp"
#include "zinc/ring.hpp"

namespace zinc::bench {

/// A timed ciphertext failed validation; the run is void.
class BenchFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A dataset cell could not be read as a number.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, size_t row)
      : std::runtime_error(what), row_(row) {}
  size_t row() const { return row_; }

 private:
  size_t row_;
};

enum class ReportFormat { kJson, kCsv, kMarkdown };

ReportFormat parse_format(std::string_view name);
/// From the file extension: .json, .csv, .md / .markdown.
ReportFormat format_for_path(std::string_view path);

// Messages ---------------------------------------------------------------------

/// A column of messages. Integral columns keep exact int64 values.
struct MessageSet {
  bool integral = true;
  std::vector<int64_t> ints;
  std::vector<double> reals;

  size_t size() const { return integral ? ints.size() : reals.size(); }
  static MessageSet from_ints(std::vector<int64_t> values);
  static MessageSet from_reals(std::vector<double> values);
};

struct SynthSpec {
  enum class Kind { kUniformInt, kLognormalReal };
  Kind kind = Kind::kUniformInt;
  int64_t lo = 0;
  int64_t hi = 511;
  double mu = 0.0;
  double sigma = 1.0;
  size_t count = 1024;
  uint64_t seed = 7;
};

/// "uniform-int:LO:HI" or "lognormal-real:MU:SIGMA" ("lognormal" also accepted).
SynthSpec parse_synth_spec(std::string_view dist, size_t count, uint64_t seed);

/// Deterministic for a given spec.
MessageSet synth_generate(const SynthSpec& spec);

/// Reads one numeric column of a CSV file. `column` is a header name or a
/// zero-based index; with an index, a non-numeric first row is taken as the
/// header. Throws ParseError naming the (one-based) row of a bad cell.
MessageSet load_csv_column(const std::string& path, const std::string& column);
MessageSet parse_csv_column(std::istream& in, const std::string& column);

// Configuration and reports -----------------------------------------------------

struct BenchConfig {
  std::string preset = "desk";
  ParamSpec params = zinc::preset("desk");
  std::vector<size_t> pivots = {4, 8, 16, 32, 64};
  size_t messages = 1024;
  size_t repetitions = 5;
  size_t warmup = 1;
  uint64_t radix = 2;
  uint64_t seed = 1;

  /// Throws std::invalid_argument on repetitions == 0, messages == 0, etc.
  void validate() const;
};

struct MethodTiming {
  std::string method;  // "vanilla", "zinc" or "rache"
  size_t pivots = 0;   // rache only
  std::vector<double> run_ms;
  double mean_ms = 0.0;
  double stddev_ms = 0.0;
  double ratio = 0.0;  // mean_ms / vanilla mean_ms
  uint64_t messages = 0;
  uint64_t skipped = 0;
  OpCounts setup_ops;    // cache construction
  OpCounts encrypt_ops;  // one timed run over the message set

  double mul_per_message() const;
  double ntt_per_message() const;
  friend bool operator==(const MethodTiming&, const MethodTiming&) = default;
};

struct TimingReport {
  std::string kind;  // "micro" or "dataset"
  std::string preset;
  std::string source;
  ParamSpec params;
  uint64_t radix = 2;
  size_t messages = 0;
  size_t repetitions = 0;
  uint64_t seed = 0;
  std::vector<size_t> pivot_sweep;
  std::vector<MethodTiming> methods;

  /// nullptr when absent; pivots is ignored for vanilla and zinc.
  const MethodTiming* find(std::string_view method, size_t pivots = 0) const;
  friend bool operator==(const TimingReport&, const TimingReport&) = default;
};

/// Times vanilla, zinc and rache@n for every n in the sweep over one set of
/// random integers that fits the smallest cache. Every ciphertext is
/// decrypted and checked; a mismatch throws BenchFailure.
TimingReport run_micro(const BenchConfig& config);

/// Total encryption time per method over a whole column. Integral data goes
/// to all three methods; real data to vanilla and zinc only. Values outside
/// the rache cache range are skipped and counted.
TimingReport run_dataset(const BenchConfig& config, const MessageSet& data,
                         std::string source);

void emit_report(const TimingReport& report, ReportFormat format,
                 std::ostream& out);
/// Throws std::runtime_error if the path cannot be written.
void write_report(const TimingReport& report, ReportFormat format,
                  const std::string& path);

std::string report_to_json(const TimingReport& report);
TimingReport report_from_json(std::string_view text);

}  // namespace zinc::bench
