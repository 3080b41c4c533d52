// Copyright 2026 The Zinc HE Authors.
// SPDX-License-Identifier: Apache-2.0

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "zinc/bench.hpp"

namespace zinc::bench {

namespace {

using nlohmann::json;

json ops_to_json(const OpCounts& ops) {
  return {{"ntt_forward", ops.ntt_forward},
          {"ntt_inverse", ops.ntt_inverse},
          {"poly_mul", ops.poly_mul}};
}

OpCounts ops_from_json(const json& j) {
  return {j.at("ntt_forward").get<uint64_t>(), j.at("ntt_inverse").get<uint64_t>(),
          j.at("poly_mul").get<uint64_t>()};
}

json params_to_json(const ParamSpec& p) {
  return {{"n", p.n},
          {"q", p.q},
          {"t", p.t},
          {"delta_log2", p.delta_log2},
          {"sigma", p.sigma},
          {"kappa", p.kappa},
          {"variant", to_string(p.variant)}};
}

ParamSpec params_from_json(const json& j) {
  ParamSpec p;
  p.n = j.at("n").get<size_t>();
  p.q = j.at("q").get<uint64_t>();
  p.t = j.at("t").get<uint64_t>();
  p.delta_log2 = j.at("delta_log2").get<int>();
  p.sigma = j.at("sigma").get<double>();
  p.kappa = j.at("kappa").get<int>();
  p.variant = parse_variant(j.at("variant").get<std::string>());
  return p;
}

std::string label(const MethodTiming& m) {
  return m.method == "rache" ? "rache (n=" + std::to_string(m.pivots) + ")"
                             : m.method;
}

// Rows in sweep order: for each pivot count, vanilla / rache@n / zinc.
// Without a sweep (real-valued data) only vanilla and zinc appear.
std::vector<std::pair<size_t, const MethodTiming*>> long_rows(
    const TimingReport& r) {
  std::vector<std::pair<size_t, const MethodTiming*>> rows;
  const MethodTiming* vanilla = r.find("vanilla");
  const MethodTiming* zinc = r.find("zinc");
  if (r.pivot_sweep.empty()) {
    if (vanilla) rows.emplace_back(0, vanilla);
    if (zinc) rows.emplace_back(0, zinc);
    return rows;
  }
  for (size_t n : r.pivot_sweep) {
    if (vanilla) rows.emplace_back(n, vanilla);
    if (const MethodTiming* rache = r.find("rache", n)) rows.emplace_back(n, rache);
    if (zinc) rows.emplace_back(n, zinc);
  }
  return rows;
}

void emit_csv(const TimingReport& r, std::ostream& out) {
  out << "pivots,method,mean_ms,stddev_ms,ratio,messages,skipped,"
         "mul_per_message,ntt_per_message\n";
  out << std::setprecision(10);
  for (const auto& [n, m] : long_rows(r)) {
    out << n << ',' << m->method << ',' << m->mean_ms << ',' << m->stddev_ms << ','
        << m->ratio << ',' << m->messages << ',' << m->skipped << ','
        << m->mul_per_message() << ',' << m->ntt_per_message() << '\n';
  }
}

void emit_markdown(const TimingReport& r, std::ostream& out) {
  const auto& p = r.params;
  out << "# Encryption timing (" << r.kind << ")\n\n";
  out << "variant " << to_string(p.variant) << ", N = " << p.n << ", q = " << p.q;
  if (p.variant == Variant::kCkks) {
    out << ", delta = 2^" << p.delta_log2;
  } else {
    out << ", t = " << p.t;
  }
  out << ", sigma = " << p.sigma << "; " << r.messages << " messages from "
      << r.source << ", mean of " << r.repetitions << " runs\n\n";
  out << "| method | mean ms | stddev ms | ratio | mul/msg | ntt/msg | skipped |\n";
  out << "|:-------|--------:|----------:|------:|--------:|--------:|--------:|\n";
  out << std::fixed;
  for (const auto& m : r.methods) {
    out << "| " << label(m) << " | " << std::setprecision(3) << m.mean_ms << " | "
        << m.stddev_ms << " | " << std::setprecision(2) << m.ratio << " | "
        << m.mul_per_message() << " | " << m.ntt_per_message() << " | "
        << m.skipped << " |\n";
  }
  out.unsetf(std::ios::floatfield);
}

}  // namespace

std::string report_to_json(const TimingReport& r) {
  json methods = json::array();
  for (const auto& m : r.methods) {
    methods.push_back({{"method", m.method},
                       {"pivots", m.pivots},
                       {"run_ms", m.run_ms},
                       {"mean_ms", m.mean_ms},
                       {"stddev_ms", m.stddev_ms},
                       {"ratio", m.ratio},
                       {"messages", m.messages},
                       {"skipped", m.skipped},
                       {"setup_ops", ops_to_json(m.setup_ops)},
                       {"encrypt_ops", ops_to_json(m.encrypt_ops)}});
  }
  json j = {{"kind", r.kind},
            {"preset", r.preset},
            {"source", r.source},
            {"params", params_to_json(r.params)},
            {"radix", r.radix},
            {"messages", r.messages},
            {"repetitions", r.repetitions},
            {"seed", r.seed},
            {"pivot_sweep", r.pivot_sweep},
            {"methods", methods}};
  return j.dump(2);
}

TimingReport report_from_json(std::string_view text) {
  const json j = json::parse(text);
  TimingReport r;
  r.kind = j.at("kind").get<std::string>();
  r.preset = j.at("preset").get<std::string>();
  r.source = j.at("source").get<std::string>();
  r.params = params_from_json(j.at("params"));
  r.radix = j.at("radix").get<uint64_t>();
  r.messages = j.at("messages").get<size_t>();
  r.repetitions = j.at("repetitions").get<size_t>();
  r.seed = j.at("seed").get<uint64_t>();
  r.pivot_sweep = j.at("pivot_sweep").get<std::vector<size_t>>();
  for (const auto& jm : j.at("methods")) {
    MethodTiming m;
    m.method = jm.at("method").get<std::string>();
    m.pivots = jm.at("pivots").get<size_t>();
    m.run_ms = jm.at("run_ms").get<std::vector<double>>();
    m.mean_ms = jm.at("mean_ms").get<double>();
    m.stddev_ms = jm.at("stddev_ms").get<double>();
    m.ratio = jm.at("ratio").get<double>();
    m.messages = jm.at("messages").get<uint64_t>();
    m.skipped = jm.at("skipped").get<uint64_t>();
    m.setup_ops = ops_from_json(jm.at("setup_ops"));
    m.encrypt_ops = ops_from_json(jm.at("encrypt_ops"));
    r.methods.push_back(std::move(m));
  }
  return r;
}

void emit_report(const TimingReport& report, ReportFormat format,
                 std::ostream& out) {
  switch (format) {
    case ReportFormat::kJson:
      out << report_to_json(report) << '\n';
      break;
    case ReportFormat::kCsv:
      emit_csv(report, out);
      break;
    case ReportFormat::kMarkdown:
      emit_markdown(report, out);
      break;
  }
}

void write_report(const TimingReport& report, ReportFormat format,
                  const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write report to " + path);
  emit_report(report, format, out);
  out.flush();
  if (!out) throw std::runtime_error("error while writing report to " + path);
}

}  // namespace zinc::bench
