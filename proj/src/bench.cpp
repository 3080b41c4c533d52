// Copyright 2026 The Zinc HE Authors.
// SPDX-License-Identifier: Apache-2.0

#include "zinc/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <deque>
#include <functional>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>

#include "zinc/rache.hpp"
#include "zinc/scheme.hpp"
#include "zinc/zinc.hpp"

namespace zinc::bench {

namespace {

using Clock = std::chrono::steady_clock;

// Seeds for the independent streams of one run.
constexpr uint64_t kKeySalt = 0x6b657973;
constexpr uint64_t kMessageSalt = 0x6d736773;
constexpr uint64_t kEncryptSalt = 0x656e6372;

struct Session {
  SchemeParams params;
  SecretKey sk;
  PublicKey pk;
};

Session make_session(const BenchConfig& config) {
  SchemeParams params = config.params.build();
  Rng key_rng(config.seed ^ kKeySalt);
  auto [sk, pk] = keygen(params, key_rng);
  return {std::move(params), std::move(sk), std::move(pk)};
}

// Worst-case residual of a Zinc ciphertext: fresh encryption plus e1' + e2'*s.
double ckks_tolerance(const SchemeParams& params) {
  const double tail = static_cast<double>(params.gaussian().tail_bound());
  const double n = static_cast<double>(params.degree());
  const double bound = tail * (2 * n + 1) + 2 * tail * (1 + n);
  return (0.5 + bound) / static_cast<double>(params.delta());
}

std::string describe(const SchemeParams& params, std::string_view method,
                     size_t pivots) {
  std::ostringstream os;
  os << method;
  if (pivots != 0) os << "@" << pivots;
  os << " (variant=" << to_string(params.variant()) << ", N=" << params.degree()
     << ", q=" << params.q() << ", t=" << params.t() << ")";
  return os.str();
}

// Decrypts and compares against the expected message.
void validate(const Session& s, const Ciphertext& ct, const MessageSet& data,
              size_t row, std::string_view method, size_t pivots) {
  try {
    const Plaintext pt = decrypt(ct, s.sk, s.params);
    bool ok;
    if (data.integral && s.params.variant() != Variant::kCkks) {
      ok = decode_integer(pt) == data.ints[row];
    } else if (data.integral) {
      ok = std::llround(decode_real(pt)) == data.ints[row];
    } else {
      ok = std::fabs(decode_real(pt) - data.reals[row]) <=
           ckks_tolerance(s.params);
    }
    if (!ok) {
      throw BenchFailure("decryption mismatch at row " + std::to_string(row) +
                         " for " + describe(s.params, method, pivots));
    }
  } catch (const DecryptionError& e) {
    throw BenchFailure(std::string(e.what()) + " at row " + std::to_string(row) +
                       " for " + describe(s.params, method, pivots));
  }
}

Plaintext encode_row(const MessageSet& data, size_t row,
                     const SchemeParams& params) {
  if (data.integral) return encode_integer(data.ints[row], params);
  return encode_real(data.reals[row], params);
}

// pt is the row's encoding for plaintext-based methods, nullptr for rache.
using EncryptRow =
    std::function<Ciphertext(size_t row, const Plaintext* pt, Rng& rng)>;

// One method under test: its rows, its encryption call and its own stream.
struct Runner {
  MethodTiming timing;
  std::vector<size_t> rows;
  bool encode_first = true;
  EncryptRow encrypt_row;
  Rng rng{0};
};

Runner make_runner(const BenchConfig& config, std::string method, size_t pivots,
                   std::vector<size_t> rows, bool encode_first, EncryptRow fn) {
  Runner r;
  r.timing.method = std::move(method);
  r.timing.pivots = pivots;
  r.timing.messages = rows.size();
  r.rows = std::move(rows);
  r.encode_first = encode_first;
  r.encrypt_row = std::move(fn);
  r.rng = Rng(config.seed ^ kEncryptSalt ^ (pivots << 32) ^
              std::hash<std::string>{}(r.timing.method));
  return r;
}

// Encryptions run back to back in chunks; encoding and validation of each
// chunk happen off the clock.
constexpr size_t kChunk = 64;

// Times one chunk of the runner's rows starting at begin. Ciphertext slots
// in cts are overwritten chunk after chunk so the heap stays warm.
double run_chunk(const Session& s, const MessageSet& data, Runner& r,
                 size_t begin, std::vector<Ciphertext>& cts, OpCounts& ops) {
  const auto& rows = r.rows;
  const size_t end = std::min(rows.size(), begin + kChunk);
  std::vector<Plaintext> pts;
  if (r.encode_first) {
    pts.reserve(end - begin);
    for (size_t i = begin; i < end; ++i) {
      pts.push_back(encode_row(data, rows[i], s.params));
    }
  }
  const OpCounts before = op_counts();
  const auto t0 = Clock::now();
  for (size_t i = begin; i < end; ++i) {
    Ciphertext ct =
        r.encrypt_row(rows[i], r.encode_first ? &pts[i - begin] : nullptr, r.rng);
    if (cts.size() <= i - begin) {
      cts.push_back(std::move(ct));
    } else {
      cts[i - begin] = std::move(ct);
    }
  }
  const auto t1 = Clock::now();
  const OpCounts delta = op_counts() - before;
  ops.ntt_forward += delta.ntt_forward;
  ops.ntt_inverse += delta.ntt_inverse;
  ops.poly_mul += delta.poly_mul;
  for (size_t i = begin; i < end; ++i) {
    validate(s, cts[i - begin], data, rows[i], r.timing.method, r.timing.pivots);
  }
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

// Warm-up plus timed passes. Within a pass the methods take turns chunk by
// chunk, in an order that reverses every chunk, so short swings in machine
// speed hit all methods alike.
std::vector<MethodTiming> run_interleaved(const Session& s,
                                          const BenchConfig& config,
                                          const MessageSet& data,
                                          std::vector<Runner>& runners) {
  size_t longest = 0;
  for (const auto& r : runners) longest = std::max(longest, r.rows.size());
  std::vector<std::vector<Ciphertext>> slots(runners.size());
  for (size_t pass = 0; pass < config.warmup + config.repetitions; ++pass) {
    std::vector<double> ms(runners.size(), 0.0);
    std::vector<OpCounts> ops(runners.size());
    for (size_t begin = 0, turn = 0; begin < longest; begin += kChunk, ++turn) {
      for (size_t k = 0; k < runners.size(); ++k) {
        const size_t idx = turn % 2 == 0 ? k : runners.size() - 1 - k;
        if (begin >= runners[idx].rows.size()) continue;
        ms[idx] += run_chunk(s, data, runners[idx], begin, slots[idx], ops[idx]);
      }
    }
    if (pass < config.warmup) continue;
    for (size_t k = 0; k < runners.size(); ++k) {
      runners[k].timing.run_ms.push_back(ms[k]);
      runners[k].timing.encrypt_ops = ops[k];
    }
  }
  std::vector<MethodTiming> out;
  for (auto& r : runners) {
    MethodTiming& t = r.timing;
    const double n = static_cast<double>(t.run_ms.size());
    t.mean_ms = std::accumulate(t.run_ms.begin(), t.run_ms.end(), 0.0) / n;
    double ss = 0.0;
    for (double x : t.run_ms) ss += (x - t.mean_ms) * (x - t.mean_ms);
    t.stddev_ms = t.run_ms.size() > 1 ? std::sqrt(ss / (n - 1)) : 0.0;
    out.push_back(std::move(t));
  }
  return out;
}

void fill_ratios(TimingReport& report) {
  const MethodTiming* vanilla = report.find("vanilla");
  const double base = vanilla ? vanilla->mean_ms : 0.0;
  for (auto& m : report.methods) {
    m.ratio = base > 0.0 ? m.mean_ms / base : 0.0;
  }
}

// Per-message accounting: vanilla 2 multiplications, zinc 0 multiplications
// and 2 transforms, rache nothing but additions (2n multiplications at init).
void check_costs(const TimingReport& report) {
  for (const auto& m : report.methods) {
    if (m.messages == 0) continue;
    const double mul = m.mul_per_message();
    const double ntt = m.ntt_per_message();
    bool ok = true;
    if (m.method == "vanilla") ok = mul == 2.0;
    if (m.method == "zinc") ok = mul == 0.0 && ntt == 2.0 && m.setup_ops.poly_mul == 2;
    if (m.method == "rache") {
      ok = mul == 0.0 && ntt == 0.0 && m.setup_ops.poly_mul == 2 * m.pivots;
    }
    if (!ok) {
      throw BenchFailure("operation counts for " + m.method +
                         " do not match the expected cost model");
    }
  }
}

RacheCache build_rache(const Session& s, const BenchConfig& config, size_t n,
                       Rng& rng) {
  try {
    return rache_init(s.pk, s.params, config.radix, n, rng, PivotRange::kStrict);
  } catch (const std::out_of_range&) {
    if (s.params.variant() == Variant::kCkks) throw;
    return rache_init(s.pk, s.params, config.radix, n, rng, PivotRange::kModular);
  }
}

TimingReport make_report(const BenchConfig& config, std::string kind,
                         std::string source) {
  TimingReport report;
  report.kind = std::move(kind);
  report.preset = config.preset;
  report.source = std::move(source);
  report.params = config.params;
  report.radix = config.radix;
  report.repetitions = config.repetitions;
  report.seed = config.seed;
  return report;
}

Runner vanilla_runner(const Session& s, const BenchConfig& config,
                      std::vector<size_t> rows) {
  return make_runner(config, "vanilla", 0, std::move(rows), true,
                     [&s](size_t, const Plaintext* pt, Rng& rng) {
                       return encrypt(*pt, s.pk, s.params, rng);
                     });
}

Runner zinc_runner(const Session& s, const BenchConfig& config,
                   const ZincCache& cache, const OpCounts& setup,
                   std::vector<size_t> rows) {
  Runner r = make_runner(config, "zinc", 0, std::move(rows), true,
                         [&s, &cache](size_t, const Plaintext* pt, Rng& rng) {
                           return zinc_encrypt(*pt, cache, s.params, rng);
                         });
  r.timing.setup_ops = setup;
  return r;
}

Runner rache_runner(const Session& s, const BenchConfig& config,
                    const MessageSet& data, const RacheCache& cache,
                    const OpCounts& setup, std::vector<size_t> rows) {
  Runner r = make_runner(
      config, "rache", cache.size(), std::move(rows), false,
      [&s, &data, &cache](size_t row, const Plaintext*, Rng& rng) {
        return rache_encrypt(data.ints[row], cache, s.params, rng);
      });
  r.timing.setup_ops = setup;
  return r;
}

ZincCache build_zinc(const Session& s, const BenchConfig& config, OpCounts& setup) {
  Rng cache_rng(config.seed ^ 0x7a696e63);
  const OpCounts before = op_counts();
  ZincCache cache = ZincCache::init(s.pk, s.params, cache_rng);
  setup = op_counts() - before;
  return cache;
}

}  // namespace

ReportFormat parse_format(std::string_view name) {
  if (name == "json") return ReportFormat::kJson;
  if (name == "csv") return ReportFormat::kCsv;
  if (name == "md" || name == "markdown") return ReportFormat::kMarkdown;
  throw std::invalid_argument("unknown report format '" + std::string(name) + "'");
}

ReportFormat format_for_path(std::string_view path) {
  const auto dot = path.rfind('.');
  if (dot == std::string_view::npos) {
    throw std::invalid_argument("cannot infer report format from '" +
                                std::string(path) + "'");
  }
  return parse_format(path.substr(dot + 1));
}

void BenchConfig::validate() const {
  if (repetitions < 1) throw std::invalid_argument("repetitions must be >= 1");
  if (messages < 1) throw std::invalid_argument("message count must be >= 1");
  if (radix < 2) throw std::invalid_argument("radix must be >= 2");
  for (size_t n : pivots) {
    if (n == 0) throw std::invalid_argument("pivot counts must be positive");
  }
}

double MethodTiming::mul_per_message() const {
  return messages == 0 ? 0.0
                       : static_cast<double>(encrypt_ops.poly_mul) / messages;
}

double MethodTiming::ntt_per_message() const {
  return messages == 0 ? 0.0
                       : static_cast<double>(encrypt_ops.ntt_total()) / messages;
}

const MethodTiming* TimingReport::find(std::string_view method,
                                       size_t pivots) const {
  for (const auto& m : methods) {
    if (m.method != method) continue;
    if (method == "rache" && m.pivots != pivots) continue;
    return &m;
  }
  return nullptr;
}

MessageSet MessageSet::from_ints(std::vector<int64_t> values) {
  MessageSet s;
  s.integral = true;
  s.ints = std::move(values);
  return s;
}

MessageSet MessageSet::from_reals(std::vector<double> values) {
  MessageSet s;
  s.integral = false;
  s.reals = std::move(values);
  return s;
}

SynthSpec parse_synth_spec(std::string_view dist, size_t count, uint64_t seed) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : dist) {
    if (c == ':') {
      parts.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  parts.push_back(current);

  SynthSpec spec;
  spec.count = count;
  spec.seed = seed;
  auto bad = [&] {
    return std::invalid_argument("bad distribution '" + std::string(dist) +
                                 "', expected uniform-int:LO:HI or "
                                 "lognormal-real:MU:SIGMA");
  };
  if (parts.size() != 3) throw bad();
  try {
    if (parts[0] == "uniform-int") {
      spec.kind = SynthSpec::Kind::kUniformInt;
      size_t used_lo = 0, used_hi = 0;
      spec.lo = std::stoll(parts[1], &used_lo);
      spec.hi = std::stoll(parts[2], &used_hi);
      if (used_lo != parts[1].size() || used_hi != parts[2].size()) throw bad();
      if (spec.lo > spec.hi) {
        throw std::invalid_argument("uniform-int bounds must satisfy lo <= hi");
      }
    } else if (parts[0] == "lognormal-real" || parts[0] == "lognormal") {
      spec.kind = SynthSpec::Kind::kLognormalReal;
      spec.mu = std::stod(parts[1]);
      spec.sigma = std::stod(parts[2]);
      if (!(spec.sigma > 0.0)) {
        throw std::invalid_argument("lognormal sigma must be positive");
      }
    } else {
      throw bad();
    }
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception&) {
    throw bad();
  }
  return spec;
}

MessageSet synth_generate(const SynthSpec& spec) {
  if (spec.count == 0) throw std::invalid_argument("synthetic count must be >= 1");
  std::mt19937_64 engine(spec.seed);
  if (spec.kind == SynthSpec::Kind::kUniformInt) {
    if (spec.lo > spec.hi) throw std::invalid_argument("lo must be <= hi");
    std::uniform_int_distribution<int64_t> dist(spec.lo, spec.hi);
    std::vector<int64_t> values(spec.count);
    for (auto& v : values) v = dist(engine);
    return MessageSet::from_ints(std::move(values));
  }
  if (!(spec.sigma > 0.0)) throw std::invalid_argument("sigma must be positive");
  std::lognormal_distribution<double> dist(spec.mu, spec.sigma);
  std::vector<double> values(spec.count);
  for (auto& v : values) v = dist(engine);
  return MessageSet::from_reals(std::move(values));
}

TimingReport run_micro(const BenchConfig& config) {
  config.validate();
  if (config.pivots.empty()) {
    throw std::invalid_argument("micro benchmark needs at least one pivot count");
  }
  const Session s = make_session(config);
  TimingReport report = make_report(config, "micro", "random integers");
  report.pivot_sweep = config.pivots;

  // Caches first: the message range is what the smallest cache can express.
  Rng cache_rng(config.seed ^ 0x72616368);
  std::deque<RacheCache> caches;
  std::vector<OpCounts> setups;
  uint64_t limit = std::numeric_limits<uint64_t>::max();
  for (size_t n : config.pivots) {
    const OpCounts before = op_counts();
    caches.push_back(build_rache(s, config, n, cache_rng));
    setups.push_back(op_counts() - before);
    limit = std::min(limit, caches.back().max_message());
  }
  OpCounts zinc_setup;
  const ZincCache zinc_cache = build_zinc(s, config, zinc_setup);

  Rng msg_rng(config.seed ^ kMessageSalt);
  std::uniform_int_distribution<int64_t> dist(0, static_cast<int64_t>(limit));
  std::vector<int64_t> values(config.messages);
  for (auto& v : values) v = dist(msg_rng);
  const MessageSet data = MessageSet::from_ints(std::move(values));
  std::vector<size_t> rows(data.size());
  std::iota(rows.begin(), rows.end(), size_t{0});
  report.messages = data.size();

  std::vector<Runner> runners;
  runners.push_back(vanilla_runner(s, config, rows));
  for (size_t i = 0; i < caches.size(); ++i) {
    runners.push_back(rache_runner(s, config, data, caches[i], setups[i], rows));
  }
  runners.push_back(zinc_runner(s, config, zinc_cache, zinc_setup, rows));
  report.methods = run_interleaved(s, config, data, runners);
  fill_ratios(report);
  check_costs(report);
  return report;
}

TimingReport run_dataset(const BenchConfig& config, const MessageSet& data,
                         std::string source) {
  config.validate();
  if (data.size() == 0) throw std::invalid_argument("dataset is empty");
  const Session s = make_session(config);
  TimingReport report = make_report(config, "dataset", std::move(source));
  report.messages = data.size();

  std::vector<size_t> all(data.size());
  std::iota(all.begin(), all.end(), size_t{0});
  std::vector<Runner> runners;
  runners.push_back(vanilla_runner(s, config, all));

  std::deque<RacheCache> caches;
  if (data.integral) {
    report.pivot_sweep = config.pivots;
    Rng cache_rng(config.seed ^ 0x72616368);
    for (size_t n : config.pivots) {
      const OpCounts before = op_counts();
      caches.push_back(build_rache(s, config, n, cache_rng));
      const OpCounts setup = op_counts() - before;
      const RacheCache& cache = caches.back();
      std::vector<size_t> rows;
      for (size_t i = 0; i < data.size(); ++i) {
        const int64_t v = data.ints[i];
        if (v >= 0 && static_cast<uint64_t>(v) <= cache.max_message()) {
          rows.push_back(i);
        }
      }
      Runner r = rache_runner(s, config, data, cache, setup, std::move(rows));
      r.timing.skipped = data.size() - r.timing.messages;
      runners.push_back(std::move(r));
    }
  }
  OpCounts zinc_setup;
  const ZincCache zinc_cache = build_zinc(s, config, zinc_setup);
  runners.push_back(zinc_runner(s, config, zinc_cache, zinc_setup, all));
  report.methods = run_interleaved(s, config, data, runners);
  fill_ratios(report);
  check_costs(report);
  return report;
}

}  // namespace zinc::bench
