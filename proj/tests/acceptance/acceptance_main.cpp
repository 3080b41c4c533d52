// Copyright 2026 The Zinc HE Authors.
// SPDX-License-Identifier: Apache-2.0

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "../test_util.hpp"
#include "zinc/bench.hpp"
#include "zinc/params.hpp"
#include "zinc/rache.hpp"
#include "zinc/zinc.hpp"

namespace zinc {
namespace {

using testing::desk_params;
using testing::fresh_bound;
using testing::rerandomize_bound;
using testing::schoolbook_mul;
using testing::to_vector;

const std::vector<Variant> kAllVariants = {Variant::kBfv, Variant::kBgv,
                                           Variant::kCkks};

struct Outcome {
  bool pass = true;
  std::string detail;
};

Outcome fail(std::string detail) { return {false, std::move(detail)}; }

std::string fmt(const char* format, double a, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, format, a, b, c);
  return buf;
}

// 1. zinc_encrypt then decrypt recovers every message, all variants.
Outcome correctness() {
  size_t checked = 0;
  double worst_rel = 0.0;
  for (Variant v : kAllVariants) {
    const SchemeParams p = desk_params(v);
    Rng rng(101);
    const auto [sk, pk] = keygen(p, rng);
    const ZincCache cache = ZincCache::init(pk, p, rng);
    const int64_t half = static_cast<int64_t>(p.t() / 2);
    std::uniform_int_distribution<int64_t> ints(-half + 1, half);
    std::uniform_real_distribution<double> mags(1024.0, 65536.0);
    const double limit = std::ldexp(1.0, -(p.delta_log2() - 1));
    for (int i = 0; i < 1000; ++i) {
      if (v == Variant::kCkks) {
        const double m = (rng.next() & 1 ? -1.0 : 1.0) * mags(rng);
        const double got =
            decode_real(decrypt(zinc_encrypt(encode_real(m, p), cache, p, rng), sk, p));
        const double rel = std::fabs(got - m) / std::fabs(m);
        worst_rel = std::max(worst_rel, rel);
        if (rel > limit) {
          return fail(fmt("ckks message %.6f decoded as %.6f", m, got));
        }
      } else {
        const int64_t m = ints(rng);
        const int64_t got =
            decode_integer(decrypt(zinc_encrypt(encode_integer(m, p), cache, p, rng), sk, p));
        if (got != m) {
          return fail(std::string(to_string(v)) + " message " + std::to_string(m) +
                      " decoded as " + std::to_string(got));
        }
      }
      ++checked;
    }
  }
  return {true, std::to_string(checked) + " messages, 0 failures, worst ckks relative error " +
                    fmt("%.3g", worst_rel)};
}

// 2. Cache (u, e1, e2) plus rerandomization (e1', e2') equals vanilla with
// (u, e1 + e1', e2 + e2'), bit for bit.
Outcome reduction_equivalence() {
  size_t cases = 0;
  for (Variant v : kAllVariants) {
    const SchemeParams p = desk_params(v);
    Rng rng(202);
    const auto [sk, pk] = keygen(p, rng);
    std::uniform_int_distribution<int64_t> ints(-1000, 1000);
    for (int i = 0; i < 100; ++i) {
      const EncryptionNoise base = sample_encryption_noise(p, rng);
      const ZincCache cache = ZincCache::from_zero_ciphertext(
          encrypt_with(encode_integer(0, p), pk, p, base), p);
      const Poly e1 = sample_gaussian(p.ring(), rng, p.gaussian());
      const Poly e2 = sample_gaussian(p.ring(), rng, p.gaussian());
      const Plaintext pt = encode_integer(ints(rng), p);
      const Ciphertext fast = zinc_encrypt_with(pt, cache, p, e1, e2);
      const Ciphertext slow = encrypt_with(
          pt, pk, p, {base.u, poly_add(base.e1, e1), poly_add(base.e2, e2)});
      if (fast != to_domain(slow, Domain::kNtt)) {
        return fail(std::string(to_string(v)) + " case " + std::to_string(i) +
                    " differs");
      }
      ++cases;
    }
  }
  return {true, std::to_string(cases) + " cases bitwise equal"};
}

// 3. Desk micro benchmark: zinc at least 1.8x faster than vanilla.
Outcome speedup(const bench::TimingReport& r, double seconds) {
  const double v = r.find("vanilla")->mean_ms;
  const double z = r.find("zinc")->mean_ms;
  const double s = v / z;
  std::string detail = fmt("vanilla %.1f ms, zinc %.1f ms, speedup %.2fx", v, z, s) +
                       fmt(", micro run %.0f s", seconds);
  if (s < 2.0 && s >= 1.8) detail += " (WARNING: below 2.0x)";
  if (s < 1.8) return fail(detail);
  if (seconds >= 300) return fail(detail + " (over 5 min)");
  return {true, detail};
}

// 4. Exact operation counts per encryption.
Outcome cost_accounting() {
  for (Variant v : kAllVariants) {
    const SchemeParams p = desk_params(v);
    Rng rng(404);
    const auto [sk, pk] = keygen(p, rng);
    const ZincCache cache = ZincCache::init(pk, p, rng);
    const Plaintext pt = encode_integer(7, p);
    constexpr uint64_t kCount = 50;
    OpCounts before = op_counts();
    for (uint64_t i = 0; i < kCount; ++i) (void)zinc_encrypt(pt, cache, p, rng);
    const OpCounts z = op_counts() - before;
    if (z.poly_mul != 0 || z.ntt_total() != 2 * kCount) {
      return fail(std::string(to_string(v)) + " zinc: " +
                  std::to_string(z.ntt_total()) + " NTT, " +
                  std::to_string(z.poly_mul) + " mul");
    }
    before = op_counts();
    for (uint64_t i = 0; i < kCount; ++i) (void)encrypt(pt, pk, p, rng);
    const OpCounts van = op_counts() - before;
    if (van.poly_mul != 2 * kCount) {
      return fail(std::string(to_string(v)) + " vanilla: " +
                  std::to_string(van.poly_mul) + " mul");
    }
  }
  return {true, "zinc 2 NTT + 0 mul, vanilla 2 mul per encryption"};
}

// 5. Rache time grows linearly in the pivot count.
Outcome rache_scaling(const bench::TimingReport& r) {
  std::vector<double> xs, ys;
  for (size_t n : r.pivot_sweep) {
    xs.push_back(static_cast<double>(n));
    ys.push_back(r.find("rache", n)->mean_ms);
  }
  const double k = static_cast<double>(xs.size());
  double mx = 0, my = 0;
  for (size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i] / k;
    my += ys[i] / k;
  }
  double sxy = 0, sxx = 0, syy = 0;
  for (size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
    syy += (ys[i] - my) * (ys[i] - my);
  }
  const double r2 = sxy * sxy / (sxx * syy);
  std::string detail = fmt("R^2 %.4f, times", r2);
  bool ok = r2 >= 0.95;
  for (size_t i = 0; i < xs.size(); ++i) {
    detail += fmt(" %.0f", ys[i]);
  }
  detail += " ms, doubling ratios";
  for (size_t i = 1; i < xs.size(); ++i) {
    if (xs[i] != 2 * xs[i - 1]) continue;
    const double ratio = ys[i] / ys[i - 1];
    detail += fmt(" %.2f", ratio);
    ok &= ratio >= 1.5 && ratio <= 2.5;
  }
  return {ok, detail};
}

// 6. Rache with n = 9, r = 2 over 500 values below 2^9.
Outcome rache_correctness() {
  const SchemeParams p = desk_params();
  Rng rng(606);
  const auto [sk, pk] = keygen(p, rng);
  const RacheCache cache = rache_init(pk, p, 2, 9, rng);
  std::uniform_int_distribution<int64_t> dist(0, 511);
  for (int i = 0; i < 500; ++i) {
    const int64_t m = dist(rng);
    const int64_t got = decode_integer(decrypt(rache_encrypt(m, cache, p, rng), sk, p));
    if (got != m) {
      return fail("message " + std::to_string(m) + " decoded as " + std::to_string(got));
    }
  }
  return {true, "500 messages, 0 failures"};
}

// 7. 100 encryptions of one message: distinct, close, zero-mean errors.
Outcome randomization() {
  const SchemeParams p = desk_params();
  Rng rng(707);
  const auto [sk, pk] = keygen(p, rng);
  const ZincCache cache = ZincCache::init(pk, p, rng);
  const Plaintext pt = encode_integer(4242, p);
  const Ciphertext& zero = cache.zero_ciphertext();
  const Poly dm = scaled_message(pt, p);

  std::vector<Ciphertext> cts;
  std::set<std::vector<uint64_t>> seen;
  double sum1 = 0, sum2 = 0;
  for (int i = 0; i < 100; ++i) {
    Ciphertext ct = zinc_encrypt(pt, cache, p, rng);
    std::vector<uint64_t> key = to_vector(ct.c1);
    const std::vector<uint64_t> c2 = to_vector(ct.c2);
    key.insert(key.end(), c2.begin(), c2.end());
    if (!seen.insert(std::move(key)).second) {
      return fail("encryption " + std::to_string(i) + " repeats an earlier one");
    }
    // e1' = c1 - zero.c1 - delta*m and e2' = c2 - zero.c2.
    const Poly e1 = poly_sub(ntt_inverse(poly_sub(ct.c1, zero.c1)), dm);
    const Poly e2 = ntt_inverse(poly_sub(ct.c2, zero.c2));
    for (int64_t x : e1.centered()) sum1 += static_cast<double>(x);
    for (int64_t x : e2.centered()) sum2 += static_cast<double>(x);
    cts.push_back(to_domain(std::move(ct), Domain::kCoefficient));
  }
  uint64_t worst = 0;
  for (size_t i = 0; i < cts.size(); ++i) {
    for (size_t j = i + 1; j < cts.size(); ++j) {
      worst = std::max({worst, infinity_norm(poly_sub(cts[i].c1, cts[j].c1)),
                        infinity_norm(poly_sub(cts[i].c2, cts[j].c2))});
    }
  }
  const double count = 100.0 * static_cast<double>(p.degree());
  const double mean1 = sum1 / count, mean2 = sum2 / count;
  const double limit = 4 * p.sigma() / std::sqrt(count);
  std::string detail = "100 distinct, max pairwise difference " + std::to_string(worst) +
                       fmt(", error means %.4f %.4f (limit %.4f)", mean1, mean2, limit);
  const bool ok = worst <= 40 && std::fabs(mean1) <= limit && std::fabs(mean2) <= limit;
  return {ok, detail};
}

// 8. Fresh, Zinc and 16-fold-sum noise within the worst-case bounds.
Outcome noise_bounds() {
  uint64_t worst_fresh = 0, worst_zinc = 0, worst_sum = 0;
  for (Variant v : kAllVariants) {
    const SchemeParams p = desk_params(v);
    Rng rng(808);
    const auto [sk, pk] = keygen(p, rng);
    const ZincCache cache = ZincCache::init(pk, p, rng);
    const uint64_t es = p.error_scale();
    const uint64_t b_fresh = fresh_bound(p) * es;
    const uint64_t b_zinc = (fresh_bound(p) + rerandomize_bound(p)) * es;
    const uint64_t b_sum = 16 * b_fresh;
    std::uniform_int_distribution<int64_t> ints(-2048, 2048);
    for (int i = 0; i < 100; ++i) {
      const Plaintext pt = encode_integer(ints(rng), p);
      const Ciphertext fresh = encrypt(pt, pk, p, rng);
      const Ciphertext z = zinc_encrypt(pt, cache, p, rng);
      const uint64_t nf = noise_norm(fresh, sk, pt, p);
      const uint64_t nz = noise_norm(z, sk, pt, p);
      if (nf > b_fresh) return fail(std::string(to_string(v)) + " fresh noise too large");
      if (nz > b_zinc) return fail(std::string(to_string(v)) + " zinc noise too large");
      worst_fresh = std::max(worst_fresh, nf / es);
      worst_zinc = std::max(worst_zinc, nz / es);
      (void)decrypt(fresh, sk, p);
      (void)decrypt(z, sk, p);
    }
    for (int trial = 0; trial < 5; ++trial) {
      int64_t total = ints(rng);
      Ciphertext sum = encrypt(encode_integer(total, p), pk, p, rng);
      for (int k = 1; k < 16; ++k) {
        const int64_t m = ints(rng);
        total += m;
        add_ct_ct_inplace(sum, encrypt(encode_integer(m, p), pk, p, rng));
      }
      const Plaintext expected = encode_integer(total, p);
      const uint64_t ns = noise_norm(sum, sk, expected, p);
      if (ns > b_sum) return fail(std::string(to_string(v)) + " 16-fold noise too large");
      worst_sum = std::max(worst_sum, ns / es);
      const Plaintext out = decrypt(sum, sk, p);
      if (v != Variant::kCkks && decode_integer(out) != total) {
        return fail(std::string(to_string(v)) + " 16-fold sum decoded wrongly");
      }
    }
  }
  const SchemeParams desk = desk_params();
  return {true, "worst noise/scale: fresh " + std::to_string(worst_fresh) + " <= " +
                    std::to_string(fresh_bound(desk)) + ", zinc " +
                    std::to_string(worst_zinc) + " <= " +
                    std::to_string(fresh_bound(desk) + rerandomize_bound(desk)) +
                    ", 16-fold " + std::to_string(worst_sum) + " <= " +
                    std::to_string(16 * fresh_bound(desk))};
}

// 9. NTT product equals the schoolbook product.
Outcome oracle_equivalence() {
  const RingPtr ring = RingParams::create(16, kDefaultModulus);
  Rng rng(909);
  for (int i = 0; i < 200; ++i) {
    const Poly a = sample_uniform(ring, rng);
    const Poly b = sample_uniform(ring, rng);
    if (to_vector(poly_mul(a, b)) !=
        schoolbook_mul(to_vector(a), to_vector(b), kDefaultModulus)) {
      return fail("pair " + std::to_string(i) + " differs");
    }
  }
  return {true, "200 pairs at N=16 equal"};
}

int run() {
  using Clock = std::chrono::steady_clock;
  int failures = 0;
  auto report = [&](int id, const std::string& name, const std::function<Outcome()>& fn) {
    const auto start = Clock::now();
    Outcome out;
    try {
      out = fn();
    } catch (const std::exception& e) {
      out = fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (!out.pass) ++failures;
    std::printf("%s criterion %d (%s): %s [%.1f s]\n", out.pass ? "PASS" : "FAIL", id,
                name.c_str(), out.detail.c_str(), secs);
    std::fflush(stdout);
    return secs;
  };

  report(1, "correctness", [] {
    const auto start = Clock::now();
    Outcome out = correctness();
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (out.pass && secs >= 120) return fail(out.detail + ", runtime over 2 min");
    return out;
  });
  report(2, "reduction equivalence", reduction_equivalence);

  // Criteria 3 and 5 share one desk micro run.
  std::optional<bench::TimingReport> micro;
  std::string micro_error;
  double micro_secs = 0;
  {
    const auto start = Clock::now();
    try {
      bench::BenchConfig config;
      config.pivots = {4, 8, 16, 32, 64};
      config.messages = 1024;
      config.repetitions = 5;
      micro = bench::run_micro(config);
    } catch (const std::exception& e) {
      micro_error = e.what();
    }
    micro_secs = std::chrono::duration<double>(Clock::now() - start).count();
  }
  report(3, "speedup", [&] {
    if (!micro) return fail("micro benchmark failed: " + micro_error);
    return speedup(*micro, micro_secs);
  });
  report(4, "cost accounting", cost_accounting);
  report(5, "rache linear scaling", [&] {
    if (!micro) return fail("micro benchmark failed: " + micro_error);
    return rache_scaling(*micro);
  });
  report(6, "rache correctness", rache_correctness);
  report(7, "randomization", randomization);
  report(8, "noise bounds", noise_bounds);
  report(9, "oracle equivalence", oracle_equivalence);
  std::printf("%d of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}

}  // namespace
}  // namespace zinc

int main() { return zinc::run(); }
