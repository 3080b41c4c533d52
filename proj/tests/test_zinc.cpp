// Copyright 2026 The Zinc HE Authors.
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <random>
#include <set>
#include <thread>

#include "test_util.hpp"
#include "zinc/params.hpp"
#include "zinc/zinc.hpp"

namespace zinc {
namespace {

using testing::desk_params;
using testing::fresh_bound;
using testing::rerandomize_bound;
using testing::to_vector;
using testing::toy_params;

const std::vector<Variant> kAllVariants = {Variant::kBfv, Variant::kBgv,
                                           Variant::kCkks};

// chi2.ppf(0.999, 18), frozen from scipy.
constexpr double kChi2Crit18 = 42.3124;

std::pair<SecretKey, PublicKey> toy_keys(const SchemeParams& p) {
  const Poly s = Poly::from_signed(p.ring(), std::vector<int64_t>{1, 0, -1, 0});
  const Poly a = Poly::from_values(p.ring(), {3, 5, 0, 0});
  return keygen_with(p, s, a, Poly(p.ring()));
}

Ciphertext zero_ct(const SchemeParams& p) {
  return {Poly(p.ring()), Poly(p.ring()), p.variant(), 1.0};
}

TEST(ZincEncrypt, ZeroCacheZeroErrorHook) {
  const SchemeParams p = toy_params();
  const ZincCache cache = ZincCache::from_zero_ciphertext(zero_ct(p), p);
  const Ciphertext ct = zinc_encrypt_with(encode_integer(3, p), cache, p,
                                          Poly(p.ring()), Poly(p.ring()));
  EXPECT_EQ(ct.domain(), Domain::kNtt);
  const Ciphertext coeff = to_domain(ct, Domain::kCoefficient);
  EXPECT_EQ(to_vector(coeff.c1), (std::vector<uint64_t>{45, 0, 0, 0}));
  EXPECT_EQ(to_vector(coeff.c2), (std::vector<uint64_t>{0, 0, 0, 0}));
  const auto [sk, pk] = toy_keys(p);
  EXPECT_EQ(decode_integer(decrypt(ct, sk, p)), 3);
}

TEST(ZincCache, InitCostAndContents) {
  for (Variant v : kAllVariants) {
    const SchemeParams p = desk_params(v);
    Rng rng(1);
    const auto [sk, pk] = keygen(p, rng);
    const OpCounts before = op_counts();
    const ZincCache cache = ZincCache::init(pk, p, rng);
    EXPECT_EQ((op_counts() - before).poly_mul, 2u) << to_string(v);
    EXPECT_EQ(cache.zero_ciphertext().domain(), Domain::kNtt);
    EXPECT_EQ(cache.variant(), v);
    const Plaintext zero = decrypt(cache.zero_ciphertext(), sk, p);
    if (v == Variant::kCkks) {
      EXPECT_NEAR(decode_real(zero), 0.0, 1e-6);
    } else {
      EXPECT_EQ(decode_integer(zero), 0);
    }
    Rng other(2);
    EXPECT_NE(ZincCache::init(pk, p, other).zero_ciphertext(),
              cache.zero_ciphertext());
  }
}

TEST(ZincCache, RejectsMismatchedInputs) {
  const SchemeParams bfv = desk_params(Variant::kBfv);
  const SchemeParams bgv = desk_params(Variant::kBgv);
  EXPECT_THROW(ZincCache::from_zero_ciphertext(zero_ct(bfv), bgv),
               std::invalid_argument);
  const SchemeParams toy = toy_params();
  EXPECT_THROW(ZincCache::from_zero_ciphertext(zero_ct(toy), bfv),
               std::invalid_argument);
  Rng rng(3);
  const auto [sk, pk] = keygen(bfv, rng);
  const ZincCache cache = ZincCache::init(pk, bfv, rng);
  EXPECT_THROW(zinc_encrypt(encode_integer(1, bgv), cache, bfv, rng),
               std::invalid_argument);
  EXPECT_THROW(rerandomize(encrypt(encode_integer(1, bfv), pk, bfv, rng), bgv, rng),
               std::invalid_argument);
}

TEST(ZincEncrypt, RoundTripThousandMessagesPerVariant) {
  for (Variant v : kAllVariants) {
    const SchemeParams p = desk_params(v);
    Rng rng(4);
    const auto [sk, pk] = keygen(p, rng);
    const ZincCache cache = ZincCache::init(pk, p, rng);
    const int64_t half = static_cast<int64_t>(p.t() / 2);
    std::uniform_int_distribution<int64_t> ints(-half + 1, half);
    std::uniform_real_distribution<double> reals(-65536.0, 65536.0);
    const uint64_t bound =
        (fresh_bound(p) + rerandomize_bound(p)) * p.error_scale();
    for (int i = 0; i < 1000; ++i) {
      if (v == Variant::kCkks) {
        const double m = reals(rng);
        const Plaintext pt = encode_real(m, p);
        const Ciphertext ct = zinc_encrypt(pt, cache, p, rng);
        const uint64_t noise = noise_norm(ct, sk, pt, p);
        ASSERT_LE(noise, bound);
        const double got = decode_real(decrypt(ct, sk, p));
        ASSERT_LE(std::fabs(got - m), (0.5 + noise) / p.delta()) << i;
      } else {
        const int64_t m = ints(rng);
        const Plaintext pt = encode_integer(m, p);
        const Ciphertext ct = zinc_encrypt(pt, cache, p, rng);
        ASSERT_LE(noise_norm(ct, sk, pt, p), bound);
        ASSERT_EQ(decode_integer(decrypt(ct, sk, p)), m) << to_string(v) << " " << i;
      }
    }
  }
}

TEST(ZincEncrypt, VectorModeRoundTrip) {
  const SchemeParams p = desk_params();
  Rng rng(5);
  const auto [sk, pk] = keygen(p, rng);
  const ZincCache cache = ZincCache::init(pk, p, rng);
  std::vector<int64_t> values(p.degree());
  std::uniform_int_distribution<int64_t> ints(-32768, 32768);
  for (int64_t& v : values) v = ints(rng);
  const Ciphertext ct = zinc_encrypt(encode_integers(values, p), cache, p, rng);
  EXPECT_EQ(decode_integers(decrypt(ct, sk, p)), values);
}

// Two encryptions under one cache differ by e1' - e1'' and e2' - e2'' only.
TEST(ZincEncrypt, TwoEncryptionsDifferBySmallErrors) {
  for (Variant v : {Variant::kBfv, Variant::kBgv}) {
    const SchemeParams p = desk_params(v);
    Rng rng(6);
    const auto [sk, pk] = keygen(p, rng);
    const ZincCache cache = ZincCache::init(pk, p, rng);
    const Plaintext pt = encode_integer(1234, p);
    const Ciphertext a = zinc_encrypt(pt, cache, p, rng);
    const Ciphertext b = zinc_encrypt(pt, cache, p, rng);
    EXPECT_NE(a.c1, b.c1);
    EXPECT_NE(a.c2, b.c2);
    const Ciphertext diff =
        to_domain(sub_ct_ct(a, b), Domain::kCoefficient);
    const uint64_t limit = 40 * p.error_scale();
    EXPECT_LE(infinity_norm(diff.c1), limit);
    EXPECT_LE(infinity_norm(diff.c2), limit);
  }
}

TEST(ZincEncrypt, HundredEncryptionsPairwiseDistinct) {
  const SchemeParams p = desk_params();
  Rng rng(7);
  const auto [sk, pk] = keygen(p, rng);
  const ZincCache cache = ZincCache::init(pk, p, rng);
  const Plaintext pt = encode_integer(0, p);
  std::set<std::vector<uint64_t>> seen;
  for (int i = 0; i < 100; ++i) {
    const Ciphertext ct = zinc_encrypt(pt, cache, p, rng);
    std::vector<uint64_t> key = to_vector(ct.c1);
    const std::vector<uint64_t> c2 = to_vector(ct.c2);
    key.insert(key.end(), c2.begin(), c2.end());
    EXPECT_TRUE(seen.insert(std::move(key)).second) << i;
  }
}

// Zinc with (e1', e2') equals vanilla with (u, e1 + e1', e2 + e2'), bit for
// bit, when the cache holds the vanilla encryption of zero under (u, e1, e2).
TEST(ZincEncrypt, EquivalentToVanillaWithCombinedErrors) {
  for (Variant v : kAllVariants) {
    const SchemeParams p = desk_params(v);
    Rng rng(8);
    const auto [sk, pk] = keygen(p, rng);
    for (int i = 0; i < 20; ++i) {
      const EncryptionNoise base = sample_encryption_noise(p, rng);
      const ZincCache cache = ZincCache::from_zero_ciphertext(
          encrypt_with(encode_integer(0, p), pk, p, base), p);
      const Poly e1 = sample_gaussian(p.ring(), rng, p.gaussian());
      const Poly e2 = sample_gaussian(p.ring(), rng, p.gaussian());
      const Plaintext pt = v == Variant::kCkks
                               ? encode_real(-1.5 * i, p)
                               : encode_integer(37 * i - 300, p);
      const Ciphertext fast = zinc_encrypt_with(pt, cache, p, e1, e2);
      const EncryptionNoise combined{base.u, poly_add(base.e1, e1),
                                     poly_add(base.e2, e2)};
      const Ciphertext slow = encrypt_with(pt, pk, p, combined);
      ASSERT_EQ(fast, to_domain(slow, Domain::kNtt)) << to_string(v) << " " << i;
    }
  }
}

TEST(ZincEncrypt, CostIsTwoTransformsNoProducts) {
  for (Variant v : kAllVariants) {
    const SchemeParams p = desk_params(v);
    Rng rng(9);
    const auto [sk, pk] = keygen(p, rng);
    const ZincCache cache = ZincCache::init(pk, p, rng);
    const Plaintext pt = encode_integer(5, p);
    const OpCounts before = op_counts();
    for (int i = 0; i < 10; ++i) (void)zinc_encrypt(pt, cache, p, rng);
    EXPECT_EQ(op_counts() - before, (OpCounts{20, 0, 0})) << to_string(v);
  }
}

TEST(Rerandomize, ZeroErrorIsIdentity) {
  const SchemeParams p = desk_params();
  Rng rng(10);
  const auto [sk, pk] = keygen(p, rng);
  const Ciphertext ct = encrypt(encode_integer(9, p), pk, p, rng);
  EXPECT_EQ(rerandomize_with(ct, p, Poly(p.ring()), Poly(p.ring())), ct);
  const Ciphertext ntt = to_domain(ct, Domain::kNtt);
  EXPECT_EQ(rerandomize_with(ntt, p, Poly(p.ring()), Poly(p.ring())), ntt);
}

TEST(Rerandomize, PreservesDecryptionAndBoundsNoise) {
  for (Variant v : {Variant::kBfv, Variant::kBgv}) {
    const SchemeParams p = desk_params(v);
    Rng rng(11);
    const auto [sk, pk] = keygen(p, rng);
    for (int i = 0; i < 50; ++i) {
      const Plaintext pt = encode_integer(i * 997 - 20000, p);
      const Ciphertext ct = encrypt(pt, pk, p, rng);
      const Ciphertext rr = rerandomize(ct, p, rng);
      ASSERT_NE(rr, ct);
      ASSERT_EQ(decode_integer(decrypt(rr, sk, p)), decode_integer(pt));
      const uint64_t before = noise_norm(ct, sk, pt, p);
      const uint64_t after = noise_norm(rr, sk, pt, p);
      ASSERT_LE(after, before + rerandomize_bound(p) * p.error_scale());
    }
  }
}

// The c1 difference of two encryptions under one cache, descaled, should
// follow the distribution of chi - chi.
TEST(ZincEncrypt, DifferenceFollowsGaussianDifference) {
  for (Variant v : {Variant::kBfv, Variant::kBgv}) {
    const SchemeParams p = desk_params(v);
    const DiscreteGaussian& g = p.gaussian();
    const int64_t tail = g.tail_bound();
    constexpr int64_t kEdge = 8;
    auto bin = [](int64_t d) -> size_t {
      if (d < -kEdge) return 0;
      if (d > kEdge) return 2 * kEdge + 2;
      return static_cast<size_t>(d + kEdge + 1);
    };
    std::array<double, 2 * kEdge + 3> expected{};
    for (int64_t a = -tail; a <= tail; ++a) {
      for (int64_t b = -tail; b <= tail; ++b) {
        expected[bin(a - b)] += g.probability(a) * g.probability(b);
      }
    }

    Rng rng(12);
    const auto [sk, pk] = keygen(p, rng);
    const ZincCache cache = ZincCache::init(pk, p, rng);
    const Plaintext pt = encode_integer(77, p);
    std::array<uint64_t, 2 * kEdge + 3> counts{};
    size_t total = 0;
    const auto es = static_cast<int64_t>(p.error_scale());
    for (int pair = 0; pair < 10; ++pair) {
      const Ciphertext a = zinc_encrypt(pt, cache, p, rng);
      const Ciphertext b = zinc_encrypt(pt, cache, p, rng);
      const Poly d = ntt_inverse(poly_sub(a.c1, b.c1));
      for (int64_t x : d.centered()) {
        ASSERT_EQ(x % es, 0);
        ++counts[bin(x / es)];
        ++total;
      }
    }
    double chi2 = 0.0;
    for (size_t i = 0; i < counts.size(); ++i) {
      const double e = expected[i] * static_cast<double>(total);
      chi2 += (counts[i] - e) * (counts[i] - e) / e;
    }
    EXPECT_LT(chi2, kChi2Crit18) << to_string(v);
  }
}

TEST(ZincEncryptor, RefreshSchedule) {
  const SchemeParams p = desk_params();
  Rng rng(13);
  const auto [sk, pk] = keygen(p, rng);

  ZincEncryptor never(p, pk, rng);
  for (int i = 0; i < 5; ++i) {
    const Ciphertext ct = never.encrypt(encode_integer(i, p), rng);
    ASSERT_EQ(decode_integer(decrypt(ct, sk, p)), i);
  }
  EXPECT_EQ(never.refresh_count(), 0u);

  ZincEncryptor every3(p, pk, rng, 3);
  const Ciphertext first_cache = every3.cache().zero_ciphertext();
  for (int i = 0; i < 3; ++i) (void)every3.encrypt(encode_integer(i, p), rng);
  EXPECT_EQ(every3.refresh_count(), 0u);
  EXPECT_EQ(every3.cache().zero_ciphertext(), first_cache);
  const Ciphertext ct = every3.encrypt(encode_integer(-8, p), rng);
  EXPECT_EQ(every3.refresh_count(), 1u);
  EXPECT_NE(every3.cache().zero_ciphertext(), first_cache);
  EXPECT_EQ(decode_integer(decrypt(ct, sk, p)), -8);
  for (int i = 0; i < 3; ++i) (void)every3.encrypt(encode_integer(i, p), rng);
  EXPECT_EQ(every3.refresh_count(), 2u);
}

// One cache, several threads, one Rng per thread: results match a
// sequential run with the same seeds.
TEST(ZincCache, SharedAcrossThreads) {
  const SchemeParams p = desk_params();
  Rng rng(14);
  const auto [sk, pk] = keygen(p, rng);
  const ZincCache cache = ZincCache::init(pk, p, rng);
  constexpr int kThreads = 4;
  std::vector<Ciphertext> parallel(kThreads);
  std::vector<std::thread> workers;
  for (int i = 0; i < kThreads; ++i) {
    workers.emplace_back([&, i] {
      Rng local(1000 + i);
      parallel[i] = zinc_encrypt(encode_integer(i, p), cache, p, local);
    });
  }
  for (std::thread& w : workers) w.join();
  for (int i = 0; i < kThreads; ++i) {
    Rng local(1000 + i);
    EXPECT_EQ(parallel[i], zinc_encrypt(encode_integer(i, p), cache, p, local));
    EXPECT_EQ(decode_integer(decrypt(parallel[i], sk, p)), i);
  }
}

}  // namespace
}  // namespace zinc
