// Copyright 2026 The Zinc HE Authors.
// SPDX-License-Identifier: Apache-2.0

#include "zinc/rache.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace zinc {

namespace {

constexpr uint64_t kSaturated = std::numeric_limits<uint64_t>::max();

uint64_t saturating_mul(uint64_t a, uint64_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

// Largest non-negative integer encodable as a plaintext.
uint64_t plaintext_limit(const SchemeParams& params) {
  if (params.variant() == Variant::kCkks) {
    // m * delta < q/2
    return (params.q() / 2 - 1) / params.delta();
  }
  return params.t() / 2;
}

Ciphertext zero_like(const Ciphertext& proto) {
  return {Poly(proto.c1.ring(), proto.domain()),
          Poly(proto.c1.ring(), proto.domain()), proto.variant, proto.scale};
}

}  // namespace

RacheCache::RacheCache(uint64_t radix, std::vector<Ciphertext> pivots,
                       PivotRange range, uint64_t max_message)
    : radix_(radix),
      pivots_(std::move(pivots)),
      range_(range),
      max_message_(max_message) {
  if (radix_ < 2) throw std::invalid_argument("rache radix must be >= 2");
  if (pivots_.empty()) throw std::invalid_argument("rache needs at least one pivot");
}

size_t default_pivot_count(int kappa, uint64_t radix) {
  if (kappa < 1) throw std::invalid_argument("kappa must be positive");
  if (radix < 2) throw std::invalid_argument("radix must be >= 2");
  if ((radix & (radix - 1)) == 0) {
    // r = 2^b: r^i <= 2^kappa - 1  <=>  b*i < kappa.
    const int bits = __builtin_ctzll(radix);
    return static_cast<size_t>((kappa - 1) / bits);
  }
  // Otherwise r^i never equals 2^kappa, so r^i <= 2^kappa - 1 <=> i*log2(r) < kappa.
  const long double ratio =
      static_cast<long double>(kappa) / std::log2(static_cast<long double>(radix));
  return static_cast<size_t>(std::floor(ratio));
}

RacheCache rache_init(const PublicKey& pk, const SchemeParams& params,
                      uint64_t radix, size_t count, Rng& rng,
                      PivotRange range) {
  if (radix < 2) throw std::invalid_argument("rache radix must be >= 2");
  if (count == 0) throw std::invalid_argument("rache needs at least one pivot");
  const bool modular = range == PivotRange::kModular;
  if (modular && params.variant() == Variant::kCkks) {
    throw std::invalid_argument("modular pivots need an integer plaintext modulus");
  }
  const uint64_t limit = plaintext_limit(params);

  std::vector<int64_t> values;
  values.reserve(count);
  uint64_t power = 1;        // r^i, saturating
  uint64_t power_mod_t = 1;  // r^i mod t
  for (size_t i = 0; i < count; ++i) {
    if (modular) {
      const uint64_t t = params.t();
      int64_t value = static_cast<int64_t>(power_mod_t);
      if (power_mod_t > t / 2) value -= static_cast<int64_t>(t);
      values.push_back(value);
      power_mod_t = static_cast<uint64_t>(static_cast<u128>(power_mod_t) * radix % t);
    } else {
      if (power > limit) {
        throw std::out_of_range("pivot " + std::to_string(i) + " = " +
                                std::to_string(radix) + "^" + std::to_string(i) +
                                " exceeds the plaintext range");
      }
      values.push_back(static_cast<int64_t>(power));
    }
    power = saturating_mul(power, radix);
  }
  std::vector<Ciphertext> pivots;
  pivots.reserve(count);
  for (int64_t value : values) {
    pivots.push_back(encrypt(encode_integer(value, params), pk, params, rng));
  }
  // After the loop, power == r^n (saturated): digits fit iff m < r^n.
  const uint64_t digit_limit = power == kSaturated ? kSaturated : power - 1;
  return RacheCache(radix, std::move(pivots), range,
                    std::min(digit_limit, limit));
}

std::vector<uint32_t> radix_decompose(int64_t m, uint64_t radix) {
  if (m < 0) {
    throw std::out_of_range("radix decomposition needs a non-negative integer");
  }
  if (radix < 2) throw std::invalid_argument("radix must be >= 2");
  std::vector<uint32_t> digits;
  uint64_t rest = static_cast<uint64_t>(m);
  while (rest > 0) {
    digits.push_back(static_cast<uint32_t>(rest % radix));
    rest /= radix;
  }
  return digits;
}

Ciphertext rache_construct(int64_t m, const RacheCache& cache,
                           const SchemeParams& params) {
  const auto digits = radix_decompose(m, cache.radix());
  if (static_cast<uint64_t>(m) > cache.max_message()) {
    throw std::out_of_range("message " + std::to_string(m) +
                            " exceeds the rache cache range " +
                            std::to_string(cache.max_message()));
  }
  const auto& pivots = cache.pivots();
  if (pivots.front().variant != params.variant()) {
    throw std::invalid_argument("rache: variant mismatch");
  }
  Ciphertext ct = zero_like(pivots.front());
  for (size_t i = 0; i < digits.size(); ++i) {
    for (uint32_t d = 0; d < digits[i]; ++d) add_ct_ct_inplace(ct, pivots[i]);
  }
  return ct;
}

Ciphertext rache_randomizer(const RacheCache& cache, const SchemeParams& params,
                            Rng& rng) {
  const auto& pivots = cache.pivots();
  if (pivots.front().variant != params.variant()) {
    throw std::invalid_argument("rache: variant mismatch");
  }
  Ciphertext ct = zero_like(pivots.front());
  uint64_t coins = 0;
  int coins_left = 0;
  for (size_t i = 0; i < pivots.size(); ++i) {
    if (coins_left == 0) {
      coins = rng.next();
      coins_left = 64;
    }
    const bool heads = coins & 1;
    coins >>= 1;
    --coins_left;
    if (!heads) continue;
    add_ct_ct_inplace(ct, pivots[i]);
    if (i == 0) {
      sub_ct_ct_inplace(ct, pivots[0]);
    } else {
      for (uint64_t k = 0; k < cache.radix(); ++k) {
        sub_ct_ct_inplace(ct, pivots[i - 1]);
      }
    }
  }
  return ct;
}

Ciphertext rache_encrypt(int64_t m, const RacheCache& cache,
                         const SchemeParams& params, Rng& rng) {
  Ciphertext ct = rache_construct(m, cache, params);
  add_ct_ct_inplace(ct, rache_randomizer(cache, params, rng));
  return ct;
}

}  // namespace zinc
