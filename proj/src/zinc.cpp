// Copyright 2026 The Zinc HE Authors.
// SPDX-License-Identifier: Apache-2.0

#include "zinc/zinc.hpp"

#include <stdexcept>

namespace zinc {

namespace {

void check_cache(const Plaintext& pt, const ZincCache& cache,
                 const SchemeParams& params) {
  if (pt.variant != params.variant() || cache.variant() != params.variant()) {
    throw std::invalid_argument("zinc_encrypt: variant mismatch");
  }
  if (pt.scale != cache.zero_ciphertext().scale) {
    throw std::invalid_argument("zinc_encrypt: scale mismatch");
  }
  params.check_ring(cache.zero_ciphertext().c1);
}

// c + NTT(p) for one component; p is consumed.
Poly absorb(const Poly& cached, Poly p) {
  ntt_forward_add_inplace(p, cached);
  return p;
}

}  // namespace

ZincCache ZincCache::init(const PublicKey& pk, const SchemeParams& params,
                          Rng& rng) {
  Ciphertext zero = encrypt(encode_integer(0, params), pk, params, rng);
  return ZincCache(to_domain(std::move(zero), Domain::kNtt));
}

ZincCache ZincCache::from_zero_ciphertext(Ciphertext zero,
                                          const SchemeParams& params) {
  if (zero.variant != params.variant()) {
    throw std::invalid_argument("zinc cache: variant mismatch");
  }
  params.check_ring(zero.c1);
  params.check_ring(zero.c2);
  return ZincCache(to_domain(std::move(zero), Domain::kNtt));
}

Ciphertext zinc_encrypt(const Plaintext& pt, const ZincCache& cache,
                        const SchemeParams& params, Rng& rng) {
  check_cache(pt, cache, params);
  const Ciphertext& zero = cache.zero_ciphertext();
  const uint64_t es = params.error_scale();

  Poly p1 = scaled_message(pt, params);
  add_gaussian_inplace(p1, rng, params.gaussian(), es);
  Poly p2(params.ring());
  add_gaussian_inplace(p2, rng, params.gaussian(), es);

  return {absorb(zero.c1, std::move(p1)), absorb(zero.c2, std::move(p2)),
          zero.variant, zero.scale};
}

Ciphertext zinc_encrypt_with(const Plaintext& pt, const ZincCache& cache,
                             const SchemeParams& params, const Poly& e1,
                             const Poly& e2) {
  check_cache(pt, cache, params);
  const Ciphertext& zero = cache.zero_ciphertext();
  const uint64_t es = params.error_scale();

  Poly p1 = scaled_message(pt, params);
  p1.add_inplace(poly_scalar_mul(e1, es));
  return {absorb(zero.c1, std::move(p1)),
          absorb(zero.c2, poly_scalar_mul(e2, es)), zero.variant, zero.scale};
}

Ciphertext rerandomize(const Ciphertext& ct, const SchemeParams& params,
                       Rng& rng) {
  Poly e1 = sample_gaussian(params.ring(), rng, params.gaussian());
  Poly e2 = sample_gaussian(params.ring(), rng, params.gaussian());
  return rerandomize_with(ct, params, e1, e2);
}

Ciphertext rerandomize_with(const Ciphertext& ct, const SchemeParams& params,
                            const Poly& e1, const Poly& e2) {
  if (ct.variant != params.variant()) {
    throw std::invalid_argument("rerandomize: variant mismatch");
  }
  const uint64_t es = params.error_scale();
  Ciphertext r = ct;
  r.c1.add_inplace(to_domain(poly_scalar_mul(e1, es), ct.domain()));
  r.c2.add_inplace(to_domain(poly_scalar_mul(e2, es), ct.domain()));
  return r;
}

ZincEncryptor::ZincEncryptor(SchemeParams params, PublicKey pk, Rng& rng,
                             uint64_t refresh_interval)
    : params_(std::move(params)),
      pk_(std::move(pk)),
      cache_(ZincCache::init(pk_, params_, rng)),
      refresh_interval_(refresh_interval) {}

Ciphertext ZincEncryptor::encrypt(const Plaintext& pt, Rng& rng) {
  if (refresh_interval_ != 0 && since_refresh_ == refresh_interval_) {
    cache_ = ZincCache::init(pk_, params_, rng);
    since_refresh_ = 0;
    ++refreshes_;
  }
  ++since_refresh_;
  return zinc_encrypt(pt, cache_, params_, rng);
}

}  // namespace zinc
