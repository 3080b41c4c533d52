// Copyright 2026 The Zinc HE Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <memory>

#include "zinc/scheme.hpp"

namespace zinc {

/// A single cached encryption of zero, held in the NTT domain.
///
/// Built once per public key; immutable afterwards and safe to share between
/// threads. Every Zinc ciphertext is this cache plus the message plus two
/// fresh error polynomials.
class ZincCache {
 public:
  /// One vanilla encryption of 0 (two polynomial multiplications), then the
  /// components are moved to the NTT domain.
  static ZincCache init(const PublicKey& pk, const SchemeParams& params,
                        Rng& rng);

  /// Wraps an existing encryption of zero. Used to force the cache in tests.
  static ZincCache from_zero_ciphertext(Ciphertext zero,
                                        const SchemeParams& params);

  const Ciphertext& zero_ciphertext() const { return zero_; }
  Variant variant() const { return zero_.variant; }

 private:
  explicit ZincCache(Ciphertext zero) : zero_(std::move(zero)) {}

  Ciphertext zero_;
};

/// c = zero + m, then c' = ([c1 + s*e1']_q, [c2 + s*e2']_q) with e1', e2'
/// fresh from chi and s = t for BGV, 1 otherwise.
///
/// No polynomial multiplications and exactly two forward NTTs: the message is
/// folded into e1' in the coefficient domain before the transform. The output
/// stays in the NTT domain.
Ciphertext zinc_encrypt(const Plaintext& pt, const ZincCache& cache,
                        const SchemeParams& params, Rng& rng);

/// Same as zinc_encrypt with caller-supplied (unscaled) e1', e2'.
Ciphertext zinc_encrypt_with(const Plaintext& pt, const ZincCache& cache,
                             const SchemeParams& params, const Poly& e1,
                             const Poly& e2);

/// Adds fresh (t-scaled for BGV) Gaussian errors to both components of any
/// ciphertext. Decryption is preserved.
Ciphertext rerandomize(const Ciphertext& ct, const SchemeParams& params,
                       Rng& rng);
Ciphertext rerandomize_with(const Ciphertext& ct, const SchemeParams& params,
                            const Poly& e1, const Poly& e2);

/// Convenience wrapper owning a cache, with an optional refresh every
/// `refresh_interval` encryptions (0 keeps one cache forever).
class ZincEncryptor {
 public:
  ZincEncryptor(SchemeParams params, PublicKey pk, Rng& rng,
                uint64_t refresh_interval = 0);

  Ciphertext encrypt(const Plaintext& pt, Rng& rng);

  const ZincCache& cache() const { return cache_; }
  uint64_t refresh_count() const { return refreshes_; }

 private:
  SchemeParams params_;
  PublicKey pk_;
  ZincCache cache_;
  uint64_t refresh_interval_;
  uint64_t since_refresh_ = 0;
  uint64_t refreshes_ = 0;
};

}  // namespace zinc
