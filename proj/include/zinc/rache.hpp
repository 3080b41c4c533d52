// Copyright 2026 The Zinc HE Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "zinc/scheme.hpp"

namespace zinc {

/// How pivot values r^i are checked against the plaintext space.
enum class PivotRange {
  /// Every r^i must be an encodable plaintext (r^(n-1) <= t/2, or
  /// r^(n-1) * delta < q/2 for CKKS-lite).
  kStrict,
  /// BFV/BGV only: pivots encrypt r^i mod t. The randomizer still nets to
  /// zero because r * (r^(i-1) mod t) == r^i (mod t). Lets a pivot sweep
  /// exceed the bit width of t.
  kModular,
};

/// Radix-pivot cache of the Rache baseline: pivots[i] = Enc(r^i).
class RacheCache {
 public:
  RacheCache(uint64_t radix, std::vector<Ciphertext> pivots,
             PivotRange range, uint64_t max_message);

  uint64_t radix() const { return radix_; }
  size_t size() const { return pivots_.size(); }
  const std::vector<Ciphertext>& pivots() const { return pivots_; }
  const Ciphertext& pivot(size_t i) const { return pivots_.at(i); }
  PivotRange range() const { return range_; }

  /// Largest m whose base-r digits fit in the cache and whose value is encodable.
  uint64_t max_message() const { return max_message_; }

 private:
  uint64_t radix_;
  std::vector<Ciphertext> pivots_;
  PivotRange range_;
  uint64_t max_message_;
};

/// floor(log_r(2^kappa - 1)): the pivot count that covers a kappa-bit space.
size_t default_pivot_count(int kappa, uint64_t radix = 2);

/// n fresh encryptions Enc(r^0), ..., Enc(r^(n-1)).
RacheCache rache_init(const PublicKey& pk, const SchemeParams& params,
                      uint64_t radix, size_t count, Rng& rng,
                      PivotRange range = PivotRange::kStrict);

/// Little-endian base-r digits; empty for m = 0.
std::vector<uint32_t> radix_decompose(int64_t m, uint64_t radix);

/// Deterministic part: sum over i of digit_i copies of pivots[i].
Ciphertext rache_construct(int64_t m, const RacheCache& cache,
                           const SchemeParams& params);

/// Random encryption of zero: for each pivot, on a fair coin, add pivots[i]
/// and subtract pivots[i-1] r times (for i = 0, subtract pivots[0] once).
Ciphertext rache_randomizer(const RacheCache& cache, const SchemeParams& params,
                            Rng& rng);

/// rache_construct(m) + rache_randomizer().
Ciphertext rache_encrypt(int64_t m, const RacheCache& cache,
                         const SchemeParams& params, Rng& rng);

}  // namespace zinc
