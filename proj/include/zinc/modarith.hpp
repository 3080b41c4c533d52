// Copyright 2026 The Zinc HE Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

namespace zinc {

using u128 = unsigned __int128;

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(uint64_t n);

/// A word-sized modulus with Barrett and Shoup reduction helpers.
///
/// Values are kept in [0, q). The modulus must satisfy 2 <= q < 2^62 so that
/// the lazy NTT butterflies can hold values up to 4q in a 64-bit word.
class Modulus {
 public:
  Modulus() = default;
  explicit Modulus(uint64_t q);

  uint64_t value() const { return q_; }

  uint64_t add(uint64_t a, uint64_t b) const {
    uint64_t r = a + b;
    return r >= q_ ? r - q_ : r;
  }
  uint64_t sub(uint64_t a, uint64_t b) const {
    return a >= b ? a - b : a + q_ - b;
  }
  uint64_t neg(uint64_t a) const { return a == 0 ? 0 : q_ - a; }

  /// Barrett reduction of a 128-bit product.
  uint64_t reduce128(u128 x) const {
    // floor(x * ratio / 2^128), ratio = floor(2^128 / q); error < 3q.
    uint64_t x_lo = static_cast<uint64_t>(x);
    uint64_t x_hi = static_cast<uint64_t>(x >> 64);
    u128 lo_lo = static_cast<u128>(x_lo) * ratio_lo_;
    u128 lo_hi = static_cast<u128>(x_lo) * ratio_hi_;
    u128 hi_lo = static_cast<u128>(x_hi) * ratio_lo_;
    u128 mid = (lo_lo >> 64) + static_cast<uint64_t>(lo_hi) +
               static_cast<uint64_t>(hi_lo);
    uint64_t quot = x_hi * ratio_hi_ + static_cast<uint64_t>(lo_hi >> 64) +
                    static_cast<uint64_t>(hi_lo >> 64) +
                    static_cast<uint64_t>(mid >> 64);
    uint64_t r = x_lo - quot * q_;
    while (r >= q_) r -= q_;
    return r;
  }

  uint64_t reduce(uint64_t a) const { return a % q_; }

  uint64_t mul(uint64_t a, uint64_t b) const {
    return reduce128(static_cast<u128>(a) * b);
  }

  uint64_t pow(uint64_t base, uint64_t exp) const;
  /// Inverse via Fermat; q must be prime.
  uint64_t inv(uint64_t a) const;

  /// Maps a signed integer into [0, q).
  uint64_t from_signed(int64_t v) const {
    if (v >= 0) return static_cast<uint64_t>(v) % q_;
    uint64_t m = static_cast<uint64_t>(-(v + 1)) % q_;  // avoids INT64_MIN overflow
    return q_ - 1 - m;
  }

  /// Centered representative in (-q/2, q/2].
  int64_t centered(uint64_t a) const {
    return a > q_ / 2 ? static_cast<int64_t>(a) - static_cast<int64_t>(q_)
                      : static_cast<int64_t>(a);
  }

  /// floor(w * 2^64 / q), the companion constant for Shoup multiplication.
  uint64_t shoup(uint64_t w) const {
    return static_cast<uint64_t>((static_cast<u128>(w) << 64) / q_);
  }

  /// w * x mod q in [0, 2q), given w_shoup = shoup(w). Valid for any 64-bit x.
  uint64_t mul_shoup_lazy(uint64_t x, uint64_t w, uint64_t w_shoup) const {
    uint64_t hi = static_cast<uint64_t>((static_cast<u128>(x) * w_shoup) >> 64);
    return x * w - hi * q_;
  }
  uint64_t mul_shoup(uint64_t x, uint64_t w, uint64_t w_shoup) const {
    uint64_t r = mul_shoup_lazy(x, w, w_shoup);
    return r >= q_ ? r - q_ : r;
  }

  friend bool operator==(const Modulus& a, const Modulus& b) {
    return a.q_ == b.q_;
  }

 private:
  uint64_t q_ = 0;
  uint64_t ratio_lo_ = 0;
  uint64_t ratio_hi_ = 0;
};

}  // namespace zinc
