// Copyright 2026 The Zinc HE Authors.
// SPDX-License-Identifier: Apache-2.0

#include "zinc/modarith.hpp"

#include <stdexcept>

namespace zinc {

namespace {

uint64_t mulmod_slow(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>(static_cast<u128>(a) * b % m);
}

uint64_t powmod_slow(uint64_t base, uint64_t exp, uint64_t m) {
  uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod_slow(result, base, m);
    base = mulmod_slow(base, base, m);
    exp >>= 1;
  }
  return result;
}

}  // namespace

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These twelve bases are sufficient for n < 3.3 * 10^24.
  for (uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    uint64_t x = powmod_slow(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod_slow(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Modulus::Modulus(uint64_t q) : q_(q) {
  if (q < 2 || q >= (uint64_t{1} << 62)) {
    throw std::invalid_argument("modulus must lie in [2, 2^62)");
  }
  // floor(2^128 / q) computed as floor((2^128 - 1) / q), equal unless q | 2^128.
  u128 ratio = ~u128{0} / q;
  if ((q & (q - 1)) == 0) ratio += 1;
  ratio_lo_ = static_cast<uint64_t>(ratio);
  ratio_hi_ = static_cast<uint64_t>(ratio >> 64);
}

uint64_t Modulus::pow(uint64_t base, uint64_t exp) const {
  uint64_t result = 1 % q_;
  base %= q_;
  while (exp > 0) {
    if (exp & 1) result = mul(result, base);
    base = mul(base, base);
    exp >>= 1;
  }
  return result;
}

uint64_t Modulus::inv(uint64_t a) const {
  if (a % q_ == 0) throw std::domain_error("zero has no inverse");
  return pow(a, q_ - 2);
}

}  // namespace zinc
