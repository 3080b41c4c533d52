// Copyright 2026 The Zinc HE Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zinc/ring.hpp"
#include "zinc/sampling.hpp"

namespace zinc {

enum class Variant { kBfv, kBgv, kCkks };

const char* to_string(Variant v);
/// Accepts "bfv", "bgv", "ckks" (case-insensitive).
Variant parse_variant(std::string_view name);

/// Raised when a ciphertext's noise has left the decoding radius.
class DecryptionError : public std::runtime_error {
 public:
  DecryptionError(const std::string& what, uint64_t noise, uint64_t limit)
      : std::runtime_error(what), noise_(noise), limit_(limit) {}
  uint64_t noise() const { return noise_; }
  uint64_t limit() const { return limit_; }

 private:
  uint64_t noise_;
  uint64_t limit_;
};

/// Everything that governs keys, encoding and encryption.
///
/// delta is floor(q/t) for BFV, 1 for BGV (the error is scaled by t instead),
/// and 2^delta_log2 for CKKS-lite. kappa is a security label only.
class SchemeParams {
 public:
  static SchemeParams create(RingPtr ring, Variant variant, uint64_t t,
                             int delta_log2, double sigma, int kappa);

  const RingPtr& ring() const { return ring_; }
  size_t degree() const { return ring_->degree(); }
  uint64_t q() const { return ring_->q(); }
  Variant variant() const { return variant_; }
  uint64_t t() const { return t_; }
  uint64_t delta() const { return delta_; }
  int delta_log2() const { return delta_log2_; }
  int kappa() const { return kappa_; }
  double sigma() const { return gaussian_->sigma(); }
  const DiscreteGaussian& gaussian() const { return *gaussian_; }

  /// Factor applied to every error polynomial: t for BGV, 1 otherwise.
  uint64_t error_scale() const { return variant_ == Variant::kBgv ? t_ : 1; }
  /// Factor applied to the message inside c1: delta for BFV, 1 otherwise
  /// (CKKS-lite scales at encode time).
  uint64_t message_scale() const {
    return variant_ == Variant::kBfv ? delta_ : 1;
  }

  /// Throws std::invalid_argument unless the ring matches this one.
  void check_ring(const Poly& p) const;

 private:
  SchemeParams() = default;

  RingPtr ring_;
  Variant variant_ = Variant::kBfv;
  uint64_t t_ = 0;
  uint64_t delta_ = 1;
  int delta_log2_ = 0;
  int kappa_ = 0;
  std::shared_ptr<const DiscreteGaussian> gaussian_;
};

struct SecretKey {
  Poly s;      // coefficient domain, ternary
  Poly s_ntt;  // cached transform used by decryption
};

/// pk1 = [-a*s + e']_q and pk2 = a, both held in the NTT domain.
/// e' is e for BFV/CKKS-lite and t*e for BGV.
struct PublicKey {
  Poly pk1;
  Poly pk2;
};

struct Plaintext {
  Poly m;  // coefficient domain; BFV/BGV values are centered lifts of Z_t
  Variant variant = Variant::kBfv;
  double scale = 1.0;
};

struct Ciphertext {
  Poly c1;
  Poly c2;
  Variant variant = Variant::kBfv;
  double scale = 1.0;

  Domain domain() const { return c1.domain(); }
  friend bool operator==(const Ciphertext&, const Ciphertext&) = default;
};

// Key generation -------------------------------------------------------------

std::pair<SecretKey, PublicKey> keygen(const SchemeParams& params, Rng& rng);

/// Deterministic core of keygen with caller-supplied randomness (s ternary,
/// a uniform, e small). Exposed for tests that force e = 0.
std::pair<SecretKey, PublicKey> keygen_with(const SchemeParams& params,
                                            const Poly& s, const Poly& a,
                                            const Poly& e);

// Encoding -------------------------------------------------------------------

/// BFV/BGV: |value| must lie in (-t/2, t/2]. CKKS-lite: round(value * delta).
/// The value goes in the constant coefficient.
Plaintext encode_integer(int64_t value, const SchemeParams& params);
/// CKKS-lite only.
Plaintext encode_real(double value, const SchemeParams& params);

/// Vector mode: one value per coefficient, up to N values, zero padded.
Plaintext encode_integers(std::span<const int64_t> values,
                          const SchemeParams& params);
Plaintext encode_reals(std::span<const double> values,
                       const SchemeParams& params);

/// Constant coefficient of the plaintext.
int64_t decode_integer(const Plaintext& pt);
double decode_real(const Plaintext& pt);
std::vector<int64_t> decode_integers(const Plaintext& pt);
std::vector<double> decode_reals(const Plaintext& pt);

// Encryption -----------------------------------------------------------------

/// Fresh randomness of one public-key encryption.
struct EncryptionNoise {
  Poly u;   // ternary
  Poly e1;  // Gaussian, unscaled
  Poly e2;  // Gaussian, unscaled
};

EncryptionNoise sample_encryption_noise(const SchemeParams& params, Rng& rng);

/// BFV:  c1 = [pk1*u + e1 + delta*m]_q,  c2 = [pk2*u + e2]_q
/// BGV:  c1 = [pk1*u + t*e1 + m]_q,      c2 = [pk2*u + t*e2]_q
/// CKKS: c1 = [pk1*u + e1 + m]_q,        c2 = [pk2*u + e2]_q  (m pre-scaled)
/// Two polynomial multiplications; the result is in the coefficient domain.
Ciphertext encrypt(const Plaintext& pt, const PublicKey& pk,
                   const SchemeParams& params, Rng& rng);
Ciphertext encrypt_with(const Plaintext& pt, const PublicKey& pk,
                        const SchemeParams& params,
                        const EncryptionNoise& noise);

/// The polynomial actually added to c1 for this plaintext (delta*m for BFV).
Poly scaled_message(const Plaintext& pt, const SchemeParams& params);

// Decryption -----------------------------------------------------------------

/// [c1 + c2*s]_q in the coefficient domain.
Poly decrypt_raw(const Ciphertext& ct, const SecretKey& sk);

/// BFV: round(t*raw/q) mod t, failing if the residual reaches delta/2.
/// BGV: raw mod t. CKKS-lite: raw, with the noise left for decode.
Plaintext decrypt(const Ciphertext& ct, const SecretKey& sk,
                  const SchemeParams& params);

// Homomorphic operations -----------------------------------------------------

Ciphertext add_ct_ct(const Ciphertext& a, const Ciphertext& b);
Ciphertext sub_ct_ct(const Ciphertext& a, const Ciphertext& b);
void add_ct_ct_inplace(Ciphertext& a, const Ciphertext& b);
void sub_ct_ct_inplace(Ciphertext& a, const Ciphertext& b);

/// c1 += scaled m; c2 untouched. No multiplications; no transforms unless the
/// ciphertext is held in the NTT domain.
Ciphertext add_ct_pt(const Ciphertext& ct, const Plaintext& pt,
                     const SchemeParams& params);

/// Ciphertext with both components moved to the requested domain.
Ciphertext to_domain(Ciphertext ct, Domain domain);

/// Infinity norm of [c1 + c2*s - scaled m]_q, centered. Testing oracle.
uint64_t noise_norm(const Ciphertext& ct, const SecretKey& sk,
                    const Plaintext& expected, const SchemeParams& params);

}  // namespace zinc
