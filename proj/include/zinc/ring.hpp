// Copyright 2026 The Zinc HE Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "zinc/modarith.hpp"

namespace zinc {

/// Representation of a ring element: plain coefficients, or the evaluations
/// produced by the negacyclic NTT (stored in bit-reversed order).
enum class Domain { kCoefficient, kNtt };

const char* to_string(Domain d);

/// Parameters of Z_q[X]/(X^N + 1) together with the precomputed negacyclic
/// NTT tables. Immutable once built; share through RingPtr.
class RingParams {
 public:
  /// Validates N (power of two in [4, 32768]), q (prime, q = 1 mod 2N) and
  /// derives a primitive 2N-th root of unity.
  static std::shared_ptr<const RingParams> create(size_t degree, uint64_t q);

  size_t degree() const { return degree_; }
  const Modulus& modulus() const { return modulus_; }
  uint64_t q() const { return modulus_.value(); }
  uint64_t psi() const { return psi_; }

  /// In-place transforms on raw coefficient buffers of length N, in [0, q).
  /// These do not touch the operation counters; Poly-level calls do.
  void forward_inplace(std::span<uint64_t> values) const;
  /// values <- NTT(values) + addend, with addend already in [0, q).
  void forward_add_inplace(std::span<uint64_t> values,
                           std::span<const uint64_t> addend) const;
  void inverse_inplace(std::span<uint64_t> values) const;

  bool same_ring(const RingParams& other) const {
    return degree_ == other.degree_ && modulus_ == other.modulus_;
  }

 private:
  RingParams(size_t degree, uint64_t q, uint64_t psi);
  void forward_impl(std::span<uint64_t> values, const uint64_t* addend) const;

  size_t degree_;
  int log_degree_;
  Modulus modulus_;
  uint64_t psi_;
  // Powers of psi (resp. psi^-1) in bit-reversed order, with Shoup companions.
  std::vector<uint64_t> root_powers_;
  std::vector<uint64_t> root_powers_shoup_;
  std::vector<uint64_t> inv_root_powers_;
  std::vector<uint64_t> inv_root_powers_shoup_;
  uint64_t inv_degree_;
  uint64_t inv_degree_shoup_;
  uint64_t last_inv_twiddle_;  // inv_root_powers_[1] / N
  uint64_t last_inv_twiddle_shoup_;
};

using RingPtr = std::shared_ptr<const RingParams>;

/// An element of Z_q[X]/(X^N + 1), tagged with its domain.
///
/// Coefficients are stored in [0, q); the centered view is computed on demand.
class Poly {
 public:
  Poly() = default;
  /// The zero polynomial.
  explicit Poly(RingPtr ring, Domain domain = Domain::kCoefficient);

  /// Throws std::invalid_argument if the length is not N or a value is >= q.
  static Poly from_values(RingPtr ring, std::vector<uint64_t> values,
                          Domain domain = Domain::kCoefficient);
  /// Coefficient-domain polynomial from signed integers (len <= N, zero padded).
  static Poly from_signed(RingPtr ring, std::span<const int64_t> values);
  /// The constant polynomial c.
  static Poly constant(RingPtr ring, uint64_t c);
  /// X^power for 0 <= power < N.
  static Poly monomial(RingPtr ring, size_t power);

  const RingPtr& ring() const { return ring_; }
  Domain domain() const { return domain_; }
  size_t size() const { return values_.size(); }
  std::span<const uint64_t> values() const { return values_; }
  uint64_t operator[](size_t i) const { return values_[i]; }

  /// Raw mutable access for kernels that keep values in [0, q).
  std::span<uint64_t> mutable_values() { return values_; }

  Poly& add_inplace(const Poly& other);
  Poly& sub_inplace(const Poly& other);
  Poly& negate_inplace();
  Poly& scalar_mul_inplace(uint64_t scalar);

  /// Centered representatives in (-q/2, q/2]. Coefficient domain only.
  std::vector<int64_t> centered() const;

  friend bool operator==(const Poly& a, const Poly& b);

 private:
  friend void ntt_forward_inplace(Poly& p);
  friend void ntt_forward_add_inplace(Poly& p, const Poly& addend);
  friend void ntt_inverse_inplace(Poly& p);

  RingPtr ring_;
  std::vector<uint64_t> values_;
  Domain domain_ = Domain::kCoefficient;
};

Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_negate(const Poly& a);
Poly poly_scalar_mul(const Poly& a, uint64_t scalar);

/// Negacyclic NTT. Forward requires the coefficient domain, inverse the NTT
/// domain; each call bumps the process-wide NTT counter.
Poly ntt_forward(Poly p);
Poly ntt_inverse(Poly p);
void ntt_forward_inplace(Poly& p);
void ntt_inverse_inplace(Poly& p);
/// p <- NTT(p) + addend in one pass; addend must be in the NTT domain. Counts
/// as one forward NTT.
void ntt_forward_add_inplace(Poly& p, const Poly& addend);

/// Converts to the requested domain, transforming only if needed.
Poly to_domain(Poly p, Domain domain);

/// Pointwise product of two NTT-domain polynomials.
Poly pointwise_mul(const Poly& a, const Poly& b);

/// Product in Z_q[X]/(X^N + 1). Operands may be in either domain; only
/// coefficient-domain operands are transformed. Result is in the coefficient
/// domain. Counts as one polynomial multiplication.
Poly poly_mul(const Poly& a, const Poly& b);

/// max_i |c_i| over centered coefficients. Coefficient domain only.
uint64_t infinity_norm(const Poly& p);

/// Process-wide operation statistics used to audit encryption cost.
struct OpCounts {
  uint64_t ntt_forward = 0;
  uint64_t ntt_inverse = 0;
  uint64_t poly_mul = 0;

  uint64_t ntt_total() const { return ntt_forward + ntt_inverse; }
  OpCounts operator-(const OpCounts& o) const {
    return {ntt_forward - o.ntt_forward, ntt_inverse - o.ntt_inverse,
            poly_mul - o.poly_mul};
  }
  friend bool operator==(const OpCounts&, const OpCounts&) = default;
};

OpCounts op_counts();
void reset_op_counts();

}  // namespace zinc
