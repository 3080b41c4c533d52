// Copyright 2026 The Zinc HE Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

#include "zinc/ring.hpp"

struct evp_cipher_ctx_st;

namespace zinc {

/// AES-128 in counter mode over a buffered keystream. Rng(seed) derives the
/// key from SHA-256 of the seed, so equal seeds give equal streams (tests and
/// benchmarks); from_entropy() keys from the OS generator.
///
/// Satisfies UniformRandomBitGenerator. Single owner: threads that sample in
/// parallel need their own handles.
class Rng {
 public:
  using result_type = uint64_t;

  explicit Rng(uint64_t seed);
  static Rng from_entropy();

  Rng(const Rng& other);
  Rng& operator=(const Rng& other);
  Rng(Rng&&) noexcept = default;
  Rng& operator=(Rng&&) noexcept = default;
  ~Rng();

  uint64_t seed() const { return seed_; }
  uint64_t next() {
    if (pos_ == buffer_.size()) refill();
    return buffer_[pos_++];
  }
  result_type operator()() { return next(); }
  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }

 private:
  struct CtxDeleter {
    void operator()(evp_cipher_ctx_st* ctx) const;
  };
  Rng(uint64_t seed, const unsigned char* key);
  void refill();

  uint64_t seed_;
  std::unique_ptr<evp_cipher_ctx_st, CtxDeleter> ctx_;
  std::array<uint64_t, 1024> buffer_;
  size_t pos_ = 1024;
};

inline constexpr double kDefaultSigma = 3.2;
inline constexpr double kTailCutSigmas = 6.0;

/// Integer Gaussian: a continuous N(0, sigma^2) sample rejected outside
/// +/- 6 sigma and rounded to the nearest integer.
///
/// The distribution of that procedure is tabulated once as a 64-bit
/// inverse CDF. sample() spends one 64-bit word per draw; generate() reads
/// the top 12 bits of the uniform first and fetches the remaining bits only
/// when those 12 do not settle the outcome, so five draws usually share one
/// word. Both realize the same 64-bit table exactly.
class DiscreteGaussian {
 public:
  explicit DiscreteGaussian(double sigma = kDefaultSigma);

  double sigma() const { return sigma_; }
  /// Largest |k| with non-zero probability.
  int64_t tail_bound() const { return bound_; }
  /// Probability of k under the tabulated distribution.
  double probability(int64_t k) const;

  int64_t sample(Rng& rng) const {
    const uint64_t u = rng.next();
    size_t k = guide_[u >> 56];
    while (k + 1 < thresholds_.size() && u >= thresholds_[k]) ++k;
    return static_cast<int64_t>(k) - bound_;
  }

  /// Calls sink(k) for n independent draws.
  template <typename Sink>
  void generate(Rng& rng, size_t n, Sink&& sink) const {
    constexpr size_t kChunks = 64 / kGuideBits;
    size_t i = 0;
    for (; i + kChunks <= n; i += kChunks) {
      uint64_t word = rng.next();
      for (size_t c = 0; c < kChunks; ++c) {
        sink(draw_head(rng, word));
      }
    }
    if (i < n) {
      uint64_t word = rng.next();
      for (; i < n; ++i) sink(draw_head(rng, word));
    }
  }

 private:
  // Consumes the top kGuideBits of word, plus a fresh word on a straddle.
  int64_t draw_head(Rng& rng, uint64_t& word) const {
    const uint64_t head = word >> (64 - kGuideBits);
    word <<= kGuideBits;
    int32_t k = fine_guide_[head];
    if (k < 0) [[unlikely]] {
      const uint64_t u = (head << (64 - kGuideBits)) | (rng.next() >> kGuideBits);
      size_t j = static_cast<size_t>(-k - 1);
      while (j + 1 < thresholds_.size() && u >= thresholds_[j]) ++j;
      k = static_cast<int32_t>(j);
    }
    return static_cast<int64_t>(k) - bound_;
  }

  double sigma_;
  int64_t bound_;
  std::vector<double> pmf_;
  // thresholds_[k] = floor(2^64 * CDF(k - bound)); the final entry is implied 2^64.
  std::vector<uint64_t> thresholds_;
  std::array<uint32_t, 256> guide_{};
  // Outcome for each 12-bit prefix, or -(first candidate + 1) when the
  // prefix straddles a threshold.
  static constexpr int kGuideBits = 12;
  std::vector<int32_t> fine_guide_;
};

/// Each coefficient i.i.d. uniform in [0, q).
Poly sample_uniform(const RingPtr& ring, Rng& rng);

/// Each coefficient i.i.d. uniform over {-1, 0, 1}, stored as {q-1, 0, 1}.
Poly sample_ternary(const RingPtr& ring, Rng& rng);

/// Each coefficient an independent integer Gaussian reduced mod q. The scale
/// argument multiplies every sample (BGV draws t * e in one pass).
Poly sample_gaussian(const RingPtr& ring, Rng& rng,
                     const DiscreteGaussian& dist, uint64_t scale = 1);

/// Convenience overload that tabulates the distribution for sigma.
Poly sample_gaussian(const RingPtr& ring, Rng& rng,
                     double sigma = kDefaultSigma);

/// Adds scale * (fresh Gaussian sample) to every coefficient of a
/// coefficient-domain polynomial, without materializing the sample.
void add_gaussian_inplace(Poly& p, Rng& rng, const DiscreteGaussian& dist,
                          uint64_t scale = 1);

}  // namespace zinc
