// Copyright 2026 The Zinc HE Authors.
// SPDX-License-Identifier: Apache-2.0

#include "zinc/sampling.hpp"

#include <openssl/evp.h>
#include <openssl/rand.h>

#include <cmath>
#include <cstring>
#include <string>
#include <stdexcept>

namespace zinc {

namespace {

void check_ssl(int ok, const char* what) {
  if (ok != 1) throw std::runtime_error(std::string("rng: ") + what + " failed");
}

// First 16 bytes used: SHA-256 of a domain tag and the little-endian seed.
std::array<unsigned char, 32> seed_key(uint64_t seed) {
  unsigned char msg[16] = {'z', 'i', 'n', 'c', '-', 'r', 'n', 'g'};
  for (int i = 0; i < 8; ++i) msg[8 + i] = static_cast<unsigned char>(seed >> (8 * i));
  std::array<unsigned char, 32> digest{};
  unsigned int len = 0;
  check_ssl(EVP_Digest(msg, sizeof msg, digest.data(), &len, EVP_sha256(), nullptr),
            "key derivation");
  return digest;
}

}  // namespace

void Rng::CtxDeleter::operator()(evp_cipher_ctx_st* ctx) const {
  EVP_CIPHER_CTX_free(ctx);
}

Rng::Rng(uint64_t seed, const unsigned char* key)
    : seed_(seed), ctx_(EVP_CIPHER_CTX_new()) {
  if (!ctx_) throw std::runtime_error("rng: cannot allocate cipher context");
  const unsigned char iv[16] = {};
  check_ssl(EVP_EncryptInit_ex(ctx_.get(), EVP_aes_128_ctr(), nullptr, key, iv),
            "cipher init");
}

Rng::Rng(uint64_t seed) : Rng(seed, seed_key(seed).data()) {}

Rng Rng::from_entropy() {
  unsigned char key[16];
  check_ssl(RAND_bytes(key, sizeof key), "entropy");
  Rng rng(0, key);
  OPENSSL_cleanse(key, sizeof key);
  return rng;
}

Rng::Rng(const Rng& other)
    : seed_(other.seed_),
      ctx_(EVP_CIPHER_CTX_new()),
      buffer_(other.buffer_),
      pos_(other.pos_) {
  if (!ctx_) throw std::runtime_error("rng: cannot allocate cipher context");
  check_ssl(EVP_CIPHER_CTX_copy(ctx_.get(), other.ctx_.get()), "copy");
}

Rng& Rng::operator=(const Rng& other) {
  if (this != &other) *this = Rng(other);
  return *this;
}

Rng::~Rng() = default;

void Rng::refill() {
  auto* bytes = reinterpret_cast<unsigned char*>(buffer_.data());
  const int size = static_cast<int>(sizeof buffer_);
  std::memset(bytes, 0, sizeof buffer_);
  int written = 0;
  check_ssl(EVP_EncryptUpdate(ctx_.get(), bytes, &written, bytes, size),
            "keystream");
  pos_ = 0;
}

namespace {

long double normal_cdf(long double x) {
  return 0.5L * std::erfc(-x / std::sqrt(2.0L));
}

}  // namespace

DiscreteGaussian::DiscreteGaussian(double sigma) : sigma_(sigma) {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw std::invalid_argument("gaussian sigma must be positive");
  }
  const long double s = sigma;
  const long double cut = kTailCutSigmas * s;
  bound_ = static_cast<int64_t>(std::floor(cut + 0.5L));
  if (bound_ > (int64_t{1} << 20)) {
    throw std::invalid_argument("gaussian sigma too large to tabulate");
  }
  const size_t support = static_cast<size_t>(2 * bound_ + 1);

  // P(round(X) = k | |X| <= cut), rounding half away from zero is measure-zero.
  const long double mass = normal_cdf(cut / s) - normal_cdf(-cut / s);
  pmf_.resize(support);
  std::vector<long double> cdf(support);
  long double running = 0.0L;
  for (size_t i = 0; i < support; ++i) {
    const long double k = static_cast<long double>(i) - bound_;
    const long double lo = std::max(k - 0.5L, -cut);
    const long double hi = std::min(k + 0.5L, cut);
    const long double p =
        hi > lo ? (normal_cdf(hi / s) - normal_cdf(lo / s)) / mass : 0.0L;
    pmf_[i] = static_cast<double>(p);
    running += p;
    cdf[i] = running;
  }

  constexpr long double kTwo64 = 18446744073709551616.0L;
  thresholds_.resize(support);
  for (size_t i = 0; i < support; ++i) {
    const long double scaled = std::floor(cdf[i] / running * kTwo64);
    thresholds_[i] = scaled >= kTwo64 ? ~uint64_t{0}
                                      : static_cast<uint64_t>(scaled);
  }
  thresholds_.back() = ~uint64_t{0};

  // guide_[b] = first index whose threshold exceeds b * 2^56.
  size_t k = 0;
  for (uint32_t b = 0; b < guide_.size(); ++b) {
    const uint64_t floor_value = static_cast<uint64_t>(b) << 56;
    while (k + 1 < support && thresholds_[k] <= floor_value) ++k;
    guide_[b] = static_cast<uint32_t>(k);
  }

  fine_guide_.resize(size_t{1} << kGuideBits);
  size_t first = 0;
  size_t last = 0;
  for (uint64_t h = 0; h < fine_guide_.size(); ++h) {
    const uint64_t lo = h << (64 - kGuideBits);
    const uint64_t hi = lo | (~uint64_t{0} >> kGuideBits);
    while (first + 1 < support && thresholds_[first] <= lo) ++first;
    while (last + 1 < support && thresholds_[last] <= hi) ++last;
    fine_guide_[h] = first == last ? static_cast<int32_t>(first)
                                   : -static_cast<int32_t>(first) - 1;
  }
}

double DiscreteGaussian::probability(int64_t k) const {
  if (k < -bound_ || k > bound_) return 0.0;
  return pmf_[static_cast<size_t>(k + bound_)];
}

Poly sample_uniform(const RingPtr& ring, Rng& rng) {
  Poly p(ring);
  const uint64_t q = ring->q();
  const int bits = 64 - __builtin_clzll(q - 1);
  const uint64_t mask = bits >= 64 ? ~uint64_t{0} : (uint64_t{1} << bits) - 1;
  for (auto& v : p.mutable_values()) {
    uint64_t x;
    do {
      x = rng.next() & mask;
    } while (x >= q);
    v = x;
  }
  return p;
}

Poly sample_ternary(const RingPtr& ring, Rng& rng) {
  Poly p(ring);
  const uint64_t q_minus_one = ring->q() - 1;
  const uint64_t lookup[3] = {q_minus_one, 0, 1};
  // A byte below 3^5 = 243 is five independent uniform trits.
  const std::span<uint64_t> values = p.mutable_values();
  const size_t n = values.size();
  size_t i = 0;
  while (i < n) {
    uint64_t word = rng.next();
    for (int b = 0; b < 8 && i < n; ++b, word >>= 8) {
      uint32_t byte = static_cast<uint32_t>(word & 0xff);
      if (byte >= 243) continue;
      for (int d = 0; d < 5 && i < n; ++d, byte /= 3) values[i++] = lookup[byte % 3];
    }
  }
  return p;
}

Poly sample_gaussian(const RingPtr& ring, Rng& rng,
                     const DiscreteGaussian& dist, uint64_t scale) {
  Poly p(ring);
  add_gaussian_inplace(p, rng, dist, scale);
  return p;
}

Poly sample_gaussian(const RingPtr& ring, Rng& rng, double sigma) {
  return sample_gaussian(ring, rng, DiscreteGaussian(sigma));
}

void add_gaussian_inplace(Poly& p, Rng& rng, const DiscreteGaussian& dist,
                          uint64_t scale) {
  if (p.domain() != Domain::kCoefficient) {
    throw std::invalid_argument("gaussian noise is added in coefficient domain");
  }
  const Modulus& mod = p.ring()->modulus();
  const uint64_t q = mod.value();
  scale = mod.reduce(scale);
  const std::span<uint64_t> values = p.mutable_values();
  if (scale == 1) {
    size_t i = 0;
    dist.generate(rng, values.size(), [&](int64_t e) {
      // |e| < q: lift e to [0, q), then one conditional subtraction.
      uint64_t r = values[i] + static_cast<uint64_t>(e) + (e < 0 ? q : 0);
      values[i++] = r >= q ? r - q : r;
    });
    return;
  }
  const uint64_t neg_scale = mod.neg(scale);
  size_t i = 0;
  dist.generate(rng, values.size(), [&](int64_t e) {
    const uint64_t magnitude = static_cast<uint64_t>(e < 0 ? -e : e);
    const uint64_t term = mod.mul(magnitude, e < 0 ? neg_scale : scale);
    values[i] = mod.add(values[i], term);
    ++i;
  });
}

}  // namespace zinc
