// Copyright 2026 The Zinc HE Authors.
// SPDX-License-Identifier: Apache-2.0

#include "zinc/scheme.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

namespace zinc {

namespace {

void check_variant(Variant got, Variant want, const char* what) {
  if (got != want) {
    throw std::invalid_argument(std::string(what) + ": variant mismatch (" +
                                to_string(got) + " vs " + to_string(want) + ")");
  }
}

void check_binary(const Ciphertext& a, const Ciphertext& b) {
  check_variant(a.variant, b.variant, "ciphertext operation");
  if (a.scale != b.scale) {
    throw std::invalid_argument("ciphertext operation: scale mismatch");
  }
}

int64_t centered_mod(int64_t v, uint64_t t) {
  const int64_t st = static_cast<int64_t>(t);
  int64_t r = v % st;
  if (r < 0) r += st;
  if (r > st / 2) r -= st;
  return r;
}

void check_integer_range(int64_t value, uint64_t t) {
  // Valid plaintexts are the centered residues (-t/2, t/2].
  const int64_t half = static_cast<int64_t>(t / 2);
  const int64_t low = -static_cast<int64_t>((t - 1) / 2);
  if (value < low || value > half) {
    throw std::out_of_range("value " + std::to_string(value) +
                            " outside plaintext range (-t/2, t/2] for t=" +
                            std::to_string(t));
  }
}

int64_t scale_real(double value, const SchemeParams& params) {
  const long double scaled =
      std::nearbyint(static_cast<long double>(value) * params.delta());
  const long double limit = static_cast<long double>(params.q() / 2);
  if (!std::isfinite(static_cast<double>(scaled)) || std::fabs(scaled) >= limit) {
    throw std::out_of_range("value " + std::to_string(value) +
                            " overflows q/2 after scaling by delta");
  }
  return static_cast<int64_t>(scaled);
}

}  // namespace

const char* to_string(Variant v) {
  switch (v) {
    case Variant::kBfv:
      return "bfv";
    case Variant::kBgv:
      return "bgv";
    case Variant::kCkks:
      return "ckks";
  }
  return "?";
}

Variant parse_variant(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (lower == "bfv") return Variant::kBfv;
  if (lower == "bgv") return Variant::kBgv;
  if (lower == "ckks" || lower == "ckks-lite") return Variant::kCkks;
  throw std::invalid_argument("unknown scheme variant '" + std::string(name) + "'");
}

SchemeParams SchemeParams::create(RingPtr ring, Variant variant, uint64_t t,
                                  int delta_log2, double sigma, int kappa) {
  if (!ring) throw std::invalid_argument("null ring");
  SchemeParams p;
  p.ring_ = std::move(ring);
  p.variant_ = variant;
  p.t_ = t;
  p.kappa_ = kappa;
  p.gaussian_ = std::make_shared<const DiscreteGaussian>(sigma);
  const uint64_t q = p.ring_->q();
  switch (variant) {
    case Variant::kBfv:
    case Variant::kBgv:
      if (t < 2 || t >= q) {
        throw std::invalid_argument("plaintext modulus must satisfy 2 <= t < q");
      }
      if (t > (uint64_t{1} << 62)) throw std::invalid_argument("t too large");
      p.delta_ = variant == Variant::kBfv ? q / t : 1;
      p.delta_log2_ = 0;
      break;
    case Variant::kCkks:
      if (delta_log2 < 1 || delta_log2 > 61 ||
          (uint64_t{1} << delta_log2) >= q / 2) {
        throw std::invalid_argument("ckks scale must satisfy 2 <= delta < q/2");
      }
      p.delta_ = uint64_t{1} << delta_log2;
      p.delta_log2_ = delta_log2;
      break;
  }
  return p;
}

void SchemeParams::check_ring(const Poly& p) const {
  if (!p.ring() || (p.ring() != ring_ && !p.ring()->same_ring(*ring_))) {
    throw std::invalid_argument("polynomial does not belong to the scheme ring");
  }
}

std::pair<SecretKey, PublicKey> keygen(const SchemeParams& params, Rng& rng) {
  Poly s = sample_ternary(params.ring(), rng);
  Poly a = sample_uniform(params.ring(), rng);
  Poly e = sample_gaussian(params.ring(), rng, params.gaussian());
  return keygen_with(params, s, a, e);
}

std::pair<SecretKey, PublicKey> keygen_with(const SchemeParams& params,
                                            const Poly& s, const Poly& a,
                                            const Poly& e) {
  for (const Poly* p : {&s, &a, &e}) {
    params.check_ring(*p);
    if (p->domain() != Domain::kCoefficient) {
      throw std::invalid_argument("keygen inputs must be in coefficient domain");
    }
  }
  Poly pk1 = poly_mul(a, s);
  pk1.negate_inplace();
  pk1.add_inplace(poly_scalar_mul(e, params.error_scale()));
  SecretKey sk{s, ntt_forward(s)};
  PublicKey pk{ntt_forward(std::move(pk1)), ntt_forward(a)};
  return {std::move(sk), std::move(pk)};
}

Plaintext encode_integer(int64_t value, const SchemeParams& params) {
  const int64_t one[1] = {value};
  return encode_integers(one, params);
}

Plaintext encode_real(double value, const SchemeParams& params) {
  const double one[1] = {value};
  return encode_reals(one, params);
}

Plaintext encode_integers(std::span<const int64_t> values,
                          const SchemeParams& params) {
  if (values.size() > params.degree()) {
    throw std::invalid_argument("more values than plaintext slots");
  }
  std::vector<int64_t> lifted(values.begin(), values.end());
  if (params.variant() == Variant::kCkks) {
    for (auto& v : lifted) v = scale_real(static_cast<double>(v), params);
    return {Poly::from_signed(params.ring(), lifted), Variant::kCkks,
            static_cast<double>(params.delta())};
  }
  for (int64_t v : lifted) check_integer_range(v, params.t());
  return {Poly::from_signed(params.ring(), lifted), params.variant(), 1.0};
}

Plaintext encode_reals(std::span<const double> values,
                       const SchemeParams& params) {
  check_variant(params.variant(), Variant::kCkks, "encode_reals");
  if (values.size() > params.degree()) {
    throw std::invalid_argument("more values than plaintext slots");
  }
  std::vector<int64_t> scaled(values.size());
  for (size_t i = 0; i < values.size(); ++i) {
    scaled[i] = scale_real(values[i], params);
  }
  return {Poly::from_signed(params.ring(), scaled), Variant::kCkks,
          static_cast<double>(params.delta())};
}

std::vector<int64_t> decode_integers(const Plaintext& pt) {
  std::vector<int64_t> out = pt.m.centered();
  if (pt.variant == Variant::kCkks) {
    for (auto& v : out) {
      v = std::llround(static_cast<double>(v) / pt.scale);
    }
  }
  return out;
}

std::vector<double> decode_reals(const Plaintext& pt) {
  std::vector<int64_t> raw = pt.m.centered();
  std::vector<double> out(raw.size());
  for (size_t i = 0; i < raw.size(); ++i) {
    out[i] = static_cast<double>(raw[i]) / pt.scale;
  }
  return out;
}

int64_t decode_integer(const Plaintext& pt) {
  const int64_t raw = pt.m.ring()->modulus().centered(pt.m[0]);
  if (pt.variant == Variant::kCkks) {
    return std::llround(static_cast<double>(raw) / pt.scale);
  }
  return raw;
}

double decode_real(const Plaintext& pt) {
  const int64_t raw = pt.m.ring()->modulus().centered(pt.m[0]);
  return static_cast<double>(raw) / pt.scale;
}

EncryptionNoise sample_encryption_noise(const SchemeParams& params, Rng& rng) {
  Poly u = sample_ternary(params.ring(), rng);
  Poly e1 = sample_gaussian(params.ring(), rng, params.gaussian());
  Poly e2 = sample_gaussian(params.ring(), rng, params.gaussian());
  return {std::move(u), std::move(e1), std::move(e2)};
}

Poly scaled_message(const Plaintext& pt, const SchemeParams& params) {
  check_variant(pt.variant, params.variant(), "plaintext");
  params.check_ring(pt.m);
  const uint64_t scale = params.message_scale();
  return scale == 1 ? pt.m : poly_scalar_mul(pt.m, scale);
}

Ciphertext encrypt(const Plaintext& pt, const PublicKey& pk,
                   const SchemeParams& params, Rng& rng) {
  Poly c1 = scaled_message(pt, params);
  const Poly u = sample_ternary(params.ring(), rng);
  c1.add_inplace(poly_mul(pk.pk1, u));
  Poly c2 = poly_mul(pk.pk2, u);
  // Same draw order as sample_encryption_noise: u, e1, e2.
  add_gaussian_inplace(c1, rng, params.gaussian(), params.error_scale());
  add_gaussian_inplace(c2, rng, params.gaussian(), params.error_scale());
  return {std::move(c1), std::move(c2), pt.variant, pt.scale};
}

Ciphertext encrypt_with(const Plaintext& pt, const PublicKey& pk,
                        const SchemeParams& params,
                        const EncryptionNoise& noise) {
  const uint64_t es = params.error_scale();
  Poly c1 = poly_mul(pk.pk1, noise.u);
  c1.add_inplace(poly_scalar_mul(noise.e1, es));
  c1.add_inplace(scaled_message(pt, params));
  Poly c2 = poly_mul(pk.pk2, noise.u);
  c2.add_inplace(poly_scalar_mul(noise.e2, es));
  return {std::move(c1), std::move(c2), pt.variant, pt.scale};
}

Poly decrypt_raw(const Ciphertext& ct, const SecretKey& sk) {
  if (ct.c1.domain() != ct.c2.domain()) {
    throw std::invalid_argument("ciphertext components in different domains");
  }
  if (ct.domain() == Domain::kNtt) {
    Poly raw = pointwise_mul(ct.c2, sk.s_ntt);
    raw.add_inplace(ct.c1);
    return ntt_inverse(std::move(raw));
  }
  Poly raw = poly_mul(ct.c2, sk.s_ntt);
  raw.add_inplace(ct.c1);
  return raw;
}

Plaintext decrypt(const Ciphertext& ct, const SecretKey& sk,
                  const SchemeParams& params) {
  check_variant(ct.variant, params.variant(), "decrypt");
  params.check_ring(ct.c1);
  Poly raw = decrypt_raw(ct, sk);
  const Modulus& mod = params.ring()->modulus();
  const uint64_t q = params.q();
  const uint64_t t = params.t();

  switch (params.variant()) {
    case Variant::kBfv: {
      const uint64_t delta = params.delta();
      uint64_t worst = 0;
      for (auto& v : raw.mutable_values()) {
        const uint64_t m =
            static_cast<uint64_t>((static_cast<u128>(t) * v + q / 2) / q) % t;
        const int64_t centered = centered_mod(static_cast<int64_t>(m), t);
        const uint64_t lifted = mod.from_signed(centered);
        const int64_t residual = mod.centered(mod.sub(v, mod.mul(lifted, delta)));
        const uint64_t mag = static_cast<uint64_t>(residual < 0 ? -residual : residual);
        worst = std::max(worst, mag);
        v = lifted;
      }
      if (2 * worst >= delta) {
        throw DecryptionError("bfv decryption failure: residual noise " +
                                  std::to_string(worst) +
                                  " reached delta/2 = " + std::to_string(delta / 2),
                              worst, delta / 2);
      }
      return {std::move(raw), Variant::kBfv, 1.0};
    }
    case Variant::kBgv: {
      for (auto& v : raw.mutable_values()) {
        v = mod.from_signed(centered_mod(mod.centered(v), t));
      }
      return {std::move(raw), Variant::kBgv, 1.0};
    }
    case Variant::kCkks:
      return {std::move(raw), Variant::kCkks, ct.scale};
  }
  throw std::logic_error("unreachable");
}

void add_ct_ct_inplace(Ciphertext& a, const Ciphertext& b) {
  check_binary(a, b);
  a.c1.add_inplace(b.c1);
  a.c2.add_inplace(b.c2);
}

void sub_ct_ct_inplace(Ciphertext& a, const Ciphertext& b) {
  check_binary(a, b);
  a.c1.sub_inplace(b.c1);
  a.c2.sub_inplace(b.c2);
}

Ciphertext add_ct_ct(const Ciphertext& a, const Ciphertext& b) {
  Ciphertext r = a;
  add_ct_ct_inplace(r, b);
  return r;
}

Ciphertext sub_ct_ct(const Ciphertext& a, const Ciphertext& b) {
  Ciphertext r = a;
  sub_ct_ct_inplace(r, b);
  return r;
}

Ciphertext add_ct_pt(const Ciphertext& ct, const Plaintext& pt,
                     const SchemeParams& params) {
  check_variant(ct.variant, pt.variant, "add_ct_pt");
  if (ct.scale != pt.scale) {
    throw std::invalid_argument("add_ct_pt: scale mismatch");
  }
  Ciphertext r = ct;
  r.c1.add_inplace(to_domain(scaled_message(pt, params), ct.domain()));
  return r;
}

Ciphertext to_domain(Ciphertext ct, Domain domain) {
  ct.c1 = to_domain(std::move(ct.c1), domain);
  ct.c2 = to_domain(std::move(ct.c2), domain);
  return ct;
}

uint64_t noise_norm(const Ciphertext& ct, const SecretKey& sk,
                    const Plaintext& expected, const SchemeParams& params) {
  Poly residual = decrypt_raw(ct, sk);
  residual.sub_inplace(scaled_message(expected, params));
  return infinity_norm(residual);
}

}  // namespace zinc
