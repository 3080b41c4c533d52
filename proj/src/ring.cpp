// Copyright 2026 The Zinc HE Authors.
// SPDX-License-Identifier: Apache-2.0

#include "zinc/ring.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <string>

namespace zinc {

namespace {

std::atomic<uint64_t> g_ntt_forward{0};
std::atomic<uint64_t> g_ntt_inverse{0};
std::atomic<uint64_t> g_poly_mul{0};

// x * w mod q in [0, 2q), with q passed by value so it stays in a register.
inline uint64_t shoup_lazy(uint64_t x, uint64_t w, uint64_t w_shoup, uint64_t q) {
  const uint64_t hi =
      static_cast<uint64_t>((static_cast<unsigned __int128>(x) * w_shoup) >> 64);
  return x * w - hi * q;
}

size_t reverse_bits(size_t x, int bits) {
  size_t r = 0;
  for (int i = 0; i < bits; ++i) {
    r = (r << 1) | (x & 1);
    x >>= 1;
  }
  return r;
}

void check_same_ring(const Poly& a, const Poly& b) {
  if (!a.ring() || !b.ring()) {
    throw std::invalid_argument("polynomial has no ring");
  }
  if (a.ring() != b.ring() && !a.ring()->same_ring(*b.ring())) {
    throw std::invalid_argument("polynomials belong to different rings");
  }
  if (a.size() != b.size()) {
    throw std::invalid_argument("polynomial length mismatch");
  }
}

void check_compatible(const Poly& a, const Poly& b) {
  check_same_ring(a, b);
  if (a.domain() != b.domain()) {
    throw std::invalid_argument(std::string("domain mismatch: ") +
                                to_string(a.domain()) + " vs " +
                                to_string(b.domain()));
  }
}

}  // namespace

const char* to_string(Domain d) {
  return d == Domain::kCoefficient ? "coefficient" : "ntt";
}

std::shared_ptr<const RingParams> RingParams::create(size_t degree,
                                                     uint64_t q) {
  if (degree < 4 || degree > 32768 || (degree & (degree - 1)) != 0) {
    throw std::invalid_argument("ring degree must be a power of two in [4, 32768], got " +
                                std::to_string(degree));
  }
  if (q >= (uint64_t{1} << 62)) {
    throw std::invalid_argument("coefficient modulus must be below 2^62");
  }
  if (!is_prime(q)) {
    throw std::invalid_argument("coefficient modulus " + std::to_string(q) +
                                " is not prime");
  }
  if (q % (2 * degree) != 1) {
    throw std::invalid_argument("coefficient modulus must be 1 mod 2N");
  }
  Modulus mod(q);
  // For 2N a power of two, psi^N == -1 certifies order exactly 2N.
  uint64_t exponent = (q - 1) / (2 * degree);
  for (uint64_t x = 2; x < q; ++x) {
    uint64_t psi = mod.pow(x, exponent);
    if (mod.pow(psi, degree) == q - 1) {
      return std::shared_ptr<const RingParams>(new RingParams(degree, q, psi));
    }
  }
  throw std::logic_error("no primitive 2N-th root of unity found");
}

RingParams::RingParams(size_t degree, uint64_t q, uint64_t psi)
    : degree_(degree), modulus_(q), psi_(psi) {
  log_degree_ = 0;
  while ((size_t{1} << log_degree_) < degree_) ++log_degree_;

  root_powers_.resize(degree_);
  inv_root_powers_.resize(degree_);
  uint64_t psi_inv = modulus_.inv(psi_);
  uint64_t power = 1;
  uint64_t inv_power = 1;
  for (size_t i = 0; i < degree_; ++i) {
    size_t r = reverse_bits(i, log_degree_);
    root_powers_[r] = power;
    inv_root_powers_[r] = inv_power;
    power = modulus_.mul(power, psi_);
    inv_power = modulus_.mul(inv_power, psi_inv);
  }
  root_powers_shoup_.resize(degree_);
  inv_root_powers_shoup_.resize(degree_);
  for (size_t i = 0; i < degree_; ++i) {
    root_powers_shoup_[i] = modulus_.shoup(root_powers_[i]);
    inv_root_powers_shoup_[i] = modulus_.shoup(inv_root_powers_[i]);
  }
  inv_degree_ = modulus_.inv(degree_ % q);
  inv_degree_shoup_ = modulus_.shoup(inv_degree_);
  last_inv_twiddle_ = modulus_.mul(inv_root_powers_[1], inv_degree_);
  last_inv_twiddle_shoup_ = modulus_.shoup(last_inv_twiddle_);
}

// Cooley-Tukey with Harvey's lazy butterflies: values stay in [0, 4q).
// A non-null addend is added during the final reduction.
void RingParams::forward_impl(std::span<uint64_t> a, const uint64_t* addend) const {
  const uint64_t q = modulus_.value();
  const uint64_t two_q = 2 * q;
  const size_t half = degree_ >> 1;
  size_t t = degree_;
  for (size_t m = 1; m < half; m <<= 1) {
    t >>= 1;
    for (size_t i = 0; i < m; ++i) {
      const uint64_t w = root_powers_[m + i];
      const uint64_t w_shoup = root_powers_shoup_[m + i];
      uint64_t* x = a.data() + 2 * i * t;
      uint64_t* y = x + t;
      for (size_t j = 0; j < t; ++j) {
        // min(u, u - 2q) subtracts 2q exactly when u >= 2q, without a branch.
        const uint64_t u = std::min(x[j], x[j] - two_q);
        const uint64_t v = shoup_lazy(y[j], w, w_shoup, q);
        x[j] = u + v;
        y[j] = u - v + two_q;
      }
    }
  }
  // Last stage (t = 1) also brings the outputs from [0, 4q) down to [0, q).
  for (size_t i = 0; i < half; ++i) {
    uint64_t* x = a.data() + 2 * i;
    const uint64_t u = std::min(x[0], x[0] - two_q);
    const uint64_t v = shoup_lazy(x[1], root_powers_[half + i],
                                  root_powers_shoup_[half + i], q);
    uint64_t s = u + v;
    uint64_t d = u - v + two_q;
    s = std::min(s, s - two_q);
    d = std::min(d, d - two_q);
    s = std::min(s, s - q);
    d = std::min(d, d - q);
    if (addend) {
      s += addend[2 * i];
      d += addend[2 * i + 1];
      s = std::min(s, s - q);
      d = std::min(d, d - q);
    }
    x[0] = s;
    x[1] = d;
  }
}

void RingParams::forward_inplace(std::span<uint64_t> a) const {
  forward_impl(a, nullptr);
}

void RingParams::forward_add_inplace(std::span<uint64_t> a,
                                     std::span<const uint64_t> addend) const {
  if (addend.size() != a.size()) {
    throw std::invalid_argument("forward_add: length mismatch");
  }
  forward_impl(a, addend.data());
}

// Gentleman-Sande with lazy butterflies: values stay in [0, 2q). The last
// stage folds in the multiplication by 1/N.
void RingParams::inverse_inplace(std::span<uint64_t> a) const {
  const uint64_t q = modulus_.value();
  const uint64_t two_q = 2 * q;
  size_t t = 1;
  for (size_t m = degree_; m > 2; m >>= 1) {
    const size_t h = m >> 1;
    for (size_t i = 0; i < h; ++i) {
      const uint64_t w = inv_root_powers_[h + i];
      const uint64_t w_shoup = inv_root_powers_shoup_[h + i];
      uint64_t* x = a.data() + 2 * i * t;
      uint64_t* y = x + t;
      for (size_t j = 0; j < t; ++j) {
        const uint64_t u = x[j];
        const uint64_t v = y[j];
        const uint64_t s = u + v;
        x[j] = std::min(s, s - two_q);
        y[j] = shoup_lazy(u - v + two_q, w, w_shoup, q);
      }
    }
    t <<= 1;
  }
  const uint64_t n_inv = inv_degree_;
  const uint64_t n_inv_shoup = inv_degree_shoup_;
  const uint64_t w = last_inv_twiddle_;
  const uint64_t w_shoup = last_inv_twiddle_shoup_;
  uint64_t* x = a.data();
  uint64_t* y = x + t;
  for (size_t j = 0; j < t; ++j) {
    const uint64_t u = x[j];
    const uint64_t v = y[j];
    const uint64_t s = shoup_lazy(u + v, n_inv, n_inv_shoup, q);
    const uint64_t d = shoup_lazy(u - v + two_q, w, w_shoup, q);
    x[j] = std::min(s, s - q);
    y[j] = std::min(d, d - q);
  }
}

Poly::Poly(RingPtr ring, Domain domain)
    : ring_(std::move(ring)), domain_(domain) {
  if (!ring_) throw std::invalid_argument("null ring");
  values_.assign(ring_->degree(), 0);
}

Poly Poly::from_values(RingPtr ring, std::vector<uint64_t> values,
                       Domain domain) {
  if (!ring) throw std::invalid_argument("null ring");
  if (values.size() != ring->degree()) {
    throw std::invalid_argument("expected " + std::to_string(ring->degree()) +
                                " coefficients, got " +
                                std::to_string(values.size()));
  }
  const uint64_t q = ring->q();
  if (std::any_of(values.begin(), values.end(),
                  [q](uint64_t v) { return v >= q; })) {
    throw std::invalid_argument("coefficient out of range [0, q)");
  }
  Poly p;
  p.ring_ = std::move(ring);
  p.values_ = std::move(values);
  p.domain_ = domain;
  return p;
}

Poly Poly::from_signed(RingPtr ring, std::span<const int64_t> values) {
  Poly p(std::move(ring));
  if (values.size() > p.size()) {
    throw std::invalid_argument("more values than ring degree");
  }
  const Modulus& mod = p.ring_->modulus();
  for (size_t i = 0; i < values.size(); ++i) {
    p.values_[i] = mod.from_signed(values[i]);
  }
  return p;
}

Poly Poly::constant(RingPtr ring, uint64_t c) {
  Poly p(std::move(ring));
  p.values_[0] = c % p.ring_->q();
  return p;
}

Poly Poly::monomial(RingPtr ring, size_t power) {
  Poly p(std::move(ring));
  if (power >= p.size()) throw std::invalid_argument("monomial degree >= N");
  p.values_[power] = 1;
  return p;
}

Poly& Poly::add_inplace(const Poly& other) {
  check_compatible(*this, other);
  const uint64_t q = ring_->q();
  const uint64_t* b = other.values_.data();
  uint64_t* a = values_.data();
  for (size_t i = 0; i < values_.size(); ++i) {
    const uint64_t s = a[i] + b[i];
    a[i] = std::min(s, s - q);
  }
  return *this;
}

Poly& Poly::sub_inplace(const Poly& other) {
  check_compatible(*this, other);
  const uint64_t q = ring_->q();
  const uint64_t* b = other.values_.data();
  uint64_t* a = values_.data();
  for (size_t i = 0; i < values_.size(); ++i) {
    const uint64_t d = a[i] - b[i];
    a[i] = std::min(d, d + q);
  }
  return *this;
}

Poly& Poly::negate_inplace() {
  const Modulus& mod = ring_->modulus();
  for (auto& v : values_) v = mod.neg(v);
  return *this;
}

Poly& Poly::scalar_mul_inplace(uint64_t scalar) {
  const Modulus& mod = ring_->modulus();
  scalar = mod.reduce(scalar);
  const uint64_t s_shoup = mod.shoup(scalar);
  for (auto& v : values_) v = mod.mul_shoup(v, scalar, s_shoup);
  return *this;
}

std::vector<int64_t> Poly::centered() const {
  if (domain_ != Domain::kCoefficient) {
    throw std::invalid_argument("centered view requires coefficient domain");
  }
  const Modulus& mod = ring_->modulus();
  std::vector<int64_t> out(values_.size());
  for (size_t i = 0; i < values_.size(); ++i) out[i] = mod.centered(values_[i]);
  return out;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.domain_ != b.domain_ || a.values_ != b.values_) return false;
  if (a.ring_ == b.ring_) return true;
  return a.ring_ && b.ring_ && a.ring_->same_ring(*b.ring_);
}

Poly poly_add(const Poly& a, const Poly& b) {
  Poly r = a;
  r.add_inplace(b);
  return r;
}

Poly poly_sub(const Poly& a, const Poly& b) {
  Poly r = a;
  r.sub_inplace(b);
  return r;
}

Poly poly_negate(const Poly& a) {
  Poly r = a;
  r.negate_inplace();
  return r;
}

Poly poly_scalar_mul(const Poly& a, uint64_t scalar) {
  Poly r = a;
  r.scalar_mul_inplace(scalar);
  return r;
}

void ntt_forward_inplace(Poly& p) {
  if (!p.ring_) throw std::invalid_argument("polynomial has no ring");
  if (p.domain_ != Domain::kCoefficient) {
    throw std::invalid_argument("ntt_forward requires coefficient domain");
  }
  p.ring_->forward_inplace(p.values_);
  p.domain_ = Domain::kNtt;
  g_ntt_forward.fetch_add(1, std::memory_order_relaxed);
}

void ntt_forward_add_inplace(Poly& p, const Poly& addend) {
  if (!p.ring_) throw std::invalid_argument("polynomial has no ring");
  if (p.domain_ != Domain::kCoefficient) {
    throw std::invalid_argument("ntt_forward requires coefficient domain");
  }
  if (addend.domain_ != Domain::kNtt) {
    throw std::invalid_argument("ntt_forward_add: addend must be in ntt domain");
  }
  check_same_ring(p, addend);
  p.ring_->forward_add_inplace(p.values_, addend.values_);
  p.domain_ = Domain::kNtt;
  g_ntt_forward.fetch_add(1, std::memory_order_relaxed);
}

void ntt_inverse_inplace(Poly& p) {
  if (!p.ring_) throw std::invalid_argument("polynomial has no ring");
  if (p.domain_ != Domain::kNtt) {
    throw std::invalid_argument("ntt_inverse requires ntt domain");
  }
  p.ring_->inverse_inplace(p.values_);
  p.domain_ = Domain::kCoefficient;
  g_ntt_inverse.fetch_add(1, std::memory_order_relaxed);
}

Poly ntt_forward(Poly p) {
  ntt_forward_inplace(p);
  return p;
}

Poly ntt_inverse(Poly p) {
  ntt_inverse_inplace(p);
  return p;
}

Poly to_domain(Poly p, Domain domain) {
  if (p.domain() == domain) return p;
  if (domain == Domain::kNtt) {
    ntt_forward_inplace(p);
  } else {
    ntt_inverse_inplace(p);
  }
  return p;
}

namespace {

void pointwise_mul_inplace(Poly& acc, const Poly& b) {
  const Modulus& mod = acc.ring()->modulus();
  auto out = acc.mutable_values();
  auto rhs = b.values();
  for (size_t i = 0; i < out.size(); ++i) out[i] = mod.mul(out[i], rhs[i]);
}

}  // namespace

Poly pointwise_mul(const Poly& a, const Poly& b) {
  check_compatible(a, b);
  if (a.domain() != Domain::kNtt) {
    throw std::invalid_argument("pointwise_mul requires ntt domain");
  }
  Poly r = a;
  pointwise_mul_inplace(r, b);
  return r;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  check_same_ring(a, b);
  Poly product = to_domain(b, Domain::kNtt);
  if (a.domain() == Domain::kNtt) {
    pointwise_mul_inplace(product, a);
  } else {
    pointwise_mul_inplace(product, ntt_forward(a));
  }
  ntt_inverse_inplace(product);
  g_poly_mul.fetch_add(1, std::memory_order_relaxed);
  return product;
}

uint64_t infinity_norm(const Poly& p) {
  if (p.domain() != Domain::kCoefficient) {
    throw std::invalid_argument("infinity_norm requires coefficient domain");
  }
  const Modulus& mod = p.ring()->modulus();
  uint64_t best = 0;
  for (uint64_t v : p.values()) {
    int64_t c = mod.centered(v);
    uint64_t mag = c < 0 ? static_cast<uint64_t>(-c) : static_cast<uint64_t>(c);
    best = std::max(best, mag);
  }
  return best;
}

OpCounts op_counts() {
  return {g_ntt_forward.load(std::memory_order_relaxed),
          g_ntt_inverse.load(std::memory_order_relaxed),
          g_poly_mul.load(std::memory_order_relaxed)};
}

void reset_op_counts() {
  g_ntt_forward.store(0, std::memory_order_relaxed);
  g_ntt_inverse.store(0, std::memory_order_relaxed);
  g_poly_mul.store(0, std::memory_order_relaxed);
}

}  // namespace zinc
