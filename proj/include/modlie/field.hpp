#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace modlie {

/// A field element of GF(p^k), packed as k base-p digits little-endian in the
/// polynomial basis, so values are dense in [0, p^k). This is also the wire
/// encoding used by the GFMAT family of file formats.
using Fel = uint32_t;

struct FieldSpec {
  uint32_t p = 0;
  uint32_t k = 1;
  std::vector<uint32_t> modulus;  // monic, degree k, coefficients low-to-high; empty = shipped default

  bool operator==(const FieldSpec&) const = default;
};

/// Exact GF(p^k) arithmetic through Zech-logarithm tables. Immutable and
/// shareable; obtain instances through Field::get (cached per spec).
///
/// The shipped default modulus for (p, k) is the first monic degree-k
/// polynomial, in increasing packed-value order, that is primitive over
/// GF(p). Primitivity means x itself generates the multiplicative group,
/// which fixes element numbering and makes every run bit-reproducible.
class Field {
public:
  static std::shared_ptr<const Field> get(uint32_t p, uint32_t k = 1);
  static std::shared_ptr<const Field> get(const FieldSpec& spec);

  uint32_t p() const { return p_; }
  uint32_t k() const { return k_; }
  uint32_t q() const { return q_; }
  const std::vector<uint32_t>& modulus() const { return modulus_; }
  FieldSpec spec() const { return FieldSpec{p_, k_, modulus_}; }
  std::string describe() const;  // "GF(25) = GF(5^2), modulus ..."

  bool same(const Field& o) const { return p_ == o.p_ && k_ == o.k_ && modulus_ == o.modulus_; }

  Fel zero() const { return 0; }
  Fel one() const { return 1; }
  /// fixed primitive element (x for k > 1, the chosen primitive root for k = 1)
  Fel generator() const { return gen_; }

  Fel add(Fel a, Fel b) const {
    if (a == 0) return b;
    if (b == 0) return a;
    uint32_t i = lg_[a], j = lg_[b];
    uint32_t d = j >= i ? j - i : j + qm1_ - i;
    uint32_t z = zech_[d];
    if (z == kNone) return 0;
    uint32_t e = i + z;
    return ex_[e >= qm1_ ? e - qm1_ : e];
  }

  Fel neg(Fel a) const {
    if (a == 0 || p_ == 2) return a;
    uint32_t e = lg_[a] + half_;
    return ex_[e >= qm1_ ? e - qm1_ : e];
  }

  Fel sub(Fel a, Fel b) const { return add(a, neg(b)); }

  Fel mul(Fel a, Fel b) const {
    if (a == 0 || b == 0) return 0;
    uint32_t e = lg_[a] + lg_[b];
    return ex_[e >= qm1_ ? e - qm1_ : e];
  }

  Fel inv(Fel a) const;
  Fel div(Fel a, Fel b) const { return mul(a, inv(b)); }
  Fel pow(Fel a, int64_t e) const;
  Fel frobenius(Fel a) const { return pow(a, p_); }

  /// reduce an integer into the prime subfield
  Fel from_int(int64_t v) const {
    int64_t r = v % int64_t(p_);
    if (r < 0) r += p_;
    return Fel(r);
  }

  /// log of a nonzero element w.r.t. the fixed generator
  uint32_t log(Fel a) const { return lg_[a]; }
  Fel exp(uint32_t e) const { return ex_[e % qm1_]; }

  std::vector<uint32_t> digits(Fel a) const;  // k base-p digits, low to high
  Fel from_digits(const std::vector<uint32_t>& d) const;

private:
  Field() = default;
  void build(const FieldSpec& spec);

  static constexpr uint32_t kNone = 0xffffffff;

  uint32_t p_ = 0, k_ = 0, q_ = 0, qm1_ = 0, half_ = 0;
  Fel gen_ = 0;
  std::vector<uint32_t> modulus_;
  std::vector<uint32_t> lg_;    // size q, lg_[0] unused
  std::vector<Fel> ex_;         // size q-1
  std::vector<uint32_t> zech_;  // size q-1; zech_[d] = log(1 + g^d), kNone when 1 + g^d = 0
};

using FieldPtr = std::shared_ptr<const Field>;

/// Shipped default modulus for (p, k): smallest primitive monic polynomial.
std::vector<uint32_t> default_modulus(uint32_t p, uint32_t k);

bool is_prime(uint32_t n);

}  // namespace modlie
