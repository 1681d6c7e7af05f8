#include "modlie/field.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include "modlie/util.hpp"

namespace modlie {

namespace {

constexpr uint32_t kMaxQ = 1u << 21;  // covers p <= 31, k <= 4 (31^4 = 923521)

// dense polynomial over GF(p), coefficients low-to-high, no trailing zeros
using Poly = std::vector<uint32_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b, uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + uint64_t(a[i]) * b[j]) % p;
  }
  trim(c);
  return c;
}

// a mod m, m monic
Poly poly_mod(Poly a, const Poly& m, uint32_t p) {
  trim(a);
  while (a.size() >= m.size()) {
    uint32_t c = a.back();
    size_t shift = a.size() - m.size();
    if (c) {
      for (size_t i = 0; i < m.size(); ++i) {
        uint64_t sub = uint64_t(c) * m[i] % p;
        uint32_t& t = a[shift + i];
        t = uint32_t((t + p - sub) % p);
      }
    }
    a.pop_back();
    trim(a);
    if (a.size() < m.size()) break;
  }
  return a;
}

Poly poly_powmod(Poly base, uint64_t e, const Poly& m, uint32_t p) {
  Poly r{1};
  base = poly_mod(std::move(base), m, p);
  while (e) {
    if (e & 1) r = poly_mod(poly_mul(r, base, p), m, p);
    base = poly_mod(poly_mul(base, base, p), m, p);
    e >>= 1;
  }
  return r;
}

Poly poly_gcd(Poly a, Poly b, uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    // make b monic for poly_mod
    uint32_t lead = b.back();
    if (lead != 1) {
      // lead^-1 via Fermat
      uint32_t inv = 1, base = lead, e = p - 2;
      while (e) {
        if (e & 1) inv = uint32_t(uint64_t(inv) * base % p);
        base = uint32_t(uint64_t(base) * base % p);
        e >>= 1;
      }
      for (auto& c : b) c = uint32_t(uint64_t(c) * inv % p);
    }
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::vector<uint32_t> prime_factors(uint64_t n) {
  std::vector<uint32_t> f;
  for (uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      f.push_back(uint32_t(d));
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) f.push_back(uint32_t(n));
  return f;
}

bool poly_irreducible(const Poly& f, uint32_t p) {
  // Rabin: x^(p^k) == x mod f, and gcd(x^(p^(k/l)) - x, f) = 1 for primes l | k
  uint32_t k = uint32_t(f.size() - 1);
  Poly x{0, 1};
  uint64_t pk = 1;
  for (uint32_t i = 0; i < k; ++i) pk *= p;
  Poly xp = poly_powmod(x, pk, f, p);
  if (xp != poly_mod(x, f, p)) return false;
  for (uint32_t l : prime_factors(k)) {
    uint64_t e = 1;
    for (uint32_t i = 0; i < k / l; ++i) e *= p;
    Poly g = poly_powmod(x, e, f, p);
    // g - x
    Poly diff = g;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;
    trim(diff);
    Poly d = poly_gcd(f, diff, p);
    if (d.size() > 1) return false;
  }
  return true;
}

bool element_primitive(const Poly& g, const Poly& f, uint32_t p, uint64_t qm1) {
  for (uint32_t l : prime_factors(qm1)) {
    Poly e = poly_powmod(g, qm1 / l, f, p);
    if (e == Poly{1}) return false;
  }
  return !g.empty();
}

uint32_t smallest_primitive_root(uint32_t p) {
  if (p == 2) return 1;
  uint64_t qm1 = p - 1;
  auto fac = prime_factors(qm1);
  for (uint32_t g = 2; g < p; ++g) {
    bool ok = true;
    for (uint32_t l : fac) {
      uint32_t r = 1, b = g;
      uint64_t e = qm1 / l;
      while (e) {
        if (e & 1) r = uint32_t(uint64_t(r) * b % p);
        b = uint32_t(uint64_t(b) * b % p);
        e >>= 1;
      }
      if (r == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  fail("InternalError", "no primitive root mod " + std::to_string(p));
}

}  // namespace

bool is_prime(uint32_t n) {
  if (n < 2) return false;
  for (uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<uint32_t> default_modulus(uint32_t p, uint32_t k) {
  if (k == 1) {
    // x - g for g the smallest primitive root; arithmetic never consults it
    return {(p - smallest_primitive_root(p)) % p, 1};
  }
  uint64_t q = 1;
  for (uint32_t i = 0; i < k; ++i) q *= p;
  // enumerate monic degree-k polynomials by packed value of the non-leading part
  for (uint64_t packed = 0; packed < q; ++packed) {
    Poly f(k + 1, 0);
    uint64_t v = packed;
    for (uint32_t i = 0; i < k; ++i) {
      f[i] = uint32_t(v % p);
      v /= p;
    }
    f[k] = 1;
    if (f[0] == 0) continue;  // reducible (x divides)
    if (!poly_irreducible(f, p)) continue;
    if (!element_primitive(Poly{0, 1}, f, p, q - 1)) continue;
    return f;
  }
  fail("InternalError", "no primitive polynomial found");
}

void Field::build(const FieldSpec& spec) {
  if (!is_prime(spec.p)) fail("InvalidField", "p = " + std::to_string(spec.p) + " is not prime");
  if (spec.k < 1) fail("InvalidField", "k must be >= 1");
  p_ = spec.p;
  k_ = spec.k;
  uint64_t q = 1;
  for (uint32_t i = 0; i < k_; ++i) {
    q *= p_;
    if (q > kMaxQ) fail("FieldTooLarge", "p^k exceeds supported table size");
  }
  q_ = uint32_t(q);
  qm1_ = q_ - 1;
  half_ = qm1_ / 2;

  modulus_ = spec.modulus.empty() ? default_modulus(p_, k_) : spec.modulus;
  if (modulus_.size() != size_t(k_) + 1 || modulus_.back() != 1)
    fail("InvalidField", "modulus must be monic of degree k");
  for (uint32_t c : modulus_)
    if (c >= p_) fail("InvalidField", "modulus coefficient out of range");
  if (k_ > 1 && !poly_irreducible(modulus_, p_)) fail("InvalidField", "modulus is reducible");

  auto unpack = [&](Fel v) {
    Poly g(k_, 0);
    for (uint32_t i = 0; i < k_; ++i) {
      g[i] = v % p_;
      v /= p_;
    }
    trim(g);
    return g;
  };
  auto pack = [&](const Poly& g) {
    Fel v = 0;
    for (size_t i = g.size(); i-- > 0;) v = v * p_ + g[i];
    return v;
  };
  auto packed_add = [&](Fel a, Fel b) {
    Fel v = 0, mult = 1;
    for (uint32_t i = 0; i < k_; ++i) {
      v += ((a % p_ + b % p_) % p_) * mult;
      mult *= p_;
      a /= p_;
      b /= p_;
    }
    return v;
  };

  // pick the fixed generator: x when primitive (always true for the shipped
  // modulus), otherwise the first primitive element in packed order
  Poly gen;
  if (k_ == 1) {
    gen = Poly{smallest_primitive_root(p_)};
  } else if (element_primitive(Poly{0, 1}, modulus_, p_, qm1_)) {
    gen = Poly{0, 1};
  } else {
    for (Fel v = 2; v < q_; ++v) {
      Poly g = unpack(v);
      if (element_primitive(g, modulus_, p_, qm1_)) {
        gen = g;
        break;
      }
    }
    if (gen.empty()) fail("InvalidField", "no primitive element found");
  }

  ex_.assign(qm1_, 0);
  lg_.assign(q_, 0);
  Poly cur{1};
  for (uint32_t i = 0; i < qm1_; ++i) {
    Fel v = pack(cur);
    ex_[i] = v;
    lg_[v] = i;
    cur = poly_mod(poly_mul(cur, gen, p_), modulus_, p_);
  }
  if (cur != Poly{1}) fail("InternalError", "generator order mismatch");
  gen_ = qm1_ == 1 ? 1 : ex_[1];

  zech_.assign(qm1_, kNone);
  for (uint32_t d = 0; d < qm1_; ++d) {
    Fel s = packed_add(1, ex_[d]);
    zech_[d] = s == 0 ? kNone : lg_[s];
  }
}

std::vector<uint32_t> Field::digits(Fel a) const {
  std::vector<uint32_t> d(k_);
  for (uint32_t i = 0; i < k_; ++i) {
    d[i] = a % p_;
    a /= p_;
  }
  return d;
}

Fel Field::from_digits(const std::vector<uint32_t>& d) const {
  Fel v = 0;
  for (size_t i = d.size(); i-- > 0;) v = v * p_ + (d[i] % p_);
  return v;
}

Fel Field::inv(Fel a) const {
  if (a == 0) fail("DivisionByZero", "inverse of zero");
  uint32_t e = lg_[a];
  return ex_[e == 0 ? 0 : qm1_ - e];
}

Fel Field::pow(Fel a, int64_t e) const {
  if (a == 0) {
    if (e <= 0) fail("DivisionByZero", "0 to a non-positive power");
    return 0;
  }
  int64_t m = int64_t(lg_[a]) * (e % int64_t(qm1_)) % int64_t(qm1_);
  if (m < 0) m += qm1_;
  return ex_[m];
}

std::string Field::describe() const {
  std::ostringstream ss;
  ss << "GF(" << q_ << ")";
  if (k_ > 1) {
    ss << " = GF(" << p_ << "^" << k_ << "), modulus";
    for (uint32_t c : modulus_) ss << " " << c;
  }
  return ss.str();
}

static std::map<std::pair<std::pair<uint32_t, uint32_t>, std::vector<uint32_t>>, FieldPtr> g_registry;
static std::mutex g_registry_mutex;

std::shared_ptr<const Field> Field::get(uint32_t p, uint32_t k) { return get(FieldSpec{p, k, {}}); }

std::shared_ptr<const Field> Field::get(const FieldSpec& spec) {
  FieldSpec s = spec;
  if (s.modulus.empty() && s.k >= 1 && is_prime(s.p)) s.modulus = default_modulus(s.p, s.k);
  auto key = std::make_pair(std::make_pair(s.p, s.k), s.modulus);
  std::lock_guard<std::mutex> lock(g_registry_mutex);
  auto it = g_registry.find(key);
  if (it != g_registry.end()) return it->second;
  auto f = std::shared_ptr<Field>(new Field());
  f->build(s);
  g_registry.emplace(key, f);
  return f;
}

}  // namespace modlie
