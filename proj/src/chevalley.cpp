#include <map>

#include "modlie/liealg.hpp"
#include "modlie/util.hpp"

namespace modlie {

namespace {

// Integer Chevalley structure constants N(x, y) for [e_x, e_y] = N e_{x+y}.
// Base values come from the extraspecial pairs (lexicographically least
// first component in the height-then-lex root order, sign +(p+1)); everything
// else follows from antisymmetry, N(-x,-y) = -N(x,y), the zero-sum rotation
// rule, and the Jacobi identity for the remaining special pairs.
class ChevalleyZ {
public:
  explicit ChevalleyZ(const RootSystem& R) : R_(R) {
    np_ = R.num_positive;
    // process positive roots by increasing height (index order)
    for (uint32_t g = 0; g < np_; ++g) {
      // decompositions g = x + y with x, y positive, x < y in index order
      std::vector<std::pair<uint32_t, uint32_t>> decomps;
      for (uint32_t x = 0; x < np_; ++x) {
        int32_t y = R_.index.count(diff(g, x)) ? int32_t(R_.index.at(diff(g, x))) : -1;
        if (y >= 0 && uint32_t(y) < np_ && x < uint32_t(y)) decomps.emplace_back(x, uint32_t(y));
      }
      if (decomps.empty()) continue;  // simple root
      // extraspecial pair: minimal first component
      auto [a, b] = decomps.front();
      npos_[{a, b}] = int64_t(R_.string_down(a, b)) + 1;
      for (size_t t = 1; t < decomps.size(); ++t) {
        auto [xi, eta] = decomps[t];
        npos_[{xi, eta}] = special_pair_value(g, a, b, xi, eta);
      }
    }
  }

  // N for arbitrary root indices whose sum is a root
  int64_t n(uint32_t i, uint32_t j) const {
    bool ineg = i >= np_, jneg = j >= np_;
    if (!ineg && !jneg) {
      if (i == j) fail("InternalError", "N(x,x) requested");
      if (i > j) return -n(j, i);
      auto it = npos_.find({i, j});
      if (it == npos_.end()) fail("InternalError", "positive pair not tabulated");
      return it->second;
    }
    if (ineg && jneg) return -n(i - np_, j - np_);
    if (ineg) return -n(j, i);
    // i positive, j negative
    int32_t s = R_.sum_index(i, j);
    if (s < 0) fail("InternalError", "sum is not a root");
    uint32_t z = uint32_t(R_.negative_index(uint32_t(s)));
    // x + y + z = 0 with x = i, y = j
    if (uint32_t(s) < np_) {
      // z negative: pair (y, z) is same-sign
      return div_exact(n(j, z) * R_.inner(z, z), R_.inner(i, i));
    }
    // z positive: pair (z, x) is same-sign
    return div_exact(n(z, i) * R_.inner(z, z), R_.inner(j, j));
  }

private:
  std::vector<int32_t> diff(uint32_t g, uint32_t x) const {
    std::vector<int32_t> v(R_.ambient);
    for (uint32_t t = 0; t < R_.ambient; ++t) v[t] = R_.roots[g][t] - R_.roots[x][t];
    return v;
  }

  static int64_t div_exact(int64_t a, int64_t b) {
    if (b == 0 || a % b) fail("InternalError", "non-exact division in Chevalley constants");
    return a / b;
  }

  // Jacobi on (e_a, e_b, e_{-xi}) determines the special pair (xi, eta)
  int64_t special_pair_value(uint32_t g, uint32_t a, uint32_t b, uint32_t xi, uint32_t eta) {
    uint32_t nxi = xi + np_;
    int64_t t2 = 0, t3 = 0;
    int32_t bmx = R_.sum_index(b, nxi);
    if (bmx >= 0) t2 = n(b, nxi) * n(uint32_t(bmx), a);
    int32_t amx = R_.sum_index(a, nxi);
    if (amx >= 0) t3 = n(nxi, a) * n(uint32_t(amx), b);
    int64_t nab = npos_.at({a, b});
    // N(xi, eta) = (g,g)/(eta,eta) * (t2 + t3) / N(a, b)
    return div_exact(div_exact((t2 + t3) * R_.inner(g, g), R_.inner(eta, eta)), nab);
  }

  const RootSystem& R_;
  uint32_t np_ = 0;
  std::map<std::pair<uint32_t, uint32_t>, int64_t> npos_;
};

struct ZTable {
  uint32_t rank = 0, nroots = 0, dim = 0;
  std::vector<int64_t> c;  // flattened like StructureConstants

  int64_t get(uint32_t i, uint32_t j, uint32_t m) const { return c[(size_t(i) * dim + j) * dim + m]; }
  void set(uint32_t i, uint32_t j, uint32_t m, int64_t v) { c[(size_t(i) * dim + j) * dim + m] = v; }
};

ZTable build_chevalley_z(char type, uint32_t rank) {
  RootSystem R = build_root_system(type, rank);
  ChevalleyZ N(R);
  ZTable T;
  T.rank = rank;
  T.nroots = R.size();
  T.dim = rank + R.size();
  T.c.assign(size_t(T.dim) * T.dim * T.dim, 0);

  auto eidx = [&](uint32_t root) { return rank + root; };
  // [h_i, e_b] = <b, alpha_i^vee> e_b
  for (uint32_t i = 0; i < rank; ++i)
    for (uint32_t b = 0; b < R.size(); ++b) {
      int64_t pr = R.cartan_pairing(b, i);
      T.set(i, eidx(b), eidx(b), pr);
      T.set(eidx(b), i, eidx(b), -pr);
    }
  for (uint32_t x = 0; x < R.size(); ++x)
    for (uint32_t y = 0; y < R.size(); ++y) {
      if (x == y) continue;
      if (R.negative_index(x) == int32_t(y)) {
        // [e_x, e_{-x}] = h_x (coroot over the simple coroots)
        auto co = R.coroot_coefficients(x);
        for (uint32_t i = 0; i < rank; ++i) T.set(eidx(x), eidx(y), i, co[i]);
        continue;
      }
      int32_t s = R.sum_index(x, y);
      if (s >= 0) T.set(eidx(x), eidx(y), eidx(uint32_t(s)), N.n(x, y));
    }
  return T;
}

Fel reduce_mod(const Field& F, int64_t v) { return F.from_int(v); }

}  // namespace

StructureConstants chevalley_algebra(char type, uint32_t rank, FieldPtr f) {
  ZTable T = build_chevalley_z(type, rank);
  auto L = make_structure_constants(f, T.dim);
  const Field& F = *f;
  for (size_t i = 0; i < T.c.size(); ++i) L.table[i] = reduce_mod(F, T.c[i]);
  return L;
}

std::vector<Matrix> chevalley_adjoint_generators(char type, uint32_t rank, FieldPtr f) {
  ZTable T = build_chevalley_z(type, rank);
  const uint32_t n = T.dim;
  const Field& F = *f;

  auto ad_z = [&](uint32_t basis_index) {
    std::vector<int64_t> A(size_t(n) * n, 0);
    for (uint32_t j = 0; j < n; ++j)
      for (uint32_t m = 0; m < n; ++m) A[size_t(m) * n + j] = T.get(basis_index, j, m);
    return A;
  };
  auto mul_z = [&](const std::vector<int64_t>& A, const std::vector<int64_t>& B) {
    std::vector<int64_t> C(size_t(n) * n, 0);
    for (uint32_t i = 0; i < n; ++i)
      for (uint32_t k = 0; k < n; ++k) {
        int64_t a = A[size_t(i) * n + k];
        if (!a) continue;
        for (uint32_t j = 0; j < n; ++j) C[size_t(i) * n + j] += a * B[size_t(k) * n + j];
      }
    return C;
  };

  std::vector<Matrix> gens;
  RootSystem R = build_root_system(type, rank);
  std::vector<uint32_t> root_list;
  for (uint32_t s = 0; s < rank; ++s) {
    root_list.push_back(s);                             // simple root
    root_list.push_back(uint32_t(R.negative_index(s))); // its negative
  }
  for (uint32_t r : root_list) {
    // exp(ad e_r) over the integers: each divided power (ad)^k / k! is
    // integral on the Chevalley lattice, so keep term = (ad)^k / k! exactly
    std::vector<int64_t> term(size_t(n) * n, 0);
    for (uint32_t i = 0; i < n; ++i) term[size_t(i) * n + i] = 1;
    std::vector<int64_t> sum = term;
    std::vector<int64_t> adm = ad_z(rank + r);
    for (uint32_t k = 1; k <= n + 1; ++k) {
      term = mul_z(term, adm);
      bool zero = true;
      for (auto& v : term) {
        if (v % int64_t(k)) fail("InternalError", "divided power is not integral");
        v /= int64_t(k);
        zero = zero && v == 0;
      }
      if (zero) break;
      for (size_t i = 0; i < sum.size(); ++i) sum[i] += term[i];
      if (k == n + 1) fail("InternalError", "ad exponent did not nilpotate");
    }
    Matrix g(f, n, n);
    for (uint32_t i = 0; i < n; ++i)
      for (uint32_t j = 0; j < n; ++j) g.at(i, j) = F.from_int(sum[size_t(i) * n + j]);
    gens.push_back(std::move(g));
  }
  return gens;
}

}  // namespace modlie
