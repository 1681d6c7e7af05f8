#include "modlie/roots.hpp"

#include <algorithm>
#include <numeric>
#include <functional>

#include "modlie/field.hpp"
#include "modlie/util.hpp"

namespace modlie {

namespace {

std::vector<std::vector<int32_t>> simple_roots(char type, uint32_t rank) {
  auto e = [&](uint32_t n, std::initializer_list<std::pair<uint32_t, int32_t>> entries) {
    std::vector<int32_t> v(n, 0);
    for (auto [i, c] : entries) v[i] = c;
    return v;
  };
  std::vector<std::vector<int32_t>> s;
  switch (type) {
    case 'A':
      if (rank < 1) fail("InvalidType", "A_n needs n >= 1");
      for (uint32_t i = 0; i < rank; ++i) s.push_back(e(rank + 1, {{i, 1}, {i + 1, -1}}));
      return s;
    case 'B':
      if (rank < 2) fail("InvalidType", "B_n needs n >= 2");
      for (uint32_t i = 0; i + 1 < rank; ++i) s.push_back(e(rank, {{i, 1}, {i + 1, -1}}));
      s.push_back(e(rank, {{rank - 1, 1}}));
      return s;
    case 'C':
      if (rank < 2) fail("InvalidType", "C_n needs n >= 2");
      for (uint32_t i = 0; i + 1 < rank; ++i) s.push_back(e(rank, {{i, 1}, {i + 1, -1}}));
      s.push_back(e(rank, {{rank - 1, 2}}));
      return s;
    case 'D':
      if (rank < 3) fail("InvalidType", "D_n needs n >= 3");
      for (uint32_t i = 0; i + 1 < rank; ++i) s.push_back(e(rank, {{i, 1}, {i + 1, -1}}));
      s.push_back(e(rank, {{rank - 2, 1}, {rank - 1, 1}}));
      return s;
    case 'G':
      if (rank != 2) fail("InvalidType", "G needs rank 2");
      s.push_back(e(3, {{0, 1}, {1, -1}}));
      s.push_back(e(3, {{0, -2}, {1, 1}, {2, 1}}));
      return s;
    case 'F':
      if (rank != 4) fail("InvalidType", "F needs rank 4");
      // realization scaled by 2
      s.push_back(e(4, {{1, 2}, {2, -2}}));
      s.push_back(e(4, {{2, 2}, {3, -2}}));
      s.push_back(e(4, {{3, 2}}));
      s.push_back(e(4, {{0, 1}, {1, -1}, {2, -1}, {3, -1}}));
      return s;
    case 'E': {
      if (rank < 6 || rank > 8) fail("InvalidType", "E needs rank 6..8");
      // E8 simple roots scaled by 2; E7, E6 use the first 7 resp. 6 of them
      std::vector<std::vector<int32_t>> e8;
      e8.push_back(e(8, {{0, 1}, {1, -1}, {2, -1}, {3, -1}, {4, -1}, {5, -1}, {6, -1}, {7, 1}}));
      e8.push_back(e(8, {{0, 2}, {1, 2}}));
      e8.push_back(e(8, {{0, -2}, {1, 2}}));
      e8.push_back(e(8, {{1, -2}, {2, 2}}));
      e8.push_back(e(8, {{2, -2}, {3, 2}}));
      e8.push_back(e(8, {{3, -2}, {4, 2}}));
      e8.push_back(e(8, {{4, -2}, {5, 2}}));
      e8.push_back(e(8, {{5, -2}, {6, 2}}));
      for (uint32_t i = 0; i < rank; ++i) s.push_back(e8[i]);
      return s;
    }
    default:
      fail("InvalidType", std::string("unknown type ") + type);
  }
}

int64_t dot(const std::vector<int32_t>& a, const std::vector<int32_t>& b) {
  int64_t s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += int64_t(a[i]) * b[i];
  return s;
}

}  // namespace

int32_t RootSystem::sum_index(uint32_t i, uint32_t j) const {
  std::vector<int32_t> v(ambient);
  for (uint32_t t = 0; t < ambient; ++t) v[t] = roots[i][t] + roots[j][t];
  auto it = index.find(v);
  return it == index.end() ? -1 : int32_t(it->second);
}

int64_t RootSystem::inner(uint32_t i, uint32_t j) const { return dot(roots[i], roots[j]); }

int32_t RootSystem::cartan_pairing(uint32_t i, uint32_t j) const {
  int64_t num = 2 * inner(i, j), den = inner(j, j);
  if (num % den) fail("InternalError", "non-integral Cartan pairing");
  return int32_t(num / den);
}

uint32_t RootSystem::height(uint32_t i) const {
  if (i >= num_positive) fail("InvalidArgument", "height of a non-positive root");
  return pos_heights[i];
}

std::vector<int64_t> RootSystem::coroot_coefficients(uint32_t i) const { return coroot_coefficients_impl(i); }

std::vector<std::vector<uint32_t>> RootSystem::upper_covers() const {
  std::vector<std::vector<uint32_t>> covers(num_positive);
  for (uint32_t b = 0; b < num_positive; ++b)
    for (uint32_t s = 0; s < rank; ++s) {
      int32_t g = sum_index(b, s);
      if (g >= 0 && uint32_t(g) < num_positive) covers[b].push_back(uint32_t(g));
    }
  return covers;
}

uint32_t RootSystem::string_down(uint32_t alpha, uint32_t beta) const {
  uint32_t p = 0;
  std::vector<int32_t> v = roots[beta];
  while (true) {
    for (uint32_t t = 0; t < ambient; ++t) v[t] -= roots[alpha][t];
    if (!index.count(v)) break;
    ++p;
  }
  return p;
}

RootSystem build_root_system(char type, uint32_t rank) {
  RootSystem R;
  R.type = type;
  R.rank = rank;
  auto simple = simple_roots(type, rank);
  R.ambient = uint32_t(simple[0].size());

  // generate positive roots by string closure over the simple roots
  // (q = p - <beta, alpha^vee> gives whether beta + alpha is a root)
  std::vector<std::vector<int32_t>> pos = simple;
  std::map<std::vector<int32_t>, uint32_t> seen;
  std::vector<uint32_t> heights(simple.size(), 1);
  for (uint32_t i = 0; i < simple.size(); ++i) seen[simple[i]] = i;
  for (size_t head = 0; head < pos.size(); ++head) {
    for (uint32_t s = 0; s < rank; ++s) {
      // p = max k with pos[head] - k*simple[s] a positive root (or simple negative)
      std::vector<int32_t> v = pos[head];
      uint32_t p = 0;
      while (true) {
        std::vector<int32_t> w(R.ambient);
        for (uint32_t t = 0; t < R.ambient; ++t) w[t] = v[t] - simple[s][t];
        bool root = seen.count(w) != 0;
        if (!root) {
          // w could be the negative of a simple root only when pos[head] is
          // simple[s] itself; then the string continues through zero, which
          // we must not count
          break;
        }
        v = w;
        ++p;
      }
      int64_t pairing = 2 * dot(pos[head], simple[s]) / dot(simple[s], simple[s]);
      int64_t q = int64_t(p) - pairing;
      if (q >= 1) {
        std::vector<int32_t> w(R.ambient);
        for (uint32_t t = 0; t < R.ambient; ++t) w[t] = pos[head][t] + simple[s][t];
        if (!seen.count(w)) {
          seen[w] = uint32_t(pos.size());
          pos.push_back(w);
          heights.push_back(heights[head] + 1);
        }
      }
    }
  }

  // sort by (height, lex) keeping the simple roots first in Bourbaki order
  std::vector<uint32_t> order(pos.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](uint32_t a, uint32_t b) {
    if (a < rank || b < rank) return a < b;  // simple roots keep their order
    if (heights[a] != heights[b]) return heights[a] < heights[b];
    return pos[a] < pos[b];
  });
  // simple roots must sort before the rest (height 1 is minimal anyway)
  R.num_positive = uint32_t(pos.size());
  for (uint32_t i : order) {
    R.roots.push_back(pos[i]);
    R.pos_heights.push_back(heights[i]);
  }
  for (uint32_t i = 0; i < R.num_positive; ++i) {
    std::vector<int32_t> neg(R.ambient);
    for (uint32_t t = 0; t < R.ambient; ++t) neg[t] = -R.roots[i][t];
    R.roots.push_back(std::move(neg));
  }
  for (uint32_t i = 0; i < R.roots.size(); ++i) R.index[R.roots[i]] = i;
  return R;
}

// --- private helper: coroot coefficients (declared in header as method) ---

std::vector<int64_t> RootSystem::coroot_coefficients_impl(uint32_t i) const {
  // solve  sum_j c_j alpha_j^vee = root_i^vee  via the fundamental-weight
  // pairing: c_j = <omega_j-free approach> use Gram elimination over Q with
  // exact rationals (values are small integers)
  // Build the rank x rank system: root_i = sum_j x_j alpha_j first, then
  // c_j = x_j * (alpha_j, alpha_j) / (root_i, root_i).
  uint32_t n = rank;
  // solve root coordinates over the simple roots by least squares with exact
  // arithmetic: the Gram matrix G_jk = (a_j, a_k), rhs b_j = (a_j, root_i)
  std::vector<std::vector<int64_t>> G(n, std::vector<int64_t>(n + 1));
  for (uint32_t j = 0; j < n; ++j) {
    for (uint32_t k = 0; k < n; ++k) G[j][k] = inner(j, k);
    G[j][n] = inner(j, i);
  }
  // fraction-free Gaussian elimination (Bareiss) then back substitution with
  // exact divisions
  // forward elimination
  std::vector<int64_t> denom(n, 1);
  for (uint32_t c = 0; c < n; ++c) {
    uint32_t piv = c;
    while (piv < n && G[piv][c] == 0) ++piv;
    if (piv == n) fail("InternalError", "singular Gram matrix");
    std::swap(G[piv], G[c]);
    for (uint32_t r = c + 1; r < n; ++r) {
      int64_t f1 = G[c][c], f2 = G[r][c];
      if (!f2) continue;
      for (uint32_t k = c; k <= n; ++k) G[r][k] = G[r][k] * f1 - G[c][k] * f2;
      // keep numbers small
      int64_t g = 0;
      for (uint32_t k = c; k <= n; ++k) g = std::gcd(g, G[r][k] < 0 ? -G[r][k] : G[r][k]);
      if (g > 1)
        for (uint32_t k = c; k <= n; ++k) G[r][k] /= g;
    }
  }
  (void)denom;
  // back substitution over rationals num/den
  std::vector<std::pair<int64_t, int64_t>> x(n);  // value = num/den
  for (int32_t r = int32_t(n) - 1; r >= 0; --r) {
    // G[r][r] x_r + sum_{k>r} G[r][k] x_k = G[r][n]
    int64_t num = G[r][n], den = 1;
    for (uint32_t k = r + 1; k < n; ++k) {
      // num/den -= G[r][k] * x_k
      int64_t nn = num * x[k].second - G[r][k] * x[k].first * den;
      int64_t dd = den * x[k].second;
      int64_t g = std::gcd(nn < 0 ? -nn : nn, dd < 0 ? -dd : dd);
      if (g > 1) {
        nn /= g;
        dd /= g;
      }
      num = nn;
      den = dd;
    }
    // x_r = num / (den * G[r][r])
    int64_t dd = den * G[r][r];
    int64_t g = std::gcd(num < 0 ? -num : num, dd < 0 ? -dd : dd);
    if (g > 1) {
      num /= g;
      dd /= g;
    }
    if (dd < 0) {
      num = -num;
      dd = -dd;
    }
    x[r] = {num, dd};
  }
  // c_j = x_j (a_j, a_j) / (root_i, root_i)
  std::vector<int64_t> out(n);
  int64_t rlen = inner(i, i);
  for (uint32_t j = 0; j < n; ++j) {
    int64_t num = x[j].first * inner(j, j);
    int64_t den = x[j].second * rlen;
    if (num % den) fail("InternalError", "coroot coefficient not integral");
    out[j] = num / den;
  }
  return out;
}

SumFreeResult max_sum_free_root_set(const RootSystem& R) {
  // search over upper sets of the positive-root poset, processing roots from
  // maximal to minimal height; a root may enter only if all its upper covers
  // are in
  uint32_t n = R.num_positive;
  std::vector<uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::reverse(order.begin(), order.end());  // roots are stored by increasing height
  auto covers = R.upper_covers();

  // compatibility: sum of two distinct positive roots not a root (zero sum
  // impossible among positives; 2a never a root in reduced systems)
  std::vector<std::vector<bool>> compatible(n, std::vector<bool>(n, true));
  for (uint32_t i = 0; i < n; ++i)
    for (uint32_t j = 0; j < n; ++j)
      if (i != j && R.sum_index(i, j) >= 0) compatible[i][j] = false;

  SumFreeResult best;
  std::vector<uint32_t> chosen;
  std::vector<bool> in_set(n, false);
  uint64_t nodes = 0;

  auto consider_best = [&](const std::vector<uint32_t>& cand) {
    std::vector<uint32_t> sorted = cand;
    std::sort(sorted.begin(), sorted.end());
    if (sorted.size() > best.size || (uint32_t(sorted.size()) == best.size && sorted < best.witness)) {
      best.size = uint32_t(sorted.size());
      best.witness = sorted;
    }
  };

  std::function<void(uint32_t)> dfs = [&](uint32_t pos) {
    ++nodes;
    if (pos == n) {
      consider_best(chosen);
      return;
    }
    if (chosen.size() + (n - pos) < best.size) return;  // bound
    uint32_t root = order[pos];
    // include branch: needs all upper covers present and compatibility
    bool can = true;
    for (uint32_t c : covers[root]) can = can && in_set[c];
    if (can)
      for (uint32_t x : chosen) can = can && compatible[root][x];
    if (can) {
      chosen.push_back(root);
      in_set[root] = true;
      dfs(pos + 1);
      chosen.pop_back();
      in_set[root] = false;
    }
    dfs(pos + 1);
  };
  dfs(0);
  best.nodes_explored = nodes;
  return best;
}

SumFreeResult max_sum_free_root_set_exhaustive(const RootSystem& R) {
  // branch and bound over arbitrary subsets of all roots
  uint32_t n = R.size();
  std::vector<std::vector<bool>> compatible(n, std::vector<bool>(n, true));
  for (uint32_t i = 0; i < n; ++i)
    for (uint32_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (R.negative_index(i) == int32_t(j) || R.sum_index(i, j) >= 0) compatible[i][j] = false;
    }
  SumFreeResult best;
  std::vector<uint32_t> chosen;
  uint64_t nodes = 0;
  std::function<void(uint32_t)> dfs = [&](uint32_t pos) {
    ++nodes;
    if (pos == n) {
      if (chosen.size() > best.size) {
        best.size = uint32_t(chosen.size());
        best.witness = chosen;
      }
      return;
    }
    if (chosen.size() + (n - pos) <= best.size) return;
    bool can = true;
    for (uint32_t x : chosen) can = can && compatible[pos][x];
    if (can) {
      chosen.push_back(pos);
      dfs(pos + 1);
      chosen.pop_back();
    }
    dfs(pos + 1);
  };
  dfs(0);
  best.nodes_explored = nodes;
  return best;
}

AbelianBoundQuery max_abelian_dimension(char type, uint32_t rank, uint32_t p) {
  if (p != 0 && !is_prime(p)) fail("OutsideValidity", "p must be 0 or prime");
  auto outside = [&](const std::string& hyp) {
    fail("OutsideValidity", std::string(1, type) + std::to_string(rank) + " at p=" + std::to_string(p) +
                                ": requires " + hyp);
  };
  switch (type) {
    case 'A':
      if (rank < 1) outside("n >= 1");
      break;
    case 'B':
      if (rank < 3) outside("n >= 3 (B2 = C2)");
      if (p == 2) outside("p != 2");
      break;
    case 'C':
      if (rank < 2) outside("n >= 2");
      if (p == 2) outside("p != 2");
      break;
    case 'D':
      if (rank < 4) outside("n >= 4");
      break;
    case 'F':
      if (rank != 4) outside("rank 4");
      if (p == 2) outside("p != 2");
      break;
    case 'G':
      if (rank != 2) outside("rank 2");
      if (p == 2 || p == 3) outside("p not in {2, 3}");
      break;
    case 'E':
      if (rank < 6 || rank > 8) outside("rank 6..8");
      break;
    default:
      fail("InvalidType", std::string("unknown type ") + type);
  }

  AbelianBoundQuery out;
  out.type = type;
  out.rank = rank;
  out.p = p;

  RootSystem R = build_root_system(type, rank);
  auto sf = max_sum_free_root_set(R);
  out.search_size = sf.size;
  out.witness = sf.witness;

  // central correction = dimension of the center of the Lie algebra in
  // characteristic p
  uint32_t corr = 0;
  if (type == 'A' && p != 0 && (rank + 1) % p == 0) corr = 1;
  if (type == 'D' && p == 2) corr = 2;
  if (type == 'E' && rank == 7 && p == 2) corr = 1;
  if (type == 'E' && rank == 6 && p == 3) corr = 1;
  out.central_correction = corr;
  out.result = sf.size + corr;

  // closed form from the table
  uint32_t formula = 0;
  switch (type) {
    case 'A':
      formula = (rank + 1) * (rank + 1) / 4 + corr;
      break;
    case 'B':
      formula = rank == 3 ? 5 : rank * (rank - 1) / 2 + 1;
      break;
    case 'C':
      formula = rank * (rank + 1) / 2;
      break;
    case 'D':
      formula = rank * (rank - 1) / 2 + corr;
      break;
    case 'G':
      formula = 3;
      break;
    case 'F':
      formula = 9;
      break;
    case 'E':
      formula = (rank == 6 ? 16 : rank == 7 ? 27 : 36) + corr;
      break;
  }
  out.formula_value = formula;
  if (out.result != formula)
    fail("InternalError", "combinatorial search disagrees with the closed form for " +
                              std::string(1, type) + std::to_string(rank) + ": search " +
                              std::to_string(out.result) + " vs formula " + std::to_string(formula));
  return out;
}

}  // namespace modlie
