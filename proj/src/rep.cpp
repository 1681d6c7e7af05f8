#include "modlie/rep.hpp"

#include <algorithm>
#include <map>

#include "modlie/util.hpp"

namespace modlie {

Representation make_rep(FieldPtr f, std::vector<Matrix> gens, std::string label) {
  Representation M;
  M.field = std::move(f);
  M.label = std::move(label);
  M.dim = gens.empty() ? 0 : gens[0].rows();
  for (const auto& g : gens) {
    if (!g.field()->same(*M.field)) fail("FieldMismatch", "generator over wrong field");
    if (g.rows() != M.dim || g.cols() != M.dim) fail("ShapeMismatch", "generator not square of module dim");
    if (!is_invertible(g)) fail("SingularGenerator", "generator matrix is not invertible");
  }
  M.gens = std::move(gens);
  return M;
}

Matrix evaluate_word(const Representation& M, const std::vector<int32_t>& word) {
  Matrix r = Matrix::identity(M.field, M.dim);
  for (int32_t s : word) {
    if (s == 0 || uint32_t(std::abs(s)) > M.gens.size()) fail("ParseError", "word letter out of range");
    const Matrix& g = M.gens[size_t(std::abs(s)) - 1];
    if (s > 0)
      r = mul(r, g);
    else
      r = mul(r, *inverse(g));
  }
  return r;
}

Representation dual_rep(const Representation& M) {
  std::vector<Matrix> gens;
  gens.reserve(M.gens.size());
  for (const auto& g : M.gens) gens.push_back(inverse(g)->transpose());
  Representation D;
  D.field = M.field;
  D.dim = M.dim;
  D.gens = std::move(gens);
  D.label = M.label.empty() ? "" : M.label + "*";
  return D;
}

Representation tensor_rep(const Representation& M, const Representation& N) {
  if (!M.field->same(*N.field)) fail("FieldMismatch", "tensor of modules over different fields");
  if (M.gens.size() != N.gens.size()) fail("GeneratorCountMismatch", "tensor");
  Representation T;
  T.field = M.field;
  T.dim = M.dim * N.dim;
  for (size_t i = 0; i < M.gens.size(); ++i) T.gens.push_back(kron(M.gens[i], N.gens[i]));
  return T;
}

Representation direct_sum(const Representation& M, const Representation& N) {
  if (!M.field->same(*N.field)) fail("FieldMismatch", "direct sum over different fields");
  if (M.gens.size() != N.gens.size()) fail("GeneratorCountMismatch", "direct sum");
  Representation S;
  S.field = M.field;
  S.dim = M.dim + N.dim;
  for (size_t t = 0; t < M.gens.size(); ++t) {
    Matrix g(M.field, S.dim, S.dim);
    for (uint32_t i = 0; i < M.dim; ++i)
      for (uint32_t j = 0; j < M.dim; ++j) g.at(i, j) = M.gens[t].at(i, j);
    for (uint32_t i = 0; i < N.dim; ++i)
      for (uint32_t j = 0; j < N.dim; ++j) g.at(M.dim + i, M.dim + j) = N.gens[t].at(i, j);
    S.gens.push_back(std::move(g));
  }
  return S;
}

Representation conjugate_rep(const Representation& M, const Matrix& g) {
  auto gi = inverse(g);
  if (!gi) fail("SingularGenerator", "conjugating matrix is singular");
  Representation C;
  C.field = M.field;
  C.dim = M.dim;
  C.label = M.label;
  for (const auto& h : M.gens) C.gens.push_back(mul(*gi, h, g));
  return C;
}

uint32_t ext2_index(uint32_t d, uint32_t i, uint32_t j) {
  // (i, j), i < j, lexicographic
  return i * d - i * (i + 1) / 2 + (j - i - 1);
}

uint32_t sym2_index(uint32_t d, uint32_t i, uint32_t j) {
  // (i, j), i <= j, lexicographic
  return i * d - i * (i - 1) / 2 + (j - i);
}

std::vector<std::pair<uint32_t, uint32_t>> ext2_pairs(uint32_t d) {
  std::vector<std::pair<uint32_t, uint32_t>> out;
  for (uint32_t i = 0; i < d; ++i)
    for (uint32_t j = i + 1; j < d; ++j) out.emplace_back(i, j);
  return out;
}

std::vector<std::pair<uint32_t, uint32_t>> sym2_pairs(uint32_t d) {
  std::vector<std::pair<uint32_t, uint32_t>> out;
  for (uint32_t i = 0; i < d; ++i)
    for (uint32_t j = i; j < d; ++j) out.emplace_back(i, j);
  return out;
}

Representation ext2_rep(const Representation& M) {
  const Field& F = M.F();
  uint32_t d = M.dim;
  auto pairs = ext2_pairs(d);
  Representation E;
  E.field = M.field;
  E.dim = uint32_t(pairs.size());
  for (const auto& g : M.gens) {
    Matrix h(M.field, E.dim, E.dim);
    for (uint32_t col = 0; col < pairs.size(); ++col) {
      auto [i, j] = pairs[col];
      // g(e_i ^ e_j) = sum_{a<b} (g_ai g_bj - g_aj g_bi) e_a ^ e_b
      for (uint32_t a = 0; a < d; ++a)
        for (uint32_t b = a + 1; b < d; ++b) {
          Fel v = F.sub(F.mul(g.at(a, i), g.at(b, j)), F.mul(g.at(a, j), g.at(b, i)));
          if (v) h.at(ext2_index(d, a, b), col) = v;
        }
    }
    E.gens.push_back(std::move(h));
  }
  return E;
}

Representation sym2_rep(const Representation& M) {
  const Field& F = M.F();
  uint32_t d = M.dim;
  auto pairs = sym2_pairs(d);
  Representation S;
  S.field = M.field;
  S.dim = uint32_t(pairs.size());
  for (const auto& g : M.gens) {
    Matrix h(M.field, S.dim, S.dim);
    for (uint32_t col = 0; col < pairs.size(); ++col) {
      auto [i, j] = pairs[col];
      // g(e_i e_j) = sum_a g_ai g_aj e_a e_a + sum_{a<b} (g_ai g_bj + g_aj g_bi) e_a e_b
      for (uint32_t a = 0; a < d; ++a) {
        Fel diag = F.mul(g.at(a, i), g.at(a, j));
        if (diag) h.at(sym2_index(d, a, a), col) = diag;
        for (uint32_t b = a + 1; b < d; ++b) {
          Fel v = F.add(F.mul(g.at(a, i), g.at(b, j)), F.mul(g.at(a, j), g.at(b, i)));
          if (v) h.at(sym2_index(d, a, b), col) = v;
        }
      }
    }
    S.gens.push_back(std::move(h));
  }
  return S;
}

SubmoduleWitness spin(const Representation& M, const std::vector<Vec>& seeds) {
  Span span(M.field, M.dim);
  std::vector<Vec> queue;
  for (const auto& s : seeds)
    if (span.insert(s)) queue.push_back(s);
  for (size_t head = 0; head < queue.size() && span.dim() < M.dim; ++head) {
    for (const auto& g : M.gens) {
      Vec w = mul(g, queue[head]);
      if (span.insert(w)) queue.push_back(std::move(w));
    }
  }
  SubmoduleWitness out;
  out.basis = span.canonical_basis();
  return out;
}

namespace {

// spin with enough bookkeeping to express closure relations in the spun basis
struct Transcript {
  std::vector<Vec> basis;                             // b_t
  std::vector<std::pair<uint32_t, uint32_t>> origin;  // b_t = gens[first] * b_{second}, t >= 1
  // augmented echelon rows: [vector | expression over basis indices]
  std::vector<std::vector<Fel>> ech;
  std::vector<uint32_t> piv;
  FieldPtr f;
  uint32_t dim = 0;

  // if v is in the span, return its expression over the basis; otherwise
  // insert it as a new basis vector with the given origin and return nullopt
  std::optional<std::vector<Fel>> reduce_or_insert(const Vec& v, bool insert_allowed,
                                                   std::pair<uint32_t, uint32_t> org) {
    const Field& F = *f;
    std::vector<Fel> w(size_t(dim) + dim, 0);
    for (uint32_t i = 0; i < dim; ++i) w[i] = v.at(i, 0);
    for (size_t r = 0; r < ech.size(); ++r) {
      Fel c = w[piv[r]];
      if (!c) continue;
      uint32_t lc = F.log(c);
      const auto& row = ech[r];
      for (size_t j = 0; j < w.size(); ++j) {
        Fel s = row[j];
        if (s) w[j] = F.sub(w[j], F.exp(lc + F.log(s)));
      }
    }
    uint32_t pv = dim;
    for (uint32_t j = 0; j < dim; ++j)
      if (w[j]) {
        pv = j;
        break;
      }
    if (pv == dim) {
      // in span: v = sum expr_t b_t with expr = -(augmented part)
      std::vector<Fel> expr(basis.size(), 0);
      for (uint32_t t = 0; t < basis.size(); ++t) expr[t] = F.neg(w[dim + t]);
      return expr;
    }
    if (!insert_allowed) fail("InternalError", "transcript closure escaped span");
    uint32_t t = uint32_t(basis.size());
    w[dim + t] = F.add(w[dim + t], 1);
    Fel inv = F.inv(w[pv]);
    if (inv != 1)
      for (auto& x : w) x = F.mul(x, inv);
    size_t pos = 0;
    while (pos < piv.size() && piv[pos] < pv) ++pos;
    ech.insert(ech.begin() + pos, std::move(w));
    piv.insert(piv.begin() + pos, pv);
    basis.push_back(v);
    origin.push_back(org);
    return std::nullopt;
  }
};

bool spin_transcript(const Representation& M, const Vec& seed, Transcript& tr) {
  tr.f = M.field;
  tr.dim = M.dim;
  tr.basis.clear();
  tr.origin.clear();
  tr.ech.clear();
  tr.piv.clear();
  if (seed.is_zero()) return false;
  tr.reduce_or_insert(seed, true, {0, 0});
  for (uint32_t head = 0; head < tr.basis.size() && tr.basis.size() < M.dim; ++head)
    for (uint32_t gi = 0; gi < M.gens.size(); ++gi) {
      Vec w = mul(M.gens[gi], tr.basis[head]);
      tr.reduce_or_insert(w, true, {gi, head});
      if (tr.basis.size() == M.dim) break;
    }
  return tr.basis.size() == M.dim;
}

bool find_cyclic_vector(const Representation& M, Transcript& tr) {
  if (M.dim == 0) return false;
  std::vector<Vec> candidates;
  for (uint32_t i = 0; i < std::min(M.dim, 8u); ++i) {
    Vec v(M.field, M.dim, 1);
    v.at(i, 0) = 1;
    candidates.push_back(std::move(v));
  }
  Vec ones(M.field, M.dim, 1);
  for (uint32_t i = 0; i < M.dim; ++i) ones.at(i, 0) = 1;
  candidates.push_back(std::move(ones));
  Rng rng(977);
  for (int t = 0; t < 12; ++t) {
    Vec v(M.field, M.dim, 1);
    for (uint32_t i = 0; i < M.dim; ++i) v.at(i, 0) = Fel(rng.below(M.F().q()));
    candidates.push_back(std::move(v));
  }
  for (const auto& v : candidates)
    if (spin_transcript(M, v, tr)) return true;
  return false;
}

std::vector<Matrix> hom_space_cyclic(const Representation& A, const Representation& B, Transcript& tr) {
  uint32_t n = B.dim;
  const uint32_t total = uint32_t(tr.basis.size());
  // the image u of the cyclic vector parameterizes the hom; K spans the
  // current candidate space for u. Constraints are consumed in growing
  // prefixes of the spun basis so the T_t working set stays small while the
  // parameter count is still large.
  Matrix K = Matrix::identity(B.field, n);
  uint32_t cap = std::min<uint32_t>(total, 64);
  for (int round = 0; round < 1000 && K.cols() > 0; ++round) {
    if (uint64_t(cap) * n * K.cols() > (200u << 20))
      fail("TooLarge", "hom parameter sweep exceeds memory budget");
    std::vector<Matrix> T(cap);
    T[0] = K;
    for (uint32_t t = 1; t < cap; ++t) {
      if (tr.origin[t].second >= cap) fail("InternalError", "spin order violated");
      T[t] = mul(B.gens[tr.origin[t].first], T[tr.origin[t].second]);
    }
    Span constraints(B.field, K.cols());
    for (uint32_t t = 0; t < cap; ++t)
      for (uint32_t gi = 0; gi < A.gens.size(); ++gi) {
        Vec w = mul(A.gens[gi], tr.basis[t]);
        auto expr = tr.reduce_or_insert(w, false, {0, 0});
        bool in_prefix = true;
        for (uint32_t s = cap; s < total && in_prefix; ++s) in_prefix = (*expr)[s] == 0;
        if (!in_prefix) continue;  // becomes available once cap covers it
        Matrix C = mul(B.gens[gi], T[t]);
        for (uint32_t s = 0; s < cap; ++s) {
          Fel c = (*expr)[s];
          if (c) C = sub(C, scale(T[s], c));
        }
        if (C.is_zero()) continue;
        for (uint32_t r = 0; r < C.rows(); ++r) {
          Vec row(B.field, K.cols(), 1);
          for (uint32_t c2 = 0; c2 < K.cols(); ++c2) row.at(c2, 0) = C.at(r, c2);
          constraints.insert(std::move(row));
        }
      }
    if (constraints.dim() == 0) {
      if (cap >= total) break;
      cap = std::min(total, cap * 4);
      continue;
    }
    Matrix Sys(B.field, constraints.dim(), K.cols());
    auto crows = constraints.basis_vectors();
    for (uint32_t r = 0; r < crows.size(); ++r)
      for (uint32_t c = 0; c < K.cols(); ++c) Sys.at(r, c) = crows[r].at(c, 0);
    auto rn = rank_nullspace(Sys);
    if (rn.nullspace.empty()) return {};
    K = mul(K, cols_to_matrix(rn.nullspace, B.field, K.cols()));
  }
  // convert each parameter column into the hom matrix on the standard basis
  Matrix Bas = cols_to_matrix(tr.basis, A.field, A.dim);
  Matrix BasInv = *inverse(Bas);
  std::vector<Matrix> out;
  for (uint32_t c = 0; c < K.cols(); ++c) {
    std::vector<Vec> img(tr.basis.size());
    img[0] = K.col(c);
    for (uint32_t t = 1; t < tr.basis.size(); ++t)
      img[t] = mul(B.gens[tr.origin[t].first], img[tr.origin[t].second]);
    out.push_back(mul(cols_to_matrix(img, B.field, B.dim), BasInv));
  }
  return out;
}

std::vector<Matrix> hom_space_dense(const Representation& A, const Representation& B) {
  const Field& F = *A.field;
  uint64_t unknowns = uint64_t(A.dim) * B.dim;
  if (unknowns > 40000) fail("TooLarge", "hom system too large and source not cyclic");
  uint32_t nA = A.dim, nB = B.dim;
  std::vector<std::vector<Fel>> rows;
  for (size_t t = 0; t < A.gens.size(); ++t) {
    const Matrix& gA = A.gens[t];
    const Matrix& gB = B.gens[t];
    for (uint32_t a = 0; a < nB; ++a)
      for (uint32_t b = 0; b < nA; ++b) {
        std::vector<Fel> row(unknowns, 0);
        // (X gA - gB X)(a, b) = 0 with x_{ac} flattened row-major
        for (uint32_t cc = 0; cc < nA; ++cc) {
          Fel v = gA.at(cc, b);
          if (v) row[size_t(a) * nA + cc] = F.add(row[size_t(a) * nA + cc], v);
        }
        for (uint32_t cc = 0; cc < nB; ++cc) {
          Fel v = gB.at(a, cc);
          if (v) row[size_t(cc) * nA + b] = F.sub(row[size_t(cc) * nA + b], v);
        }
        bool nz = false;
        for (Fel x : row) nz |= x != 0;
        if (nz) rows.push_back(std::move(row));
      }
  }
  std::vector<Matrix> out;
  if (rows.empty()) {
    for (uint32_t a = 0; a < nB; ++a)
      for (uint32_t b = 0; b < nA; ++b) {
        Matrix X(A.field, nB, nA);
        X.at(a, b) = 1;
        out.push_back(std::move(X));
      }
    return out;
  }
  Matrix Sys(A.field, uint32_t(rows.size()), uint32_t(unknowns));
  for (uint32_t r = 0; r < rows.size(); ++r)
    for (uint32_t c = 0; c < unknowns; ++c) Sys.at(r, c) = rows[r][c];
  for (const auto& v : rank_nullspace(Sys).nullspace) {
    Matrix X(A.field, nB, nA);
    for (uint32_t a = 0; a < nB; ++a)
      for (uint32_t b = 0; b < nA; ++b) X.at(a, b) = v.at(uint32_t(size_t(a) * nA + b), 0);
    out.push_back(std::move(X));
  }
  return out;
}

std::vector<Matrix> canonical_hom_basis(std::vector<Matrix> maps, FieldPtr f, uint32_t nB, uint32_t nA) {
  if (maps.empty()) return maps;
  std::vector<Vec> flats;
  for (const auto& X : maps) {
    Vec v(f, nB * nA, 1);
    for (uint32_t a = 0; a < nB; ++a)
      for (uint32_t b = 0; b < nA; ++b) v.at(uint32_t(size_t(a) * nA + b), 0) = X.at(a, b);
    flats.push_back(std::move(v));
  }
  auto canon = column_canonical_basis(flats, f, nB * nA);
  std::vector<Matrix> out;
  for (const auto& v : canon) {
    Matrix X(f, nB, nA);
    for (uint32_t a = 0; a < nB; ++a)
      for (uint32_t b = 0; b < nA; ++b) X.at(a, b) = v.at(uint32_t(size_t(a) * nA + b), 0);
    out.push_back(std::move(X));
  }
  return out;
}

}  // namespace

std::vector<Matrix> hom_space(const Representation& A, const Representation& B) {
  if (!A.field->same(*B.field)) fail("FieldMismatch", "hom_space over different fields");
  if (A.gens.size() != B.gens.size()) fail("GeneratorCountMismatch", "hom_space");
  if (A.dim == 0 || B.dim == 0) return {};
  std::vector<Matrix> maps;
  Transcript tr;
  if (find_cyclic_vector(A, tr))
    maps = hom_space_cyclic(A, B, tr);
  else
    maps = hom_space_dense(A, B);
  maps = canonical_hom_basis(std::move(maps), A.field, B.dim, A.dim);
  for (const auto& X : maps)
    for (size_t t = 0; t < A.gens.size(); ++t)
      if (!(mul(X, A.gens[t]) == mul(B.gens[t], X))) fail("InternalError", "hom basis fails intertwining");
  return maps;
}

bool isomorphic(const Representation& M, const Representation& N) {
  if (M.dim != N.dim) return false;
  if (M.dim == 0) return true;
  auto h = hom_space(M, N);
  for (const auto& X : h)
    if (is_invertible(X)) return true;
  if (h.size() >= 2) {
    // decomposable inputs may need a combination
    const Field& F = *M.field;
    Rng rng(5);
    for (int t = 0; t < 32; ++t) {
      Matrix X = Matrix::zero(M.field, N.dim, M.dim);
      for (const auto& Y : h) X = add(X, scale(Y, Fel(rng.below(F.q()))));
      if (is_invertible(X)) return true;
    }
  }
  return false;
}

Representation rep_on_submodule(const Representation& M, const std::vector<Vec>& basis) {
  Representation S;
  S.field = M.field;
  S.dim = uint32_t(basis.size());
  if (basis.empty()) {
    S.gens.assign(M.gens.size(), Matrix(M.field, 0, 0));
    return S;
  }
  Matrix W = cols_to_matrix(basis, M.field, M.dim);
  for (const auto& g : M.gens) {
    Matrix img = mul(g, W);
    Matrix X(M.field, S.dim, S.dim);
    for (uint32_t c = 0; c < S.dim; ++c) {
      auto x = solve(W, img.col(c));
      if (!x) fail("NotInvariant", "basis does not span an invariant subspace");
      X.set_col(c, *x);
    }
    S.gens.push_back(std::move(X));
  }
  // exact invariance check: W * X must reproduce img
  return S;
}

namespace {

Matrix complete_basis(const std::vector<Vec>& basis, FieldPtr f, uint32_t dim) {
  Span span(f, dim);
  std::vector<Vec> cols = basis;
  for (const auto& v : basis) span.insert(v);
  for (uint32_t i = 0; i < dim && cols.size() < dim; ++i) {
    Vec e(f, dim, 1);
    e.at(i, 0) = 1;
    if (span.insert(e)) cols.push_back(std::move(e));
  }
  if (cols.size() != dim) fail("InternalError", "basis completion failed");
  return cols_to_matrix(cols, f, dim);
}

}  // namespace

Representation rep_on_quotient(const Representation& M, const std::vector<Vec>& basis) {
  uint32_t w = uint32_t(basis.size());
  if (w == 0) return M;
  Matrix U = complete_basis(basis, M.field, M.dim);
  Matrix Ui = *inverse(U);
  Representation Q;
  Q.field = M.field;
  Q.dim = M.dim - w;
  for (const auto& g : M.gens) {
    Matrix C = mul(Ui, g, U);
    for (uint32_t i = w; i < M.dim; ++i)
      for (uint32_t j = 0; j < w; ++j)
        if (C.at(i, j)) fail("NotInvariant", "quotient by a non-invariant subspace");
    Matrix block(M.field, Q.dim, Q.dim);
    for (uint32_t i = 0; i < Q.dim; ++i)
      for (uint32_t j = 0; j < Q.dim; ++j) block.at(i, j) = C.at(w + i, w + j);
    Q.gens.push_back(std::move(block));
  }
  return Q;
}

namespace {

uint32_t spin_dim(const std::vector<Matrix>& gens, const Vec& seed, FieldPtr f, uint32_t dim,
                  std::vector<Vec>* out_basis = nullptr) {
  Span span(f, dim);
  std::vector<Vec> queue;
  if (span.insert(seed)) queue.push_back(seed);
  for (size_t head = 0; head < queue.size() && span.dim() < dim; ++head)
    for (const auto& g : gens) {
      Vec w = mul(g, queue[head]);
      if (span.insert(w)) queue.push_back(std::move(w));
    }
  if (out_basis) *out_basis = span.canonical_basis();
  return span.dim();
}

Matrix random_algebra_element(const Representation& M, Rng& rng) {
  const Field& F = M.F();
  Matrix theta(M.field, M.dim, M.dim);
  uint32_t terms = 2 + uint32_t(rng.below(2));
  for (uint32_t t = 0; t < terms; ++t) {
    Matrix w = Matrix::identity(M.field, M.dim);
    uint32_t len = 1 + uint32_t(rng.below(3));
    for (uint32_t l = 0; l < len; ++l) w = mul(w, M.gens[rng.below(M.gens.size())]);
    theta = add(theta, scale(w, Fel(1 + rng.below(F.q() - 1))));
  }
  return theta;
}

// ---- univariate polynomials over the field, for the MeatAxe element hunt ----

using FP = std::vector<Fel>;  // coefficients low-to-high, no trailing zeros

void fp_trim(FP& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

FP fp_mul(const Field& F, const FP& a, const FP& b) {
  if (a.empty() || b.empty()) return {};
  FP c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j) c[i + j] = F.add(c[i + j], F.mul(a[i], b[j]));
  }
  fp_trim(c);
  return c;
}

FP fp_mod(const Field& F, FP a, const FP& m) {
  fp_trim(a);
  Fel lead_inv = F.inv(m.back());
  while (a.size() >= m.size()) {
    Fel c = F.mul(a.back(), lead_inv);
    size_t shift = a.size() - m.size();
    if (c)
      for (size_t i = 0; i < m.size(); ++i) a[shift + i] = F.sub(a[shift + i], F.mul(c, m[i]));
    a.pop_back();
    fp_trim(a);
  }
  return a;
}

FP fp_gcd(const Field& F, FP a, FP b) {
  fp_trim(a);
  fp_trim(b);
  while (!b.empty()) {
    FP r = fp_mod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty() && a.back() != 1) {
    Fel inv = F.inv(a.back());
    for (auto& c : a) c = F.mul(c, inv);
  }
  return a;
}

FP fp_powmod(const Field& F, FP base, uint64_t e, const FP& m) {
  FP r{1};
  base = fp_mod(F, std::move(base), m);
  while (e) {
    if (e & 1) r = fp_mod(F, fp_mul(F, r, base), m);
    base = fp_mod(F, fp_mul(F, base, base), m);
    e >>= 1;
  }
  return r;
}

FP fp_derivative(const Field& F, const FP& a) {
  FP d;
  for (size_t i = 1; i < a.size(); ++i) d.push_back(F.mul(a[i], F.from_int(int64_t(i))));
  fp_trim(d);
  return d;
}

FP fp_div_exact(const Field& F, const FP& a, const FP& b) {
  FP q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  FP r = a;
  Fel lead_inv = F.inv(b.back());
  while (r.size() >= b.size() && !r.empty()) {
    Fel c = F.mul(r.back(), lead_inv);
    size_t shift = r.size() - b.size();
    q[shift] = c;
    for (size_t i = 0; i < b.size(); ++i) r[shift + i] = F.sub(r[shift + i], F.mul(c, b[i]));
    fp_trim(r);
  }
  fp_trim(q);
  return q;
}

// Cantor-Zassenhaus: split a squarefree product of equal-degree-d irreducibles
void fp_edf(const Field& F, FP f, uint32_t d, Rng& rng, std::vector<FP>& out) {
  uint32_t deg = uint32_t(f.size() - 1);
  if (deg == d) {
    out.push_back(std::move(f));
    return;
  }
  while (true) {
    FP r(deg, 0);
    for (auto& c : r) c = Fel(rng.below(F.q()));
    fp_trim(r);
    if (r.empty()) continue;
    FP s;
    if (F.p() == 2) {
      // trace map over GF(2^k): sum r^(2^i), i < d*k
      s = r;
      FP acc = r;
      for (uint32_t i = 1; i < d * F.k(); ++i) {
        acc = fp_powmod(F, acc, 2, f);
        // s += acc
        if (s.size() < acc.size()) s.resize(acc.size(), 0);
        for (size_t j = 0; j < acc.size(); ++j) s[j] = F.add(s[j], acc[j]);
        fp_trim(s);
      }
    } else {
      uint64_t e = 1;
      for (uint32_t i = 0; i < d; ++i) e *= F.q();
      s = fp_powmod(F, r, (e - 1) / 2, f);
      if (s.empty())
        s = FP{F.neg(1)};
      else {
        if (s.size() < 1) s.resize(1, 0);
        s[0] = F.sub(s[0], 1);
        fp_trim(s);
      }
    }
    if (s.empty()) continue;
    FP g = fp_gcd(F, f, s);
    if (g.size() > 1 && g.size() < f.size()) {
      FP h = fp_div_exact(F, f, g);
      fp_edf(F, std::move(g), d, rng, out);
      fp_edf(F, std::move(h), d, rng, out);
      return;
    }
  }
}

// full factorization into monic irreducibles (multiplicity dropped)
std::vector<FP> fp_factor_distinct(const Field& F, FP f, Rng& rng) {
  std::vector<FP> out;
  fp_trim(f);
  if (f.size() <= 1) return out;
  if (f.back() != 1) {
    Fel inv = F.inv(f.back());
    for (auto& c : f) c = F.mul(c, inv);
  }
  // strip x factors
  size_t xs = 0;
  while (xs < f.size() && f[xs] == 0) ++xs;
  if (xs) {
    out.push_back(FP{0, 1});
    f.erase(f.begin(), f.begin() + xs);
  }
  if (f.size() <= 1) return out;
  // squarefree part: f / gcd(f, f'); repeated p-th power content handled by
  // iterating (good enough for distinct-factor extraction)
  for (int guard = 0; guard < 40 && f.size() > 1; ++guard) {
    FP der = fp_derivative(F, f);
    FP sf;
    if (der.empty()) {
      // f is a p-th power: f(x) = g(x^p); extract g by index division
      FP g((f.size() - 1) / F.p() + 1, 0);
      for (size_t i = 0; i < f.size(); i += F.p()) g[i / F.p()] = F.pow(f[i], int64_t(F.q() / F.p()));
      f = std::move(g);
      continue;
    }
    sf = fp_div_exact(F, f, fp_gcd(F, f, der));
    // distinct-degree on the squarefree part
    FP rem = sf;
    FP xq{0, 1};
    for (uint32_t d = 1; rem.size() > 1 && d <= rem.size() - 1; ++d) {
      xq = fp_powmod(F, std::move(xq), F.q(), rem);
      FP diff = xq;
      if (diff.size() < 2) diff.resize(2, 0);
      diff[1] = F.sub(diff[1], 1);
      fp_trim(diff);
      FP g = fp_gcd(F, rem, diff);
      if (g.size() > 1) {
        fp_edf(F, g, d, rng, out);
        rem = fp_div_exact(F, rem, g);
        xq = fp_mod(F, std::move(xq), rem.size() > 1 ? rem : FP{0, 1});
        if (rem.size() <= 1) break;
      }
    }
    if (rem.size() > 1) out.push_back(rem);
    // divide all found factors out of f and loop in case of multiplicities
    bool changed = true;
    while (changed && f.size() > 1) {
      changed = false;
      for (const auto& g : out) {
        if (g.size() <= 1 || g.size() > f.size()) continue;
        FP q = fp_div_exact(F, f, g);
        if (fp_mul(F, q, g) == f) {
          f = q;
          changed = true;
        }
      }
    }
    if (f.size() <= 1) break;
  }
  // dedupe
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// minimal polynomial of theta relative to vector v (monic)
FP relative_min_poly(const Field& F, const Matrix& theta, const Vec& v) {
  uint32_t n = theta.rows();
  // augmented echelon over [vector | power coefficients]
  std::vector<std::vector<Fel>> ech;
  std::vector<uint32_t> piv;
  Vec cur = v;
  for (uint32_t power = 0;; ++power) {
    std::vector<Fel> w(size_t(n) + power + 1, 0);
    for (uint32_t i = 0; i < n; ++i) w[i] = cur.at(i, 0);
    w[n + power] = 1;
    for (size_t r = 0; r < ech.size(); ++r) {
      Fel c = w[piv[r]];
      if (!c) continue;
      const auto& row = ech[r];
      for (size_t j = 0; j < row.size() && j < w.size(); ++j)
        if (row[j]) w[j] = F.sub(w[j], F.mul(c, row[j]));
    }
    uint32_t pv = n;
    for (uint32_t j = 0; j < n; ++j)
      if (w[j]) {
        pv = j;
        break;
      }
    if (pv == n) {
      FP m(w.begin() + n, w.end());
      fp_trim(m);
      if (!m.empty() && m.back() != 1) {
        Fel inv = F.inv(m.back());
        for (auto& c : m) c = F.mul(c, inv);
      }
      return m;
    }
    Fel inv = F.inv(w[pv]);
    if (inv != 1)
      for (auto& x : w) x = F.mul(x, inv);
    size_t pos = 0;
    while (pos < piv.size() && piv[pos] < pv) ++pos;
    ech.insert(ech.begin() + pos, std::move(w));
    piv.insert(piv.begin() + pos, pv);
    if (power >= n) fail("InternalError", "relative min poly did not terminate");
    cur = mul(theta, cur);
  }
}

Matrix eval_poly_at_matrix(const Field& F, const FP& f, const Matrix& theta) {
  Matrix r(theta.field(), theta.rows(), theta.rows());
  for (size_t i = f.size(); i-- > 0;) {
    r = mul(r, theta);
    if (f[i])
      for (uint32_t d = 0; d < theta.rows(); ++d) r.at(d, d) = F.add(r.at(d, d), f[i]);
  }
  return r;
}

// one representative per line of span(basis), or empty when over budget
std::vector<Vec> kernel_lines(const std::vector<Vec>& basis, const Field& F, uint32_t line_budget) {
  uint32_t d = uint32_t(basis.size());
  uint64_t count = 0, power = 1;
  for (uint32_t i = 0; i < d; ++i) {
    count += power;
    power *= F.q();
    if (count > line_budget) return {};
  }
  std::vector<Vec> lines;
  for (uint32_t lead = 0; lead < d; ++lead) {
    uint64_t combos = 1;
    for (uint32_t j = 0; j < lead; ++j) combos *= F.q();
    for (uint64_t c = 0; c < combos; ++c) {
      uint64_t x = c;
      Vec v = basis[lead];
      for (uint32_t j = 0; j < lead; ++j) {
        Fel cj = Fel(x % F.q());
        x /= F.q();
        if (cj) v = add(v, scale(basis[j], cj));
      }
      lines.push_back(std::move(v));
    }
  }
  return lines;
}

IrredResult norton_attempt(const Representation& M, const Matrix& theta, const ChopOptions& opts) {
  IrredResult res;
  auto rn = rank_nullspace(theta);
  if (rn.nullspace.empty()) return res;
  const Field& F = M.F();
  auto lines = kernel_lines(rn.nullspace, F, opts.line_budget);
  bool certifying = !lines.empty();
  const auto& probes = certifying ? lines : rn.nullspace;
  for (const auto& v : probes) {
    std::vector<Vec> basis;
    if (spin_dim(M.gens, v, M.field, M.dim, &basis) < M.dim) {
      res.status = Irred::Reducible;
      res.submodule = std::move(basis);
      return res;
    }
  }
  if (!certifying) return res;
  // dual side: one kernel vector of theta^T under transposed generators
  auto rnT = rank_nullspace(theta.transpose());
  std::vector<Matrix> gensT;
  for (const auto& g : M.gens) gensT.push_back(g.transpose());
  std::vector<Vec> dual_basis;
  if (spin_dim(gensT, rnT.nullspace[0], M.field, M.dim, &dual_basis) == M.dim) {
    res.status = Irred::Irreducible;
    return res;
  }
  // proper dual submodule: its perp is a proper submodule of M
  Matrix rows(M.field, uint32_t(dual_basis.size()), M.dim);
  for (uint32_t i = 0; i < dual_basis.size(); ++i)
    for (uint32_t j = 0; j < M.dim; ++j) rows.at(i, j) = dual_basis[i].at(j, 0);
  res.status = Irred::Reducible;
  res.submodule = rank_nullspace(rows).nullspace;
  return res;
}

}  // namespace

IrredResult irreducibility(const Representation& M, const ChopOptions& opts) {
  IrredResult res;
  if (M.dim == 0) fail("InvalidArgument", "zero module");
  if (M.dim == 1) {
    res.status = Irred::Irreducible;
    return res;
  }
  if (M.gens.empty()) {
    Vec e(M.field, M.dim, 1);
    e.at(0, 0) = 1;
    res.status = Irred::Reducible;
    res.submodule = {e};
    return res;
  }
  Rng rng(opts.seed + M.dim * 31 + uint64_t(M.gens.size()));
  const Field& Fq = M.F();
  for (int t = 0; t < opts.random_budget; ++t) {
    Matrix theta = random_algebra_element(M, rng);
    // singular elements come from irreducible factors of a relative minimal
    // polynomial of theta
    Vec v(M.field, M.dim, 1);
    for (uint32_t i = 0; i < M.dim; ++i) v.at(i, 0) = t == 0 ? Fel(i == 0) : Fel(rng.below(Fq.q()));
    if (v.is_zero()) v.at(0, 0) = 1;
    FP mp = relative_min_poly(Fq, theta, v);
    for (const auto& f : fp_factor_distinct(Fq, mp, rng)) {
      Matrix sing = eval_poly_at_matrix(Fq, f, theta);
      auto r = norton_attempt(M, sing, opts);
      if (r.status != Irred::Inconclusive) return r;
    }
  }
  if (M.dim <= opts.fallback_max_dim) {
    const Field& F = M.F();
    std::vector<Matrix> layer{Matrix::identity(M.field, M.dim)};
    for (int len = 1; len <= 3; ++len) {
      std::vector<Matrix> next;
      for (const auto& w : layer)
        for (const auto& g : M.gens) next.push_back(mul(w, g));
      for (const auto& w : next)
        for (Fel lam = 0; lam < F.q(); ++lam) {
          Matrix theta = w;
          for (uint32_t i = 0; i < M.dim; ++i) theta.at(i, i) = F.sub(theta.at(i, i), lam);
          auto r = norton_attempt(M, theta, opts);
          if (r.status != Irred::Inconclusive) return r;
        }
      layer = std::move(next);
    }
  }
  fail("InconclusiveIrreducibility",
       "randomized budget and deterministic fallback exhausted at dim " + std::to_string(M.dim));
}

std::vector<ChopFactor> chop(const Representation& M, const ChopOptions& opts) {
  if (M.dim < 1) fail("InvalidArgument", "chop needs dim >= 1");
  std::vector<Representation> factors;
  std::vector<Representation> stack{M};
  while (!stack.empty()) {
    Representation cur = std::move(stack.back());
    stack.pop_back();
    if (cur.dim == 0) continue;
    auto r = irreducibility(cur, opts);
    if (r.status == Irred::Irreducible) {
      factors.push_back(std::move(cur));
      continue;
    }
    stack.push_back(rep_on_submodule(cur, r.submodule));
    stack.push_back(rep_on_quotient(cur, r.submodule));
  }
  std::vector<ChopFactor> out;
  for (auto& f : factors) {
    bool matched = false;
    for (auto& g : out)
      if (g.rep.dim == f.dim && isomorphic(g.rep, f)) {
        ++g.multiplicity;
        matched = true;
        break;
      }
    if (!matched) out.push_back(ChopFactor{std::move(f), 1});
  }
  std::sort(out.begin(), out.end(),
            [](const ChopFactor& a, const ChopFactor& b) { return a.rep.dim < b.rep.dim; });
  return out;
}

BilinearFormSpace invariant_forms(const Representation& M, FormKind kind) {
  const Field& F = M.F();
  uint32_t d = M.dim;
  std::vector<std::pair<uint32_t, uint32_t>> cells;
  if (kind == FormKind::Alternating)
    cells = ext2_pairs(d);
  else if (kind == FormKind::Symmetric)
    cells = sym2_pairs(d);
  else
    for (uint32_t i = 0; i < d; ++i)
      for (uint32_t j = 0; j < d; ++j) cells.emplace_back(i, j);

  auto cell_index = [&](uint32_t i, uint32_t j) -> std::pair<uint32_t, int> {
    if (kind == FormKind::All) return {i * d + j, 1};
    if (kind == FormKind::Symmetric) return i <= j ? std::pair{sym2_index(d, i, j), 1}
                                                   : std::pair{sym2_index(d, j, i), 1};
    if (i == j) return {0u, 0};
    return i < j ? std::pair{ext2_index(d, i, j), 1} : std::pair{ext2_index(d, j, i), -1};
  };

  std::vector<std::vector<Fel>> rows;
  for (const auto& g : M.gens)
    for (const auto& [a, b] : cells) {
      std::vector<Fel> row(cells.size(), 0);
      // (g^T F g - F)(a, b) = 0
      for (uint32_t c = 0; c < d; ++c) {
        Fel gca = g.at(c, a);
        if (!gca) continue;
        for (uint32_t e = 0; e < d; ++e) {
          Fel geb = g.at(e, b);
          if (!geb) continue;
          auto [idx, sign] = cell_index(c, e);
          if (sign == 0) continue;
          Fel v = F.mul(gca, geb);
          if (sign < 0) v = F.neg(v);
          row[idx] = F.add(row[idx], v);
        }
      }
      auto [idx_ab, sign_ab] = cell_index(a, b);
      if (sign_ab != 0) row[idx_ab] = F.sub(row[idx_ab], sign_ab < 0 ? F.neg(1) : Fel(1));
      bool nz = false;
      for (Fel x : row) nz |= x != 0;
      if (nz) rows.push_back(std::move(row));
    }

  BilinearFormSpace out;
  out.kind = kind;
  std::vector<Vec> sols;
  if (rows.empty()) {
    for (uint32_t u = 0; u < cells.size(); ++u) {
      Vec v(M.field, uint32_t(cells.size()), 1);
      v.at(u, 0) = 1;
      sols.push_back(std::move(v));
    }
  } else {
    Matrix Sys(M.field, uint32_t(rows.size()), uint32_t(cells.size()));
    for (uint32_t r = 0; r < rows.size(); ++r)
      for (uint32_t c = 0; c < cells.size(); ++c) Sys.at(r, c) = rows[r][c];
    sols = rank_nullspace(Sys).nullspace;
  }
  for (const auto& s : sols) {
    Matrix G(M.field, d, d);
    for (uint32_t u = 0; u < cells.size(); ++u) {
      auto [i, j] = cells[u];
      Fel v = s.at(u, 0);
      if (kind == FormKind::All) {
        G.at(i, j) = v;
      } else if (kind == FormKind::Symmetric) {
        G.at(i, j) = v;
        G.at(j, i) = v;
      } else {
        G.at(i, j) = v;
        G.at(j, i) = F.neg(v);
      }
    }
    out.basis.push_back(std::move(G));
  }
  return out;
}

SubmoduleWitness form_radical(const Matrix& gram, const Representation& M) {
  if (gram.rows() != M.dim || gram.cols() != M.dim) fail("ShapeMismatch", "form_radical");
  SubmoduleWitness w;
  w.basis = rank_nullspace(gram.transpose()).nullspace;
  return w;
}

UniquenessVerdict form_uniqueness_verdict(const Representation& M, const ChopOptions& opts) {
  UniquenessVerdict out;
  auto factors = chop(M, opts);
  // semisimplicity: the socle (sum of all hom images from the factors) must
  // be the whole module
  Span socle(M.field, M.dim);
  for (const auto& f : factors)
    for (const auto& X : hom_space(f.rep, M))
      for (uint32_t c = 0; c < X.cols(); ++c) socle.insert(X.col(c));
  if (socle.dim() != M.dim) {
    out.verdict = Uniqueness::NotGuaranteed;
    out.reason = "module is not semisimple (socle has dimension " + std::to_string(socle.dim()) +
                 " of " + std::to_string(M.dim) + ")";
    return out;
  }
  bool all_ok = true;
  for (size_t i = 0; i < factors.size(); ++i) {
    const auto& f = factors[i];
    FactorReport fr;
    fr.dim = f.rep.dim;
    fr.multiplicity = f.multiplicity;
    Representation fd = dual_rep(f.rep);
    fr.self_dual = isomorphic(f.rep, fd);
    if (!fr.self_dual) {
      fr.form_type = "dual pair";
      bool found = false;
      for (size_t j = 0; j < factors.size() && !found; ++j) {
        if (j == i) continue;
        if (factors[j].rep.dim == f.rep.dim && isomorphic(factors[j].rep, fd)) {
          found = true;
          fr.ok = f.multiplicity == 1 && factors[j].multiplicity == 1;
          if (!fr.ok) fr.note = "non-self-dual factor or its dual has multiplicity > 1";
        }
      }
      if (!found) {
        fr.form_type = "dual missing";
        fr.ok = false;
        fr.note = "dual factor does not occur; no non-degenerate invariant pairing";
      }
    } else {
      auto alt = invariant_forms(f.rep, FormKind::Alternating);
      // in characteristic 2 both spaces can be nonzero; alternating wins
      if (alt.dim() > 0) {
        fr.form_type = "alternating";
        fr.ok = f.multiplicity == 1;
        if (!fr.ok) fr.note = "alternating-type factor must have multiplicity 1";
      } else if (invariant_forms(f.rep, FormKind::Symmetric).dim() > 0) {
        fr.form_type = "symmetric";
        fr.ok = f.multiplicity == 2;
        if (!fr.ok) fr.note = "symmetric-type factor must have multiplicity exactly 2";
      } else {
        fr.form_type = "none";
        fr.ok = false;
        fr.note = "self-dual factor carries no invariant form (not absolutely irreducible?)";
      }
    }
    all_ok = all_ok && fr.ok;
    out.factors.push_back(std::move(fr));
  }
  out.verdict = all_ok ? Uniqueness::Unique : Uniqueness::NotGuaranteed;
  if (!all_ok) out.reason = "multiplicity conditions violated";
  return out;
}

}  // namespace modlie
