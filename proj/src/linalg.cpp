#include "modlie/linalg.hpp"

#include <algorithm>

#include "modlie/util.hpp"

namespace modlie {

std::vector<uint32_t> rref(Matrix& A) {
  const Field& F = *A.field();
  std::vector<uint32_t> pivots;
  uint32_t r = 0;
  for (uint32_t c = 0; c < A.cols() && r < A.rows(); ++c) {
    uint32_t pr = r;
    while (pr < A.rows() && A.at(pr, c) == 0) ++pr;
    if (pr == A.rows()) continue;
    if (pr != r)
      for (uint32_t j = c; j < A.cols(); ++j) std::swap(A.at(pr, j), A.at(r, j));
    Fel inv = F.inv(A.at(r, c));
    if (inv != 1)
      for (uint32_t j = c; j < A.cols(); ++j) A.at(r, j) = F.mul(A.at(r, j), inv);
    for (uint32_t i = 0; i < A.rows(); ++i) {
      if (i == r) continue;
      Fel v = A.at(i, c);
      if (!v) continue;
      uint32_t lv = F.log(v);
      auto src = A.row(r), dst = A.row(i);
      for (uint32_t j = c; j < A.cols(); ++j) {
        Fel s = src[j];
        if (s) dst[j] = F.sub(dst[j], F.exp(lv + F.log(s)));
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

uint32_t rank(Matrix A) { return uint32_t(rref(A).size()); }

RankNullspace rank_nullspace(const Matrix& A) {
  RankNullspace out;
  if (A.cols() == 0) return out;
  Matrix R = A;
  auto pivots = rref(R);
  out.rank = uint32_t(pivots.size());
  const Field& F = *A.field();
  std::vector<bool> is_pivot(A.cols(), false);
  for (uint32_t c : pivots) is_pivot[c] = true;
  // one kernel vector per free column: 1 at the free column, minus the pivot
  // row entries at pivot positions; this is already the reduced-column-echelon
  // canonical basis (identity on the free coordinates)
  for (uint32_t c = 0; c < A.cols(); ++c) {
    if (is_pivot[c]) continue;
    Vec v(A.field(), A.cols(), 1);
    v.at(c, 0) = 1;
    for (uint32_t r = 0; r < pivots.size(); ++r) v.at(pivots[r], 0) = F.neg(R.at(r, c));
    out.nullspace.push_back(std::move(v));
  }
  out.nullspace = column_canonical_basis(out.nullspace, A.field(), A.cols());
  return out;
}

std::optional<Matrix> inverse(const Matrix& A) {
  if (A.rows() != A.cols()) return std::nullopt;
  const Field& F = *A.field();
  uint32_t n = A.rows();
  Matrix W(A.field(), n, 2 * n);
  for (uint32_t i = 0; i < n; ++i) {
    for (uint32_t j = 0; j < n; ++j) W.at(i, j) = A.at(i, j);
    W.at(i, n + i) = 1;
  }
  auto pivots = rref(W);
  if (pivots.size() != n) return std::nullopt;
  for (uint32_t i = 0; i < n; ++i)
    if (pivots[i] != i) return std::nullopt;
  Matrix inv(A.field(), n, n);
  for (uint32_t i = 0; i < n; ++i)
    for (uint32_t j = 0; j < n; ++j) inv.at(i, j) = W.at(i, n + j);
  (void)F;
  return inv;
}

bool is_invertible(const Matrix& A) { return A.rows() == A.cols() && rank(A) == A.rows(); }

std::optional<Vec> solve(const Matrix& A, const Vec& b) {
  if (b.rows() != A.rows()) fail("ShapeMismatch", "solve");
  Matrix W(A.field(), A.rows(), A.cols() + 1);
  for (uint32_t i = 0; i < A.rows(); ++i) {
    for (uint32_t j = 0; j < A.cols(); ++j) W.at(i, j) = A.at(i, j);
    W.at(i, A.cols()) = b.at(i, 0);
  }
  auto pivots = rref(W);
  if (!pivots.empty() && pivots.back() == A.cols()) return std::nullopt;  // inconsistent
  Vec x(A.field(), A.cols(), 1);
  for (uint32_t r = 0; r < pivots.size(); ++r) x.at(pivots[r], 0) = W.at(r, A.cols());
  return x;
}

Matrix row_space_basis(const Matrix& A) {
  Matrix R = A;
  auto pivots = rref(R);
  Matrix B(A.field(), uint32_t(pivots.size()), A.cols());
  for (uint32_t i = 0; i < pivots.size(); ++i)
    for (uint32_t j = 0; j < A.cols(); ++j) B.at(i, j) = R.at(i, j);
  return B;
}

Matrix cols_to_matrix(const std::vector<Vec>& vs, FieldPtr f, uint32_t dim) {
  Matrix M(f, dim, uint32_t(vs.size()));
  for (uint32_t c = 0; c < vs.size(); ++c) {
    if (vs[c].rows() != dim || vs[c].cols() != 1) fail("ShapeMismatch", "cols_to_matrix");
    for (uint32_t r = 0; r < dim; ++r) M.at(r, c) = vs[c].at(r, 0);
  }
  return M;
}

std::vector<Vec> matrix_to_cols(const Matrix& A) {
  std::vector<Vec> out;
  out.reserve(A.cols());
  for (uint32_t c = 0; c < A.cols(); ++c) out.push_back(A.col(c));
  return out;
}

std::vector<Vec> column_canonical_basis(const std::vector<Vec>& vs, FieldPtr f, uint32_t dim) {
  if (vs.empty()) return {};
  Matrix rows(f, uint32_t(vs.size()), dim);
  for (uint32_t i = 0; i < vs.size(); ++i)
    for (uint32_t j = 0; j < dim; ++j) rows.at(i, j) = vs[i].at(j, 0);
  Matrix B = row_space_basis(rows);
  std::vector<Vec> out;
  for (uint32_t i = 0; i < B.rows(); ++i) {
    Vec v(f, dim, 1);
    for (uint32_t j = 0; j < dim; ++j) v.at(j, 0) = B.at(i, j);
    out.push_back(std::move(v));
  }
  return out;
}

bool in_column_span(const Matrix& basis, const Vec& v) {
  if (basis.cols() == 0) return v.is_zero();
  return solve(basis, v).has_value();
}

Span::Span(FieldPtr f, uint32_t dim) : f_(std::move(f)), ambient_(dim) {}

void Span::reduce(std::vector<Fel>& v) const {
  const Field& F = *f_;
  for (size_t r = 0; r < rows_.size(); ++r) {
    Fel c = v[pivots_[r]];
    if (!c) continue;
    uint32_t lc = F.log(c);
    const auto& row = rows_[r];
    for (uint32_t j = pivots_[r]; j < ambient_; ++j) {
      Fel s = row[j];
      if (s) v[j] = F.sub(v[j], F.exp(lc + F.log(s)));
    }
  }
}

bool Span::insert(Vec v) {
  if (v.rows() != ambient_ || v.cols() != 1) fail("ShapeMismatch", "Span::insert");
  const Field& F = *f_;
  std::vector<Fel> w(v.data());
  reduce(w);
  uint32_t piv = ambient_;
  for (uint32_t j = 0; j < ambient_; ++j)
    if (w[j]) {
      piv = j;
      break;
    }
  if (piv == ambient_) return false;
  Fel inv = F.inv(w[piv]);
  if (inv != 1)
    for (uint32_t j = piv; j < ambient_; ++j) w[j] = F.mul(w[j], inv);
  // keep rows sorted by pivot for deterministic reduce order
  size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < piv) ++pos;
  rows_.insert(rows_.begin() + pos, std::move(w));
  pivots_.insert(pivots_.begin() + pos, piv);
  return true;
}

bool Span::contains(Vec v) const {
  std::vector<Fel> w(v.data());
  reduce(w);
  for (Fel x : w)
    if (x) return false;
  return true;
}

std::vector<Vec> Span::basis_vectors() const {
  std::vector<Vec> out;
  for (const auto& r : rows_) {
    Vec v(f_, ambient_, 1);
    v.data() = r;
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<Vec> Span::canonical_basis() const {
  return column_canonical_basis(basis_vectors(), f_, ambient_);
}

}  // namespace modlie
