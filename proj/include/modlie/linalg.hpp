#pragma once

#include <optional>

#include "modlie/matrix.hpp"

namespace modlie {

/// in-place reduced row echelon form; returns pivot column indices
std::vector<uint32_t> rref(Matrix& A);

uint32_t rank(Matrix A);

struct RankNullspace {
  uint32_t rank = 0;
  std::vector<Vec> nullspace;  // reduced-column-echelon canonical basis
};

/// basis of {v : Av = 0}; rank + |basis| = cols
RankNullspace rank_nullspace(const Matrix& A);

std::optional<Matrix> inverse(const Matrix& A);
bool is_invertible(const Matrix& A);

/// one solution of Ax = b, if any
std::optional<Vec> solve(const Matrix& A, const Vec& b);

/// Canonicalize a spanning set: returns a basis of the row space in RREF.
Matrix row_space_basis(const Matrix& A);

/// Canonicalize a list of column vectors to the reduced-column-echelon basis
/// of their span (transpose-RREF-transpose).
std::vector<Vec> column_canonical_basis(const std::vector<Vec>& vs, FieldPtr f, uint32_t dim);

/// stack vectors as the columns of a matrix
Matrix cols_to_matrix(const std::vector<Vec>& vs, FieldPtr f, uint32_t dim);
std::vector<Vec> matrix_to_cols(const Matrix& A);

/// true if v lies in the span of the columns of basis (basis need not be canonical)
bool in_column_span(const Matrix& basis, const Vec& v);

/// Incremental echelon span tracker for spinning algorithms. Keeps a
/// row-echelon basis (not reduced) plus pivot bookkeeping; insertion is
/// O(dim * current_rank).
class Span {
public:
  Span(FieldPtr f, uint32_t dim);

  /// reduce v against the basis; if a nonzero remainder survives, add it and
  /// return true
  bool insert(Vec v);
  /// true if v is in the span
  bool contains(Vec v) const;
  uint32_t dim() const { return uint32_t(rows_.size()); }
  uint32_t ambient() const { return ambient_; }
  /// the raw (insertion-order-independent echelon) vectors
  std::vector<Vec> basis_vectors() const;
  /// canonical reduced-column-echelon basis of the span
  std::vector<Vec> canonical_basis() const;

private:
  void reduce(std::vector<Fel>& v) const;

  FieldPtr f_;
  uint32_t ambient_;
  std::vector<std::vector<Fel>> rows_;   // echelon rows, pivot normalized to 1
  std::vector<uint32_t> pivots_;         // pivot index per row
};

}  // namespace modlie
