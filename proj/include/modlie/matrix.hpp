#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "modlie/field.hpp"

namespace modlie {

/// Dense row-major matrix over a shared Field. Value semantics; all
/// operations are exact and deterministic.
class Matrix {
public:
  Matrix() = default;
  Matrix(FieldPtr f, uint32_t rows, uint32_t cols)
      : f_(std::move(f)), rows_(rows), cols_(cols), a_(size_t(rows) * cols, 0) {}

  static Matrix identity(FieldPtr f, uint32_t n);
  static Matrix zero(FieldPtr f, uint32_t rows, uint32_t cols) { return Matrix(std::move(f), rows, cols); }
  /// entries given row-major as integers, reduced into the prime subfield
  static Matrix from_ints(FieldPtr f, uint32_t rows, uint32_t cols, std::initializer_list<int64_t> vals);

  const FieldPtr& field() const { return f_; }
  uint32_t rows() const { return rows_; }
  uint32_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Fel& at(uint32_t r, uint32_t c) { return a_[size_t(r) * cols_ + c]; }
  Fel at(uint32_t r, uint32_t c) const { return a_[size_t(r) * cols_ + c]; }
  std::span<Fel> row(uint32_t r) { return {a_.data() + size_t(r) * cols_, cols_}; }
  std::span<const Fel> row(uint32_t r) const { return {a_.data() + size_t(r) * cols_, cols_}; }
  const std::vector<Fel>& data() const { return a_; }
  std::vector<Fel>& data() { return a_; }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_ && (!f_ || !o.f_ || f_->same(*o.f_));
  }

  bool is_zero() const;
  bool is_identity() const;

  Matrix transpose() const;
  Matrix col(uint32_t c) const;  // as rows x 1
  void set_col(uint32_t c, const Matrix& v);

private:
  FieldPtr f_;
  uint32_t rows_ = 0, cols_ = 0;
  std::vector<Fel> a_;
};

/// column vector convenience (n x 1 matrices)
using Vec = Matrix;

Vec vec_from_ints(FieldPtr f, std::initializer_list<int64_t> vals);

Matrix add(const Matrix& A, const Matrix& B);
Matrix sub(const Matrix& A, const Matrix& B);
Matrix neg(const Matrix& A);
Matrix scale(const Matrix& A, Fel c);
/// cache-blocked product; bit-identical at every thread count
Matrix mul(const Matrix& A, const Matrix& B);
Matrix mul(const Matrix& A, const Matrix& B, const Matrix& C);
Matrix pow(const Matrix& A, uint64_t e);
Matrix kron(const Matrix& A, const Matrix& B);
Fel trace(const Matrix& A);

/// global worker count for the blocked kernels (CLI --threads); results do
/// not depend on it
void set_thread_count(unsigned n);
unsigned thread_count();

}  // namespace modlie
