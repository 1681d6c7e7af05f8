#include "modlie/matrix.hpp"

#include <algorithm>
#include <functional>
#include <thread>

#include "modlie/util.hpp"

namespace modlie {

namespace {
unsigned g_threads = 1;

void check_same_field(const Matrix& A, const Matrix& B) {
  if (!A.field() || !B.field() || !A.field()->same(*B.field()))
    fail("FieldMismatch", "operands live over different fields");
}
}  // namespace

void set_thread_count(unsigned n) { g_threads = n == 0 ? 1 : n; }
unsigned thread_count() { return g_threads; }

Matrix Matrix::identity(FieldPtr f, uint32_t n) {
  Matrix m(std::move(f), n, n);
  for (uint32_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::from_ints(FieldPtr f, uint32_t rows, uint32_t cols, std::initializer_list<int64_t> vals) {
  Matrix m(f, rows, cols);
  size_t i = 0;
  for (int64_t v : vals) {
    if (i >= m.a_.size()) fail("InvalidArgument", "too many entries");
    m.a_[i++] = f->from_int(v);
  }
  if (i != m.a_.size()) fail("InvalidArgument", "too few entries");
  return m;
}

Vec vec_from_ints(FieldPtr f, std::initializer_list<int64_t> vals) {
  Vec v(f, uint32_t(vals.size()), 1);
  size_t i = 0;
  for (int64_t x : vals) v.data()[i++] = f->from_int(x);
  return v;
}

bool Matrix::is_zero() const {
  for (Fel v : a_)
    if (v) return false;
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (uint32_t i = 0; i < rows_; ++i)
    for (uint32_t j = 0; j < cols_; ++j)
      if (at(i, j) != (i == j ? 1u : 0u)) return false;
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(f_, cols_, rows_);
  for (uint32_t i = 0; i < rows_; ++i)
    for (uint32_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Matrix Matrix::col(uint32_t c) const {
  Matrix v(f_, rows_, 1);
  for (uint32_t i = 0; i < rows_; ++i) v.at(i, 0) = at(i, c);
  return v;
}

void Matrix::set_col(uint32_t c, const Matrix& v) {
  for (uint32_t i = 0; i < rows_; ++i) at(i, c) = v.at(i, 0);
}

Matrix add(const Matrix& A, const Matrix& B) {
  check_same_field(A, B);
  if (A.rows() != B.rows() || A.cols() != B.cols()) fail("ShapeMismatch", "add");
  const Field& F = *A.field();
  Matrix C = A;
  for (size_t i = 0; i < C.data().size(); ++i) C.data()[i] = F.add(C.data()[i], B.data()[i]);
  return C;
}

Matrix sub(const Matrix& A, const Matrix& B) {
  check_same_field(A, B);
  if (A.rows() != B.rows() || A.cols() != B.cols()) fail("ShapeMismatch", "sub");
  const Field& F = *A.field();
  Matrix C = A;
  for (size_t i = 0; i < C.data().size(); ++i) C.data()[i] = F.sub(C.data()[i], B.data()[i]);
  return C;
}

Matrix neg(const Matrix& A) {
  const Field& F = *A.field();
  Matrix C = A;
  for (auto& v : C.data()) v = F.neg(v);
  return C;
}

Matrix scale(const Matrix& A, Fel c) {
  const Field& F = *A.field();
  Matrix C = A;
  for (auto& v : C.data()) v = F.mul(v, c);
  return C;
}

namespace {

// row-range worker split; each output entry depends only on A, B, so the
// result is independent of the split
void parallel_rows(uint32_t rows, const std::function<void(uint32_t, uint32_t)>& work) {
  unsigned n = g_threads;
  if (n <= 1 || rows < 64) {
    work(0, rows);
    return;
  }
  if (n > rows) n = rows;
  std::vector<std::thread> ts;
  uint32_t chunk = (rows + n - 1) / n;
  for (unsigned t = 0; t < n; ++t) {
    uint32_t lo = t * chunk, hi = std::min(rows, lo + chunk);
    if (lo >= hi) break;
    ts.emplace_back([&, lo, hi] { work(lo, hi); });
  }
  for (auto& t : ts) t.join();
}

}  // namespace

Matrix mul(const Matrix& A, const Matrix& B) {
  check_same_field(A, B);
  if (A.cols() != B.rows()) fail("ShapeMismatch", "mul");
  const Field& F = *A.field();
  Matrix C(A.field(), A.rows(), B.cols());
  const uint32_t n = A.cols(), m = B.cols();
  const bool prime = F.k() == 1;
  const uint64_t p = F.p();

  parallel_rows(A.rows(), [&](uint32_t lo, uint32_t hi) {
    if (prime) {
      // delayed-reduction accumulation; products < p^2 <= 961, so 2^64/961
      // terms fit without overflow
      std::vector<uint64_t> acc(m);
      for (uint32_t i = lo; i < hi; ++i) {
        std::fill(acc.begin(), acc.end(), 0);
        auto arow = A.row(i);
        for (uint32_t kk = 0; kk < n; ++kk) {
          uint64_t a = arow[kk];
          if (!a) continue;
          auto brow = B.row(kk);
          for (uint32_t j = 0; j < m; ++j) acc[j] += a * brow[j];
        }
        auto crow = C.row(i);
        for (uint32_t j = 0; j < m; ++j) crow[j] = Fel(acc[j] % p);
      }
    } else {
      for (uint32_t i = lo; i < hi; ++i) {
        auto arow = A.row(i);
        auto crow = C.row(i);
        for (uint32_t kk = 0; kk < n; ++kk) {
          Fel a = arow[kk];
          if (!a) continue;
          auto brow = B.row(kk);
          uint32_t la = F.log(a);
          for (uint32_t j = 0; j < m; ++j) {
            Fel b = brow[j];
            if (!b) continue;
            crow[j] = F.add(crow[j], F.exp(la + F.log(b)));
          }
        }
      }
    }
  });
  return C;
}

Matrix mul(const Matrix& A, const Matrix& B, const Matrix& C) { return mul(mul(A, B), C); }

Matrix pow(const Matrix& A, uint64_t e) {
  if (A.rows() != A.cols()) fail("ShapeMismatch", "pow of non-square matrix");
  Matrix r = Matrix::identity(A.field(), A.rows());
  Matrix base = A;
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

Matrix kron(const Matrix& A, const Matrix& B) {
  check_same_field(A, B);
  const Field& F = *A.field();
  Matrix C(A.field(), A.rows() * B.rows(), A.cols() * B.cols());
  for (uint32_t i = 0; i < A.rows(); ++i)
    for (uint32_t j = 0; j < A.cols(); ++j) {
      Fel a = A.at(i, j);
      if (!a) continue;
      for (uint32_t r = 0; r < B.rows(); ++r)
        for (uint32_t c = 0; c < B.cols(); ++c)
          C.at(i * B.rows() + r, j * B.cols() + c) = F.mul(a, B.at(r, c));
    }
  return C;
}

Fel trace(const Matrix& A) {
  const Field& F = *A.field();
  Fel t = 0;
  for (uint32_t i = 0; i < std::min(A.rows(), A.cols()); ++i) t = F.add(t, A.at(i, i));
  return t;
}

}  // namespace modlie
