#include "modlie/jordan.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "modlie/linalg.hpp"
#include "modlie/util.hpp"

namespace modlie {

uint32_t Partition::total() const { return std::accumulate(parts.begin(), parts.end(), 0u); }

bool Partition::dominates(const Partition& o) const {
  uint32_t a = 0, b = 0;
  size_t n = std::max(parts.size(), o.parts.size());
  for (size_t i = 0; i < n; ++i) {
    a += i < parts.size() ? parts[i] : 0;
    b += i < o.parts.size() ? o.parts[i] : 0;
    if (a < b) return false;
  }
  return total() == o.total();
}

std::string Partition::str() const {
  std::ostringstream ss;
  size_t i = 0;
  bool first = true;
  while (i < parts.size()) {
    size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    if (!first) ss << ",";
    first = false;
    ss << parts[i];
    if (j - i > 1) ss << "^" << (j - i);
    i = j;
  }
  if (first) ss << "0";
  return ss.str();
}

Partition parse_partition(const std::string& s) {
  Partition p;
  std::string tok;
  std::istringstream ss(s);
  while (std::getline(ss, tok, ',')) {
    size_t caret = tok.find('^');
    uint32_t part = uint32_t(std::stoul(tok.substr(0, caret)));
    uint32_t mult = caret == std::string::npos ? 1 : uint32_t(std::stoul(tok.substr(caret + 1)));
    for (uint32_t i = 0; i < mult; ++i) p.parts.push_back(part);
  }
  std::sort(p.parts.rbegin(), p.parts.rend());
  return p;
}

bool is_nilpotent(const Matrix& A) {
  if (A.rows() != A.cols()) return false;
  return pow(A, A.rows()).is_zero();
}

namespace {

// rank(A^i) for i = 0..(first zero power); last entry is 0
std::vector<uint32_t> rank_sequence(const Matrix& A) {
  std::vector<uint32_t> rs{A.rows()};
  Matrix P = A;
  while (true) {
    uint32_t r = rank(P);
    rs.push_back(r);
    if (r == 0) break;
    if (rs.size() > A.rows() + 1) fail("NotNilpotent", "rank sequence does not reach zero");
    P = mul(P, A);
  }
  return rs;
}

Partition partition_from_ranks(const std::vector<uint32_t>& rs) {
  // #{parts >= i} = rank(A^{i-1}) - rank(A^i)
  Partition p;
  std::vector<uint32_t> count;
  for (size_t i = 1; i < rs.size(); ++i) count.push_back(rs[i - 1] - rs[i]);
  for (size_t i = 0; i < count.size(); ++i) {
    uint32_t next = i + 1 < count.size() ? count[i + 1] : 0;
    uint32_t exactly = count[i] >= next ? count[i] - next : 0;
    for (uint32_t t = 0; t < exactly; ++t) p.parts.push_back(uint32_t(i + 1));
  }
  std::sort(p.parts.rbegin(), p.parts.rend());
  return p;
}

}  // namespace

Partition nilpotent_jordan_partition(const Matrix& A) {
  if (A.rows() != A.cols()) fail("NotNilpotent", "matrix is not square");
  if (!is_nilpotent(A)) fail("NotNilpotent", "A^n is nonzero");
  if (A.rows() == 0) return {};
  return partition_from_ranks(rank_sequence(A));
}

PencilProfile pencil_profile(const Matrix& A, const Matrix& B) {
  if (A.rows() != A.cols() || B.rows() != B.cols() || A.rows() != B.rows())
    fail("ShapeMismatch", "pencil matrices must be square of equal size");
  if (!A.field()->same(*B.field())) fail("FieldMismatch", "pencil over two fields");
  const Field& F = *A.field();
  const uint32_t n = A.rows();
  if (!is_nilpotent(A)) fail("NotNilpotentPencil", "A is not nilpotent");
  if (!is_nilpotent(B)) fail("NotNilpotentPencil", "B is not nilpotent");

  // evaluate at every field element; full verification at each point
  std::vector<std::vector<uint32_t>> ranks(F.q());
  std::vector<Partition> parts(F.q());
  uint32_t max_degree = 0;
  for (Fel x = 0; x < F.q(); ++x) {
    Matrix M = add(A, scale(B, x));
    if (!is_nilpotent(M))
      fail("NotNilpotentPencil", "A + xB not nilpotent at x = " + std::to_string(x));
    ranks[x] = rank_sequence(M);
    parts[x] = partition_from_ranks(ranks[x]);
    uint32_t deg = parts[x].parts.empty() ? 0 : parts[x].parts.front();
    max_degree = std::max(max_degree, deg);
  }

  // determinantal-minor degree bound for the sampled maximum to be generic
  if (uint64_t(F.q()) <= uint64_t(max_degree) * n)
    fail("FieldTooSmall", "need |field| > " + std::to_string(uint64_t(max_degree) * n) +
                              " (nilpotency degree " + std::to_string(max_degree) + " times size " +
                              std::to_string(n) + "); extend the field");

  // coordinatewise-maximal rank sequence = generic rank sequence
  size_t len = 0;
  for (const auto& rs : ranks) len = std::max(len, rs.size());
  std::vector<uint32_t> gen_rs(len, 0);
  for (const auto& rs : ranks)
    for (size_t i = 0; i < len; ++i) gen_rs[i] = std::max(gen_rs[i], i < rs.size() ? rs[i] : 0);
  Partition generic = partition_from_ranks(gen_rs);

  // the generic sequence must actually be attained somewhere
  bool attained = false;
  for (Fel x = 0; x < F.q() && !attained; ++x) attained = parts[x] == generic;
  if (!attained) fail("FieldTooSmall", "no sample point attains the generic rank sequence");

  PencilProfile out;
  out.generic = std::move(generic);
  for (Fel x = 0; x < F.q(); ++x)
    if (!(parts[x] == out.generic)) out.exceptional.emplace_back(x, parts[x]);
  return out;
}

}  // namespace modlie
