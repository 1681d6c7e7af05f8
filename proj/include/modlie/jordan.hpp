#pragma once

#include "modlie/matrix.hpp"

namespace modlie {

/// Jordan block sizes, weakly decreasing.
struct Partition {
  std::vector<uint32_t> parts;

  uint32_t total() const;
  bool operator==(const Partition&) const = default;
  bool operator<(const Partition& o) const { return parts < o.parts; }
  /// dominance order: this >= o coordinatewise on prefix sums
  bool dominates(const Partition& o) const;
  std::string str() const;  // e.g. "5^2,3,1"
};

/// parse "5^2,3,1" (and "1^5" etc.)
Partition parse_partition(const std::string& s);

bool is_nilpotent(const Matrix& A);

/// Jordan block sizes of a nilpotent matrix, from the rank sequence of its
/// powers: #{parts >= i} = rank(A^{i-1}) - rank(A^i).
Partition nilpotent_jordan_partition(const Matrix& A);

struct PencilProfile {
  Partition generic;
  std::vector<std::pair<Fel, Partition>> exceptional;  // sorted by field element
};

/// Jordan type of A + xB across the whole field: the generic type (the
/// coordinatewise-maximal rank sequence, guaranteed correct by the
/// determinantal-minor degree bound when |field| > n * rows for n the maximal
/// nilpotency degree met) plus every x whose type differs. Errors with
/// NotNilpotentPencil if some A + xB is not nilpotent and FieldTooSmall when
/// the degree bound fails.
PencilProfile pencil_profile(const Matrix& A, const Matrix& B);

}  // namespace modlie
