#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace modlie {

/// Roots of a simple type in a fixed integer-coordinate realization
/// (Bourbaki numbering of simple roots; half-integer realizations are scaled
/// by 2). Positive roots come first, sorted by height then lexicographically,
/// with the simple roots occupying the first `rank` slots; root i + num_positive
/// is the negative of root i.
struct RootSystem {
  char type = 0;  // 'A'..'G'
  uint32_t rank = 0;
  uint32_t ambient = 0;
  std::vector<std::vector<int32_t>> roots;
  uint32_t num_positive = 0;
  std::vector<uint32_t> pos_heights;  // heights of the positive roots

  std::map<std::vector<int32_t>, uint32_t> index;

  uint32_t size() const { return uint32_t(roots.size()); }
  bool is_root(const std::vector<int32_t>& v) const { return index.count(v) != 0; }
  /// index of roots[i] + roots[j], or -1 when the sum is not a root
  int32_t sum_index(uint32_t i, uint32_t j) const;
  int32_t negative_index(uint32_t i) const {
    return i < num_positive ? int32_t(i + num_positive) : int32_t(i - num_positive);
  }

  int64_t inner(uint32_t i, uint32_t j) const;
  /// <roots[i], roots[j]^vee> = 2 (r_i, r_j) / (r_j, r_j)
  int32_t cartan_pairing(uint32_t i, uint32_t j) const;
  uint32_t height(uint32_t positive_index) const;

  /// coefficients of the coroot of roots[i] over the simple coroots (integer)
  std::vector<int64_t> coroot_coefficients(uint32_t i) const;

  /// upper covers in the positive-root poset (gamma covers beta when
  /// gamma - beta is a simple root)
  std::vector<std::vector<uint32_t>> upper_covers() const;

  /// max k >= 0 with beta - k*alpha a root (alpha, beta root indices)
  uint32_t string_down(uint32_t alpha, uint32_t beta) const;

private:
  std::vector<int64_t> coroot_coefficients_impl(uint32_t i) const;
};

RootSystem build_root_system(char type, uint32_t rank);

struct SumFreeResult {
  uint32_t size = 0;
  std::vector<uint32_t> witness;       // root indices, pairwise sum-free
  uint64_t nodes_explored = 0;
};

/// maximum cardinality of a set S of roots with alpha + beta neither a root
/// nor zero for all alpha, beta in S; searched over upper sets of the
/// positive-root poset (valid by the Borel fixed-point reduction), witness is
/// the lexicographically least optimum
SumFreeResult max_sum_free_root_set(const RootSystem& R);

/// brute-force variant over arbitrary subsets of all roots (validation for
/// small ranks)
SumFreeResult max_sum_free_root_set_exhaustive(const RootSystem& R);

struct AbelianBoundQuery {
  char type;
  uint32_t rank;
  uint32_t p;  // 0 = characteristic zero
  uint32_t result = 0;
  uint32_t search_size = 0;         // combinatorial part
  uint32_t central_correction = 0;  // characteristic-dependent center part
  uint32_t formula_value = 0;       // closed-form value, must equal result
  std::vector<uint32_t> witness;
};

/// maximal dimension of an abelian subalgebra of the simple Lie algebra of
/// the given type in characteristic p; errors with OutsideValidity when the
/// hypotheses (p != 2 for B/C/F4, p not in {2,3} for G2, rank ranges) fail
AbelianBoundQuery max_abelian_dimension(char type, uint32_t rank, uint32_t p);

}  // namespace modlie
