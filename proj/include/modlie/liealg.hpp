#pragma once

#include <functional>
#include <optional>
#include <string>

#include "modlie/linalg.hpp"
#include "modlie/matrix.hpp"
#include "modlie/roots.hpp"

namespace modlie {

/// Bilinear bracket on a finite-dimensional space given by structure
/// constants c_{ij}^m with [e_i, e_j] = sum_m c_{ij}^m e_m.
struct StructureConstants {
  FieldPtr field;
  uint32_t dim = 0;
  std::vector<Fel> table;  // flattened i*dim*dim + j*dim + m

  Fel c(uint32_t i, uint32_t j, uint32_t m) const {
    return table[(size_t(i) * dim + j) * dim + m];
  }
  void set(uint32_t i, uint32_t j, uint32_t m, Fel v) {
    table[(size_t(i) * dim + j) * dim + m] = v;
  }
  /// antisymmetry including the zero diagonal required in characteristic 2
  bool antisymmetric() const;

  Vec bracket(const Vec& x, const Vec& y) const;
  Matrix ad(uint32_t i) const;      // ad(e_i)
  Matrix ad_vec(const Vec& x) const;
};

StructureConstants make_structure_constants(FieldPtr f, uint32_t dim);

/// serialize / parse the GFLIE v1 format
std::string write_gflie(const StructureConstants& L);
StructureConstants read_gflie_string(const std::string& text);
StructureConstants read_gflie_file(const std::string& path);

struct JacobiReport {
  bool is_lie = false;
  std::vector<std::array<uint32_t, 3>> violations;
};

/// checks [[e_i,e_j],e_k] + cyclic = 0 on all basis triples i < j < k
JacobiReport jacobi_residual(const StructureConstants& L, size_t max_violations = 32);

struct AlgebraProfile {
  uint32_t dim = 0;
  uint32_t center_dim = 0;
  uint32_t derived_dim = 0;
  uint32_t killing_rank = 0;
  bool is_abelian = false;
  bool solvable = false;
  std::optional<uint32_t> nilpotency_class;  // empty when not nilpotent
};

AlgebraProfile algebra_profile(const StructureConstants& L);

/// abstract bracket so the subalgebra machinery also runs over brackets that
/// are computed on demand (the symplectic ambient at large dimension)
struct BracketOp {
  FieldPtr field;
  uint32_t dim = 0;
  std::function<Vec(const Vec&, const Vec&)> apply;
};

BracketOp bracket_of(const StructureConstants& L);

struct GeneratedSubalgebra {
  std::vector<Vec> basis;  // canonical; valid also when capped (prefix found)
  bool cap_exceeded = false;
  uint32_t dim() const { return uint32_t(basis.size()); }
};

/// closure of the span of the seeds under the bracket; stops early once the
/// dimension exceeds cap (cap_exceeded = true, a result rather than an error)
GeneratedSubalgebra subalgebra_generate(const BracketOp& B, const std::vector<Vec>& seeds, uint32_t cap);

bool is_abelian_subspace(const BracketOp& B, const std::vector<Vec>& basis);

struct AbelianWitness {
  uint32_t dim = 0;
  std::vector<Vec> basis;
};

/// Searches inside the subalgebra spanned by `basis` (must be closed under
/// the bracket) for an abelian subalgebra of dimension > bound. Sound but
/// incomplete: a result always carries an explicit verified witness.
std::optional<AbelianWitness> largest_abelian_in(const BracketOp& B, const std::vector<Vec>& basis,
                                                 uint32_t bound);

/// restrict a bracket to a subalgebra basis (coordinates in that basis)
StructureConstants restrict_bracket(const BracketOp& B, const std::vector<Vec>& basis);

struct TypeLabel {
  bool recognized = false;
  char type = 0;
  uint32_t rank = 0;
  std::string reason;  // why unrecognized
  std::string str() const;
};

/// coarse identification against live-constructed Chevalley references;
/// returns Unrecognized rather than guessing when invariants collide
TypeLabel identify_simple_type(const StructureConstants& L);

/// Chevalley-basis structure constants of the simple type over the given
/// field: basis h_1..h_rank then e_beta in root order (positives first);
/// integer constants computed from the root system with the extraspecial-pair
/// sign convention (lexicographically least pair, positive sign), reduced
/// into the field
StructureConstants chevalley_algebra(char type, uint32_t rank, FieldPtr f);

/// adjoint Chevalley group generators exp(ad e_alpha) for the simple roots
/// and their negatives (integral divided powers reduced mod p)
std::vector<Matrix> chevalley_adjoint_generators(char type, uint32_t rank, FieldPtr f);

}  // namespace modlie
