#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "modlie/linalg.hpp"
#include "modlie/matrix.hpp"

namespace modlie {

/// A finite group action given by one invertible matrix per abstract
/// generator. Immutable after construction.
struct Representation {
  FieldPtr field;
  uint32_t dim = 0;
  std::vector<Matrix> gens;
  std::string label;

  const Field& F() const { return *field; }
};

/// Build and validate (square, invertible, consistent field).
Representation make_rep(FieldPtr f, std::vector<Matrix> gens, std::string label = "");

/// Apply a word in the generators (1-based indices, negative = inverse) to
/// the identity.
Matrix evaluate_word(const Representation& M, const std::vector<int32_t>& word);

Representation dual_rep(const Representation& M);
Representation tensor_rep(const Representation& M, const Representation& N);
Representation direct_sum(const Representation& M, const Representation& N);
Representation conjugate_rep(const Representation& M, const Matrix& g);
/// exterior square on basis e_i ^ e_j (i < j), lexicographic
Representation ext2_rep(const Representation& M);
/// symmetric square on basis e_i e_j (i <= j), lexicographic
Representation sym2_rep(const Representation& M);

/// fixed basis orderings for the square constructions
uint32_t ext2_index(uint32_t d, uint32_t i, uint32_t j);
uint32_t sym2_index(uint32_t d, uint32_t i, uint32_t j);
std::vector<std::pair<uint32_t, uint32_t>> ext2_pairs(uint32_t d);
std::vector<std::pair<uint32_t, uint32_t>> sym2_pairs(uint32_t d);

struct SubmoduleWitness {
  std::vector<Vec> basis;  // canonical reduced-column-echelon basis
  uint32_t dim() const { return uint32_t(basis.size()); }
};

/// smallest generator-stable subspace containing the seeds
SubmoduleWitness spin(const Representation& M, const std::vector<Vec>& seeds);

/// basis of {X : X g_M = g_N X for all generators}, i.e. Hom_{kH}(M, N) as
/// dim(N) x dim(M) matrices, in reduced echelon canonical form over the
/// row-major flattened coordinates
std::vector<Matrix> hom_space(const Representation& M, const Representation& N);

struct ChopOptions {
  uint64_t seed = 20240901;
  int random_budget = 200;
  uint32_t line_budget = 4096;       // max kernel lines to enumerate per candidate
  uint32_t fallback_max_dim = 64;    // deterministic fallback only below this
};

struct ChopFactor {
  Representation rep;
  uint32_t multiplicity = 0;
};

/// composition factors with multiplicities (pairwise non-isomorphic);
/// throws InconclusiveIrreducibility when both search phases exhaust
std::vector<ChopFactor> chop(const Representation& M, const ChopOptions& opts = {});

/// certified irreducibility test (Norton criterion)
enum class Irred { Irreducible, Reducible, Inconclusive };
struct IrredResult {
  Irred status = Irred::Inconclusive;
  std::vector<Vec> submodule;  // proper invariant subspace when Reducible
};
IrredResult irreducibility(const Representation& M, const ChopOptions& opts = {});

/// true when hom_space(M, N) contains an isomorphism (equal dims + Schur)
bool isomorphic(const Representation& M, const Representation& N);

/// action restricted to an invariant subspace (basis must be
/// generator-stable), and on the quotient by it
Representation rep_on_submodule(const Representation& M, const std::vector<Vec>& basis);
Representation rep_on_quotient(const Representation& M, const std::vector<Vec>& basis);

enum class FormKind { Alternating, Symmetric, All };

struct BilinearFormSpace {
  FormKind kind = FormKind::All;
  std::vector<Matrix> basis;  // Gram matrices, canonical order
  uint32_t dim() const { return uint32_t(basis.size()); }
};

/// all invariant bilinear forms of the requested kind (g^T F g = F);
/// alternating means F^T = -F with zero diagonal (exact also in char 2)
BilinearFormSpace invariant_forms(const Representation& M, FormKind kind);

/// {v : F(v, .) = 0}
SubmoduleWitness form_radical(const Matrix& gram, const Representation& M);

enum class Uniqueness { Unique, NotGuaranteed };

struct FactorReport {
  uint32_t dim = 0;
  uint32_t multiplicity = 0;
  bool self_dual = false;
  std::string form_type;  // "symmetric" | "alternating" | "dual pair" | "dual missing"
  bool ok = false;
  std::string note;
};

struct UniquenessVerdict {
  Uniqueness verdict = Uniqueness::NotGuaranteed;
  std::string reason;
  std::vector<FactorReport> factors;
};

/// the multiplicity conditions for a unique symplectic-group conjugacy class
/// on a faithful semisimple module
UniquenessVerdict form_uniqueness_verdict(const Representation& M, const ChopOptions& opts = {});

}  // namespace modlie
