#include "modlie/cohom.hpp"

#include "modlie/linalg.hpp"
#include "modlie/util.hpp"

namespace modlie {

CocycleSpace h1_dimension(const FinitePresentation& P, const Representation& M) {
  int32_t bad = first_relator_violation(P, M);
  if (bad >= 0) fail("RelatorViolation", "relator " + std::to_string(bad) + " does not act as identity");
  for (const auto& r : P.relators)
    if (r.size() > 10000) fail("RelatorTooLong", "relator exceeds 10^4 letters");

  const Field& F = M.F();
  const uint32_t n = M.dim, m = P.generator_count;
  // unknowns: d(g_1), ..., d(g_m) stacked; a derivation satisfies
  // d(uv) = d(u) + u d(v), so a relator x_1...x_l telescopes to
  // sum_t rho(x_1..x_{t-1}) d(x_t) = 0 with d(g^-1) = -rho(g)^-1 d(g)
  std::vector<Matrix> inv_gens;
  for (const auto& g : M.gens) inv_gens.push_back(*inverse(g));

  uint32_t rows_per_rel = n;
  Matrix Sys(M.field, uint32_t(P.relators.size()) * rows_per_rel, m * n);
  for (uint32_t r = 0; r < P.relators.size(); ++r) {
    std::vector<Matrix> coeff(m, Matrix(M.field, n, n));
    Matrix prefix = Matrix::identity(M.field, n);
    for (int32_t s : P.relators[r]) {
      uint32_t g = uint32_t(std::abs(s)) - 1;
      if (s > 0) {
        coeff[g] = add(coeff[g], prefix);
        prefix = mul(prefix, M.gens[g]);
      } else {
        prefix = mul(prefix, inv_gens[g]);
        coeff[g] = sub(coeff[g], prefix);
      }
    }
    for (uint32_t g = 0; g < m; ++g)
      for (uint32_t i = 0; i < n; ++i)
        for (uint32_t j = 0; j < n; ++j) Sys.at(r * rows_per_rel + i, g * n + j) = coeff[g].at(i, j);
  }
  auto z1 = rank_nullspace(Sys);

  // B^1 = image of v -> ((g_i - 1)v)_i; its dimension is n - dim fixed points
  Matrix FixSys(M.field, m * n, n);
  for (uint32_t g = 0; g < m; ++g)
    for (uint32_t i = 0; i < n; ++i)
      for (uint32_t j = 0; j < n; ++j)
        FixSys.at(g * n + i, j) = F.sub(M.gens[g].at(i, j), i == j ? 1 : 0);
  auto fixed = rank_nullspace(FixSys);

  CocycleSpace out;
  out.dimension_Z1 = uint32_t(z1.nullspace.size());
  out.fixed_points = uint32_t(fixed.nullspace.size());
  out.dimension_B1 = n - out.fixed_points;
  if (out.dimension_Z1 < out.dimension_B1) fail("InternalError", "B1 not contained in Z1");
  out.dimension_H1 = out.dimension_Z1 - out.dimension_B1;
  return out;
}

ComplementVerdict complement_count_contract(uint32_t h1dim) {
  ComplementVerdict v;
  v.h1dim = h1dim;
  if (h1dim == 0)
    v.annotation = "one class of complements to the unipotent radical";
  else if (h1dim == 1)
    v.annotation =
        "exactly two classes of complements (under the torus action), one inside the Levi";
  else
    v.annotation = "indeterminate from 1-cohomology alone; manual analysis required";
  return v;
}

}  // namespace modlie
