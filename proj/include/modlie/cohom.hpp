#pragma once

#include "modlie/presentation.hpp"
#include "modlie/rep.hpp"

namespace modlie {

struct CocycleSpace {
  uint32_t dimension_Z1 = 0;
  uint32_t dimension_B1 = 0;
  uint32_t dimension_H1 = 0;
  uint32_t fixed_points = 0;
  /// reports must carry this: the complement-counting reading assumes the
  /// unipotent radical is a module for the Levi, which this computation
  /// cannot check
  std::string assumption =
      "assumes the coefficient module arises as an abelian unipotent radical (a module for the Levi)";
};

/// First cohomology of the presented group with coefficients in M: Z^1 from
/// the Fox-derivative linear system of the relators, B^1 = {g -> (g-1)v}.
/// Errors with RelatorViolation (naming the relator) when some relator does
/// not act as the identity, and rejects relators longer than 10^4 letters.
CocycleSpace h1_dimension(const FinitePresentation& P, const Representation& M);

struct ComplementVerdict {
  uint32_t h1dim = 0;
  std::string annotation;
};

/// pure lookup: 0 -> one class; 1 -> exactly two classes (one in the Levi);
/// otherwise indeterminate, manual analysis required
ComplementVerdict complement_count_contract(uint32_t h1dim);

}  // namespace modlie
