#pragma once

#include "modlie/cohom.hpp"
#include "modlie/presentation.hpp"
#include "modlie/rep.hpp"

namespace modlie::fixtures {

/// Lifted Carmichael presentation of the double cover of Alt(7): generators
/// t_1..t_5 covering (1,2,3)..(1,2,7), relators t_i^3, pair squares all equal
/// a central involution z = (t_1 t_2)^2 with z^2 = 1.
FinitePresentation double_alt7_presentation();

/// Carmichael presentation of Alt(7) itself (t_i^3, (t_i t_j)^2).
FinitePresentation alt7_presentation();

struct TwoA7Modules {
  Representation four;       // the 4 with H^1(S^2(4 + 14)) = 0
  Representation four_star;  // the dual, with H^1(S^2(4* + 14)) = 1
  Representation fourteen;   // the self-dual faithful 14
};

/// Construct the faithful 4, 4* and 14 of 2.Alt(7) over GF(25) from the
/// presentation alone: certify the group order by coset enumeration, chop the
/// 720-point coset module, orient the dual pair by the cohomology signature.
TwoA7Modules build_2a7_modules();

}  // namespace modlie::fixtures
