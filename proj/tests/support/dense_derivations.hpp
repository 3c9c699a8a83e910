#pragma once

#include <vector>

#include "tpalg/lie_algebra.hpp"
#include "tpalg/linear_map.hpp"
#include "tpalg/rational.hpp"

namespace tpalg::testing {

/// Reference construction of the delta-derivation space, written to share no
/// code with the production solver: the constraint
///   phi([e_i,e_j]) - delta*([phi(e_i),e_j] + [e_i,phi(e_j)]) = 0
/// is assembled row by row over ALL ordered pairs (i,j), including i == j and
/// both orientations, into a dense rational matrix, which is then reduced by
/// plain Gauss-Jordan elimination with division. Unknown (k,i) sits at column
/// i*dim + k, matching the production flattening so spans can be compared.
std::vector<LinearMap> dense_derivation_basis(const LieAlgebra& alg, const Rational& delta);

}  // namespace tpalg::testing
