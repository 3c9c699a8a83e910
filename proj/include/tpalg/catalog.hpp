#pragma once

#include <optional>
#include <string>

#include "tpalg/lie_algebra.hpp"

namespace tpalg {

/// dim of the Schrodinger algebra: 4 + 2n + n(n-1)/2.
std::size_t schrodinger_dim(unsigned n);

/// Schrodinger algebra in (n+1)-dimensional space-time, basis ordered
/// [e, f, h, z, x_1..x_n, y_1..y_n, s_12, s_13, ..., s_(n-1)n] with the
/// s-pairs in lexicographic order. Throws std::invalid_argument for n = 0.
LieAlgebra build_schrodinger(unsigned n);

/// Named algebras: "sl2", "heisenberg", "so", "schrodinger". The last three
/// need n, either via the argument or embedded as "name_<n>". Conventions
/// match the corresponding subalgebras of the Schrodinger algebra.
/// Throws std::invalid_argument for unknown names or missing/conflicting n.
LieAlgebra build_catalog(const std::string& name, std::optional<unsigned> n = std::nullopt);

/// The Z2 grading with e, f, h, z and the s-generators even and all x_i, y_i
/// odd. Only defined for algebras structurally equal to a catalog entry;
/// anything else throws std::invalid_argument.
Grading standard_grading(const LieAlgebra& alg);

}  // namespace tpalg
