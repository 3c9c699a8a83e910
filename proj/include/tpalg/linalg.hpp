#pragma once

#include <optional>
#include <vector>

#include "tpalg/sparse_matrix.hpp"
#include "tpalg/vector.hpp"

namespace tpalg {

struct RrefResult {
    SparseMatrix reduced;                 // same shape as the input, in RREF
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_cols;  // strictly increasing
};

/// Reduced row echelon form over the rationals.
///
/// Internally runs fraction-free (division-deferred) forward elimination on
/// integer rows: each input row is scaled to integer entries and divided by
/// its content, and every combination step divides the result by its content
/// again, so intermediate coefficients stay small. Pivots are chosen as the
/// candidate entry of smallest bit-length, ties broken by lowest input row
/// index. Division happens once at the end, when pivot rows are normalized to
/// leading 1s. The result is the (unique) RREF regardless of pivot choices.
RrefResult rref(const SparseMatrix& m);

/// Canonical nullspace basis: the RREF free-variable basis, one vector per
/// free column in increasing column order, each scaled to integer coordinates
/// with content 1 and first nonzero coordinate positive.
std::vector<Vector> nullspace_basis(const SparseMatrix& m);

struct AffineSolution {
    Vector particular;
    std::vector<Vector> homogeneous;  // nullspace basis of the coefficient matrix
};

/// Solves a x = b exactly. Returns std::nullopt when the system is
/// inconsistent. The particular solution sets all free variables to zero.
/// Throws std::invalid_argument when rows(a) != dim(b).
std::optional<AffineSolution> solve_affine(const SparseMatrix& a, const Vector& b);

}  // namespace tpalg
