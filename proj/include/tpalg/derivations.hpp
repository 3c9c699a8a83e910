#pragma once

#include <map>
#include <vector>

#include "tpalg/lie_algebra.hpp"
#include "tpalg/linear_map.hpp"
#include "tpalg/sparse_matrix.hpp"

namespace tpalg {

/// Solution space of the delta-derivation equation
///   phi([x,y]) = delta*([phi(x),y] + [x,phi(y)]).
struct DerivationSpace {
    LieAlgebra algebra;
    Rational delta;
    std::vector<LinearMap> basis;  // canonical nullspace order, each verified
    std::size_t constraint_rank = 0;
};

/// Linear system whose nullspace is the delta-derivation space. Unknowns are
/// the dim^2 entries phi_(k,i) at column i*dim + k; rows run over basis pairs
/// i < j in lexicographic order, then output coordinate, encoding
/// phi([e_i,e_j]) - delta*([phi(e_i),e_j] + [e_i,phi(e_j)]) = 0.
SparseMatrix derivation_constraints(const LieAlgebra& alg, const Rational& delta);

DerivationSpace derivation_space(const LieAlgebra& alg, const Rational& delta);

struct DerivationViolation {
    std::size_t i, j;  // basis pair, i < j
    Vector residual;   // phi([e_i,e_j]) - delta*([phi(e_i),e_j] + [e_i,phi(e_j)])
};

struct DerivationReport {
    bool ok = true;
    std::vector<DerivationViolation> violations;
};

/// Direct scan of all basis pairs. Throws std::invalid_argument when the map
/// dimension does not match the algebra.
DerivationReport is_delta_derivation(const LieAlgebra& alg, const LinearMap& phi,
                                     const Rational& delta);

/// Splits phi into its graded pieces: component g maps the degree-h
/// coordinate block into the degree-(g+h) block, and the components sum back
/// to phi. Only nonzero components are returned.
/// Throws std::invalid_argument when dimensions do not match.
std::map<Degree, LinearMap> graded_components(const LinearMap& phi, const Grading& g);

/// Basis of each graded piece of the solution space. Covers every degree a
/// component could live in (differences deg(k) - deg(i)), including those
/// where the piece is zero-dimensional; total dimension equals |ds.basis|.
/// The grading must pass check_grading, else std::invalid_argument.
std::map<Degree, std::vector<LinearMap>> decompose_derivation_space(const DerivationSpace& ds,
                                                                    const Grading& g);

}  // namespace tpalg
