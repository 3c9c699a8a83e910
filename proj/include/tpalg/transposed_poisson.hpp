#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tpalg/derivations.hpp"
#include "tpalg/lie_algebra.hpp"
#include "tpalg/linear_map.hpp"
#include "tpalg/polynomial.hpp"
#include "tpalg/product.hpp"
#include "tpalg/vector.hpp"

namespace tpalg {

struct TripleViolation {
    std::size_t a, b, c;
    Vector residual;
};

/// Outcome of check_transposed_poisson. Commutativity holds for every
/// Product by construction, so only the other two axioms can fail:
///  - associative entries record (a,b,c) = (i,j,k) with residual
///    (e_i*e_j)*e_k - e_i*(e_j*e_k), scanned over all ordered triples;
///  - compatible entries record (a,b,c) = (k,i,j) with i < j and residual
///    2*(e_k*[e_i,e_j]) - [e_k*e_i,e_j] - [e_i,e_k*e_j].
struct TransposedPoissonReport {
    std::vector<TripleViolation> associative;
    std::vector<TripleViolation> compatible;

    bool associative_ok() const { return associative.empty(); }
    bool compatible_ok() const { return compatible.empty(); }
    bool ok() const { return associative.empty() && compatible.empty(); }
};

/// Checks all three transposed Poisson axioms for the product against the
/// bracket. Throws std::invalid_argument on dimension mismatch.
TransposedPoissonReport check_transposed_poisson(const LieAlgebra& alg, const Product& p);

/// Left multiplication operator l_{e_k}: v -> e_k * v.
LinearMap left_multiplication(const Product& p, std::size_t k);

struct ClassifiedFamily {
    std::string description;
    std::vector<Vector> parameter_basis;  // subspace of the search parameter space
    Product representative;               // every free parameter set to 1, fully verified
    bool nontrivial = false;              // representative tensor nonzero
};

/// Result of search_structures. The commutative ansatz is the linear family
/// base + sum_p mu_p * directions[p]; residual_constraints is the remaining
/// associativity system in the parameters mu (deduplicated, normalized,
/// deterministic order). When the built-in case-split solver resolves that
/// system, status is complete and classified lists the maximal solution
/// subspaces; otherwise status is unresolved and classified stays empty.
struct SearchResult {
    enum class Status { complete, unresolved };

    std::vector<std::string> parameter_names;  // "p1", "p2", ...
    Product base;                              // zero product, kept explicit
    std::vector<Product> directions;           // one per parameter
    std::vector<Polynomial> residual_constraints;
    std::vector<ClassifiedFamily> classified;
    Status status = Status::complete;
};

/// Searches for commutative associative products compatible with the
/// bracket: every left multiplication is constrained to lie in ds (which
/// makes compatibility automatic), commutativity is eliminated exactly as a
/// linear system, and the quadratic associativity residue is classified by
/// the case-split solver when possible. Every classified representative is
/// re-verified with check_transposed_poisson. Requires ds.delta = 1/2 and
/// ds.algebra equal to alg; throws std::invalid_argument otherwise.
SearchResult search_structures(const LieAlgebra& alg, const DerivationSpace& ds);

/// Violations record basis triples i < j < k with the cyclic residual
/// [phi(e_i),[e_j,e_k]] + [phi(e_j),[e_k,e_i]] + [phi(e_k),[e_i,e_j]].
struct HomLieReport {
    bool ok = true;
    std::vector<TripleViolation> violations;
};

/// Hom-Lie check for phi: the cyclic identity above on all basis triples.
/// With phi the identity this is exactly the Jacobi scan. Throws
/// std::invalid_argument on dimension mismatch.
HomLieReport check_hom_lie(const LieAlgebra& alg, const LinearMap& phi);

}  // namespace tpalg
