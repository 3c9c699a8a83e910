#include "tpalg/transposed_poisson.hpp"

#include <set>
#include <stdexcept>
#include <utility>

#include "tpalg/linalg.hpp"
#include "tpalg/sparse_matrix.hpp"

namespace tpalg {
namespace {

/// [x, y] computed through the support of y.
Vector bracket_sparse(const LieAlgebra& alg, const Vector& x, const Vector& y) {
    Vector out(alg.dim());
    for (std::size_t s = 0; s < y.dim(); ++s)
        if (!y[s].is_zero()) out.add_scaled(y[s], bracket_with_basis(alg, x, s));
    return out;
}

}  // namespace

TransposedPoissonReport check_transposed_poisson(const LieAlgebra& alg, const Product& p) {
    if (alg.dim() != p.dim())
        throw std::invalid_argument("check_transposed_poisson: dimension mismatch");
    const std::size_t d = alg.dim();
    TransposedPoissonReport report;

    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                Vector residual = p.multiply_with_basis(p.multiply_basis(i, j), k);
                residual -= p.multiply_with_basis(p.multiply_basis(j, k), i);
                if (!residual.is_zero()) report.associative.push_back({i, j, k, std::move(residual)});
            }

    for (std::size_t k = 0; k < d; ++k)
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = i + 1; j < d; ++j) {
                Vector residual = p.multiply_with_basis(alg.bracket_basis(i, j), k);
                residual *= 2;
                residual -= bracket_with_basis(alg, p.multiply_basis(k, i), j);
                residual += bracket_with_basis(alg, p.multiply_basis(k, j), i);
                if (!residual.is_zero()) report.compatible.push_back({k, i, j, std::move(residual)});
            }

    return report;
}

LinearMap left_multiplication(const Product& p, std::size_t k) {
    if (k >= p.dim()) throw std::invalid_argument("left_multiplication: index out of range");
    LinearMap out(p.dim());
    for (std::size_t j = 0; j < p.dim(); ++j) {
        const Vector image = p.multiply_basis(k, j);
        for (std::size_t r = 0; r < p.dim(); ++r) out.at(r, j) = image[r];
    }
    return out;
}

SearchResult search_structures(const LieAlgebra& alg, const DerivationSpace& ds) {
    if (ds.delta != Rational(1, 2))
        throw std::invalid_argument("search_structures: derivation space must use delta = 1/2");
    if (ds.algebra != alg)
        throw std::invalid_argument(
            "search_structures: derivation space was computed for a different algebra");

    const std::size_t d = alg.dim();
    const std::size_t m = ds.basis.size();
    SearchResult result;
    result.base = Product(d);

    // images[a][j] = D_a(e_j)
    std::vector<std::vector<Vector>> images(m);
    for (std::size_t a = 0; a < m; ++a) {
        images[a].reserve(d);
        for (std::size_t j = 0; j < d; ++j) images[a].push_back(ds.basis[a].column(j));
    }

    // Ansatz l_{e_k} = sum_a lambda_{k,a} D_a with lambda_{k,a} at column
    // k*m + a. Commutativity l_{e_i}(e_j) = l_{e_j}(e_i) is linear; its
    // nullspace parametrizes the commutative candidates.
    const std::size_t pairs = d < 2 ? 0 : d * (d - 1) / 2;
    MatrixBuilder commutativity(pairs * d, d * m);
    std::size_t row0 = 0;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) {
            for (std::size_t a = 0; a < m; ++a) {
                for (std::size_t r = 0; r < d; ++r) {
                    if (!images[a][j][r].is_zero()) commutativity.add(row0 + r, i * m + a, images[a][j][r]);
                    if (!images[a][i][r].is_zero())
                        commutativity.add(row0 + r, j * m + a, -images[a][i][r]);
                }
            }
            row0 += d;
        }
    const std::vector<Vector> params = nullspace_basis(commutativity.build());
    const std::size_t nparams = params.size();

    for (std::size_t t = 0; t < nparams; ++t)
        result.parameter_names.push_back("p" + std::to_string(t + 1));
    for (const Vector& v : params) {
        Product dir(d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = i; j < d; ++j) {
                Vector value(d);
                for (std::size_t a = 0; a < m; ++a)
                    if (!v[i * m + a].is_zero()) value.add_scaled(v[i * m + a], images[a][j]);
                if (!value.is_zero()) dir.set(i, j, std::move(value));
            }
        result.directions.push_back(std::move(dir));
    }

    // Associativity of the parametrized product. With mu the commutative
    // parameters, lambda_{k,a} becomes the linear form lam[k*m+a], and
    //   ((e_i*e_j)*e_k - e_i*(e_j*e_k))_r
    //     = sum_{a,b} (lam_{k,a} lam_{i,b} - lam_{i,a} lam_{k,b}) D_a(D_b(e_j))_r,
    // antisymmetric in (i,k), so triples are scanned with i < k.
    std::vector<Polynomial> lam(d * m);
    for (std::size_t t = 0; t < nparams; ++t)
        for (std::size_t idx = 0; idx < d * m; ++idx)
            if (!params[t][idx].is_zero()) lam[idx].add_term({t}, params[t][idx]);

    std::vector<std::vector<std::vector<Vector>>> composed(m);
    for (std::size_t a = 0; a < m; ++a) {
        composed[a].resize(m);
        for (std::size_t b = 0; b < m; ++b) {
            composed[a][b].reserve(d);
            for (std::size_t j = 0; j < d; ++j)
                composed[a][b].push_back(ds.basis[a].apply(images[b][j]));
        }
    }

    std::set<Polynomial> constraints;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = i + 1; k < d; ++k)
            for (std::size_t j = 0; j < d; ++j) {
                std::vector<Polynomial> residual(d);
                for (std::size_t a = 0; a < m; ++a)
                    for (std::size_t b = 0; b < m; ++b) {
                        const Polynomial coeff =
                            lam[k * m + a] * lam[i * m + b] - lam[i * m + a] * lam[k * m + b];
                        if (coeff.is_zero()) continue;
                        const Vector& w = composed[a][b][j];
                        for (std::size_t r = 0; r < d; ++r)
                            if (!w[r].is_zero()) residual[r] += w[r] * coeff;
                    }
                for (std::size_t r = 0; r < d; ++r)
                    if (!residual[r].is_zero()) constraints.insert(residual[r].normalized());
            }
    result.residual_constraints.assign(constraints.begin(), constraints.end());

    const QuadraticSolveResult solved =
        solve_quadratic_system(result.residual_constraints, nparams);
    if (!solved.resolved) {
        result.status = SearchResult::Status::unresolved;
        return result;
    }

    for (const std::vector<Vector>& basis : solved.solution_bases) {
        Vector mu(nparams);
        for (const Vector& v : basis) mu += v;
        Product representative = result.base;
        for (std::size_t t = 0; t < nparams; ++t)
            if (!mu[t].is_zero()) representative.add_scaled(mu[t], result.directions[t]);
        if (!check_transposed_poisson(alg, representative).ok())
            throw std::logic_error("search_structures: classified product failed verification");

        ClassifiedFamily family;
        if (basis.empty()) {
            family.description = "zero product only";
        } else {
            std::string desc = "span{ ";
            for (std::size_t t = 0; t < basis.size(); ++t) {
                Polynomial form;
                for (std::size_t q = 0; q < nparams; ++q)
                    if (!basis[t][q].is_zero()) form.add_term({q}, basis[t][q]);
                if (t) desc += ", ";
                desc += form.str(result.parameter_names);
            }
            desc += " }";
            family.description = std::move(desc);
        }
        family.parameter_basis = basis;
        family.nontrivial = !representative.is_zero();
        family.representative = std::move(representative);
        result.classified.push_back(std::move(family));
    }
    return result;
}

HomLieReport check_hom_lie(const LieAlgebra& alg, const LinearMap& phi) {
    if (phi.dim() != alg.dim()) throw std::invalid_argument("check_hom_lie: dimension mismatch");
    const std::size_t d = alg.dim();
    std::vector<Vector> columns;
    columns.reserve(d);
    for (std::size_t i = 0; i < d; ++i) columns.push_back(phi.column(i));

    HomLieReport report;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j)
            for (std::size_t k = j + 1; k < d; ++k) {
                Vector residual = bracket_sparse(alg, columns[i], alg.bracket_basis(j, k));
                residual += bracket_sparse(alg, columns[j], alg.bracket_basis(k, i));
                residual += bracket_sparse(alg, columns[k], alg.bracket_basis(i, j));
                if (!residual.is_zero()) {
                    report.ok = false;
                    report.violations.push_back({i, j, k, std::move(residual)});
                }
            }
    return report;
}

}  // namespace tpalg
