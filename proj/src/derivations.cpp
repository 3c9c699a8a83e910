#include "tpalg/derivations.hpp"

#include <stdexcept>
#include <utility>

#include "tpalg/linalg.hpp"

namespace tpalg {

SparseMatrix derivation_constraints(const LieAlgebra& alg, const Rational& delta) {
    const std::size_t d = alg.dim();
    const std::size_t pair_count = d < 2 ? 0 : d * (d - 1) / 2;
    MatrixBuilder b(d * pair_count, d * d);

    // terms[a][t]: expansion of [e_a, e_t] as (coordinate, coefficient) pairs
    using Terms = std::vector<std::pair<std::size_t, Rational>>;
    std::vector<std::vector<Terms>> terms(d, std::vector<Terms>(d));
    for (const auto& [key, expansion] : alg.table())
        for (std::size_t r = 0; r < d; ++r) {
            if (expansion[r].is_zero()) continue;
            terms[key.first][key.second].emplace_back(r, expansion[r]);
            terms[key.second][key.first].emplace_back(r, -expansion[r]);
        }

    std::size_t pair_index = 0;
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = i + 1; j < d; ++j, ++pair_index) {
            const std::size_t row0 = pair_index * d;
            // phi([e_i,e_j]): row r gets c_s at the phi_(r,s) column
            for (const auto& [s, c] : terms[i][j])
                for (std::size_t r = 0; r < d; ++r) b.add(row0 + r, s * d + r, c);
            // -delta*[phi(e_i), e_j]: phi_(a,i) columns against [e_a,e_j]
            for (std::size_t a = 0; a < d; ++a)
                for (const auto& [r, c] : terms[a][j]) b.add(row0 + r, i * d + a, -(delta * c));
            // -delta*[e_i, phi(e_j)]: phi_(t,j) columns against [e_i,e_t]
            for (std::size_t t = 0; t < d; ++t)
                for (const auto& [r, c] : terms[i][t]) b.add(row0 + r, j * d + t, -(delta * c));
        }
    }
    return b.build();
}

DerivationSpace derivation_space(const LieAlgebra& alg, const Rational& delta) {
    const SparseMatrix constraints = derivation_constraints(alg, delta);
    const std::vector<Vector> flats = nullspace_basis(constraints);
    DerivationSpace out{alg, delta, {}, constraints.cols() - flats.size()};
    out.basis.reserve(flats.size());
    for (const auto& f : flats) {
        LinearMap phi = LinearMap::from_flat(f);
        if (!is_delta_derivation(alg, phi, delta).ok)
            throw std::logic_error("derivation_space: solver returned a non-solution");
        out.basis.push_back(std::move(phi));
    }
    return out;
}

DerivationReport is_delta_derivation(const LieAlgebra& alg, const LinearMap& phi,
                                     const Rational& delta) {
    if (phi.dim() != alg.dim())
        throw std::invalid_argument("is_delta_derivation: dimension mismatch");
    const std::size_t d = alg.dim();
    std::vector<Vector> images;
    images.reserve(d);
    for (std::size_t i = 0; i < d; ++i) images.push_back(phi.column(i));

    DerivationReport report;
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = i + 1; j < d; ++j) {
            // [e_i, phi(e_j)] = -[phi(e_j), e_i]
            Vector residual = phi.apply(alg.bracket_basis(i, j));
            residual -= delta * (bracket_with_basis(alg, images[i], j) -
                                 bracket_with_basis(alg, images[j], i));
            if (!residual.is_zero()) {
                report.ok = false;
                report.violations.push_back({i, j, std::move(residual)});
            }
        }
    }
    return report;
}

std::map<Degree, LinearMap> graded_components(const LinearMap& phi, const Grading& g) {
    if (g.dim() != phi.dim())
        throw std::invalid_argument("graded_components: dimension mismatch");
    std::map<Degree, LinearMap> out;
    for (std::size_t i = 0; i < phi.dim(); ++i) {
        for (std::size_t k = 0; k < phi.dim(); ++k) {
            const Rational& c = phi.at(k, i);
            if (c.is_zero()) continue;
            const auto it = out.try_emplace(g.sub(g.degree(k), g.degree(i)), LinearMap(phi.dim()));
            it.first->second.at(k, i) = c;
        }
    }
    return out;
}

std::map<Degree, std::vector<LinearMap>> decompose_derivation_space(const DerivationSpace& ds,
                                                                    const Grading& g) {
    const LieAlgebra& alg = ds.algebra;
    if (g.dim() != alg.dim())
        throw std::invalid_argument("decompose_derivation_space: dimension mismatch");
    if (!check_grading(alg, g).ok)
        throw std::invalid_argument("decompose_derivation_space: grading does not grade the algebra");

    const std::size_t d = alg.dim();
    std::map<Degree, std::vector<LinearMap>> out;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = 0; k < d; ++k) out.try_emplace(g.sub(g.degree(k), g.degree(i)));

    std::map<Degree, std::vector<Vector>> generators;
    for (const auto& b : ds.basis)
        for (auto& [deg, comp] : graded_components(b, g))
            generators[deg].push_back(comp.to_flat());

    std::size_t total = 0;
    for (auto& [deg, flats] : generators) {
        MatrixBuilder mb(flats.size(), d * d);
        for (std::size_t r = 0; r < flats.size(); ++r)
            for (std::size_t c = 0; c < d * d; ++c)
                if (!flats[r][c].is_zero()) mb.add(r, c, flats[r][c]);
        const RrefResult rr = rref(mb.build());
        std::vector<Vector> rows(rr.rank, Vector(d * d));
        for (const auto& e : rr.reduced.entries()) rows[e.row][e.col] = e.value;
        for (auto& row : rows) {
            LinearMap comp = LinearMap::from_flat(normalize_direction(row));
            if (!is_delta_derivation(alg, comp, ds.delta).ok)
                throw std::logic_error(
                    "decompose_derivation_space: graded piece is not a solution");
            out[deg].push_back(std::move(comp));
        }
        total += rr.rank;
    }
    if (total != ds.basis.size())
        throw std::logic_error("decompose_derivation_space: dimensions do not add up");
    return out;
}

}  // namespace tpalg
