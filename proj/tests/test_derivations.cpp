#include <random>
#include <stdexcept>

#include "doctest.h"
#include "support/test_helpers.hpp"
#include "tpalg/catalog.hpp"
#include "tpalg/derivations.hpp"
#include "tpalg/linalg.hpp"

using tpalg::Degree;
using tpalg::DerivationSpace;
using tpalg::Grading;
using tpalg::GradingGroup;
using tpalg::LieAlgebra;
using tpalg::LinearMap;
using tpalg::Rational;
using tpalg::Vector;
using tpalg::testing::same_span;

namespace {

const Rational half(1, 2);

// phi(s12) = z, zero elsewhere
LinearMap witness_map_s2() {
    LinearMap r(9);
    r.at(3, 8) = Rational(1);
    return r;
}

std::vector<Vector> flats(const std::vector<LinearMap>& maps) {
    std::vector<Vector> out;
    out.reserve(maps.size());
    for (const auto& m : maps) out.push_back(m.to_flat());
    return out;
}

}  // namespace

TEST_CASE("linear map flattening matches the solver's unknown order") {
    LinearMap phi(3);
    phi.at(2, 0) = Rational(5);  // e_0 -> 5 e_2, flat index 0*3+2
    phi.at(0, 1) = Rational(7);  // e_1 -> 7 e_0, flat index 1*3+0
    const Vector f = phi.to_flat();
    CHECK(f.dim() == 9);
    CHECK(f[2] == Rational(5));
    CHECK(f[3] == Rational(7));
    CHECK(LinearMap::from_flat(f) == phi);
    CHECK(phi.column(0) == tpalg::testing::vec({0, 0, 5}));
    CHECK(phi.apply(tpalg::unit_vector(3, 1)) == tpalg::testing::vec({7, 0, 0}));
    CHECK_THROWS_AS(LinearMap::from_flat(Vector(8)), std::invalid_argument);

    LinearMap sum(3);
    sum.add_scaled(Rational(2), phi);
    CHECK(sum.at(2, 0) == Rational(10));
    CHECK(LinearMap::identity(3).apply(tpalg::testing::vec({1, 2, 3})) ==
          tpalg::testing::vec({1, 2, 3}));
}

TEST_CASE("adjoint maps act by the bracket") {
    const LieAlgebra sl2 = tpalg::build_catalog("sl2");
    const LinearMap ad_h = tpalg::adjoint_map(sl2, tpalg::unit_vector(3, 2));
    CHECK(ad_h.at(0, 0) == Rational(2));    // [h,e] = 2e
    CHECK(ad_h.at(1, 1) == Rational(-2));   // [h,f] = -2f
    CHECK(ad_h.column(2).is_zero());        // [h,h] = 0
}

TEST_CASE("derivation constraints: abelian algebras impose nothing") {
    const LieAlgebra abelian("abelian3", {"a", "b", "c"}, {});
    const auto m = tpalg::derivation_constraints(abelian, half);
    CHECK(m.rows() == 9);
    CHECK(m.cols() == 9);
    CHECK(m.nonzeros() == 0);
    const DerivationSpace ds = tpalg::derivation_space(abelian, Rational(3));
    CHECK(ds.basis.size() == 9);
    CHECK(ds.constraint_rank == 0);
}

TEST_CASE("derivation constraints for the 9-dimensional schrodinger algebra") {
    const LieAlgebra s2 = tpalg::build_schrodinger(2);
    const auto m = tpalg::derivation_constraints(s2, half);
    CHECK(m.rows() == 324);
    CHECK(m.cols() == 81);
    const auto rr = tpalg::rref(m);
    CHECK(rr.rank == 79);
    CHECK(tpalg::nullspace_basis(m).size() == 2);
}

TEST_CASE("half-derivations of schrodinger: dim 2 at n=2, dim 1 otherwise") {
    const DerivationSpace ds2 = tpalg::derivation_space(tpalg::build_schrodinger(2), half);
    REQUIRE(ds2.basis.size() == 2);
    CHECK(ds2.constraint_rank == 79);
    CHECK(ds2.basis[0] == witness_map_s2());
    CHECK(ds2.basis[1] == LinearMap::identity(9));

    for (unsigned n : {1u, 3u, 4u}) {
        const DerivationSpace ds = tpalg::derivation_space(tpalg::build_schrodinger(n), half);
        REQUIRE(ds.basis.size() == 1);
        CHECK(ds.basis[0] == LinearMap::identity(tpalg::schrodinger_dim(n)));
    }
}

TEST_CASE("ordinary derivations of sl2 are spanned by the adjoint maps") {
    const LieAlgebra sl2 = tpalg::build_catalog("sl2");
    CHECK(tpalg::derivation_space(sl2, half).basis.size() == 1);

    const DerivationSpace ds = tpalg::derivation_space(sl2, Rational(1));
    REQUIRE(ds.basis.size() == 3);
    std::vector<LinearMap> ads;
    for (std::size_t i = 0; i < 3; ++i) ads.push_back(tpalg::adjoint_map(sl2, tpalg::unit_vector(3, i)));
    CHECK(same_span(flats(ds.basis), flats(ads), 9));
}

TEST_CASE("is_delta_derivation: identity and the witness map") {
    const LieAlgebra s2 = tpalg::build_schrodinger(2);
    CHECK(tpalg::is_delta_derivation(s2, LinearMap::identity(9), half).ok);
    CHECK(tpalg::is_delta_derivation(tpalg::build_catalog("sl2"), LinearMap::identity(3), half).ok);

    // the witness map has central image and kills every bracket, so it
    // satisfies the equation for every delta
    for (long d : {1L, 2L, 5L}) {
        CHECK(tpalg::is_delta_derivation(s2, witness_map_s2(), half).ok);
        CHECK(tpalg::is_delta_derivation(s2, witness_map_s2(), Rational(d)).ok);
    }

    const auto report = tpalg::is_delta_derivation(s2, LinearMap::identity(9), Rational(1));
    CHECK_FALSE(report.ok);
    REQUIRE_FALSE(report.violations.empty());
    // first scanned pair (e,f): residual [e,f] - 2[e,f] = -h
    CHECK(report.violations[0].i == 0);
    CHECK(report.violations[0].j == 1);
    CHECK(report.violations[0].residual == tpalg::testing::vec({0, 0, -1, 0, 0, 0, 0, 0, 0}));

    CHECK_THROWS_AS(tpalg::is_delta_derivation(s2, LinearMap::identity(8), half),
                    std::invalid_argument);
}

TEST_CASE("adjoint maps are ordinary derivations on every catalog algebra") {
    for (const char* name : {"sl2", "heisenberg_2", "so_3", "schrodinger_2", "schrodinger_3"}) {
        const LieAlgebra alg = tpalg::build_catalog(name);
        for (std::size_t i = 0; i < alg.dim(); ++i) {
            const LinearMap ad = tpalg::adjoint_map(alg, tpalg::unit_vector(alg.dim(), i));
            CHECK(tpalg::is_delta_derivation(alg, ad, Rational(1)).ok);
        }
    }
}

TEST_CASE("solution spaces are closed under linear combinations") {
    const LieAlgebra s2 = tpalg::build_schrodinger(2);
    const DerivationSpace ds = tpalg::derivation_space(s2, half);
    std::mt19937 gen(424242);
    std::uniform_int_distribution<long> num(-6, 6);
    std::uniform_int_distribution<long> den(1, 4);
    for (int trial = 0; trial < 25; ++trial) {
        LinearMap combo(9);
        for (const auto& b : ds.basis) combo.add_scaled(Rational(num(gen), den(gen)), b);
        CHECK(tpalg::is_delta_derivation(s2, combo, half).ok);
    }
}

TEST_CASE("graded components split maps along the standard grading") {
    const LieAlgebra s2 = tpalg::build_schrodinger(2);
    const Grading g = tpalg::standard_grading(s2);

    const auto id_comps = tpalg::graded_components(LinearMap::identity(9), g);
    REQUIRE(id_comps.size() == 1);
    CHECK(id_comps.at(Degree{0}) == LinearMap::identity(9));

    const auto witness_comps = tpalg::graded_components(witness_map_s2(), g);
    REQUIRE(witness_comps.size() == 1);
    CHECK(witness_comps.at(Degree{0}) == witness_map_s2());

    const LieAlgebra s1 = tpalg::build_schrodinger(1);
    LinearMap odd(6);
    odd.at(4, 0) = Rational(1);  // e -> x1: even source, odd target
    const auto odd_comps = tpalg::graded_components(odd, tpalg::standard_grading(s1));
    REQUIRE(odd_comps.size() == 1);
    CHECK(odd_comps.count(Degree{1}) == 1);

    // random maps: components sum back and respect the block structure
    std::mt19937 gen(77);
    std::uniform_int_distribution<long> coeff(-3, 3);
    for (int trial = 0; trial < 20; ++trial) {
        LinearMap phi(9);
        for (std::size_t i = 0; i < 9; ++i)
            for (std::size_t k = 0; k < 9; ++k) phi.at(k, i) = Rational(coeff(gen));
        LinearMap sum(9);
        for (const auto& [deg, comp] : tpalg::graded_components(phi, g)) {
            sum += comp;
            for (std::size_t i = 0; i < 9; ++i)
                for (std::size_t k = 0; k < 9; ++k)
                    if (!comp.at(k, i).is_zero())
                        CHECK(g.sub(g.degree(k), g.degree(i)) == deg);
        }
        CHECK(sum == phi);
    }
}

TEST_CASE("decomposing the solution space concentrates it in even degree") {
    const LieAlgebra s2 = tpalg::build_schrodinger(2);
    const Grading g2 = tpalg::standard_grading(s2);
    const DerivationSpace ds2 = tpalg::derivation_space(s2, half);
    const auto parts2 = tpalg::decompose_derivation_space(ds2, g2);
    REQUIRE(parts2.size() == 2);
    CHECK(parts2.at(Degree{0}).size() == 2);
    CHECK(parts2.at(Degree{1}).empty());
    CHECK(same_span(flats(parts2.at(Degree{0})), flats(ds2.basis), 81));
    for (const auto& m : parts2.at(Degree{0})) CHECK(tpalg::is_delta_derivation(s2, m, half).ok);

    const LieAlgebra s3 = tpalg::build_schrodinger(3);
    const auto parts3 = tpalg::decompose_derivation_space(tpalg::derivation_space(s3, half),
                                                          tpalg::standard_grading(s3));
    CHECK(parts3.at(Degree{0}).size() == 1);
    CHECK(parts3.at(Degree{1}).empty());
}

TEST_CASE("decomposition along the trivial grading keeps everything at degree zero") {
    const LieAlgebra abelian("abelian2", {"a", "b"}, {});
    const Grading trivial(GradingGroup{GradingGroup::Kind::Z2, 1},
                          std::vector<Degree>(2, Degree{0}));
    const auto parts =
        tpalg::decompose_derivation_space(tpalg::derivation_space(abelian, half), trivial);
    REQUIRE(parts.size() == 1);
    CHECK(parts.at(Degree{0}).size() == 4);
}

TEST_CASE("decomposition rejects gradings that fail the bracket check") {
    const LieAlgebra s1 = tpalg::build_schrodinger(1);
    const Grading bad(GradingGroup{GradingGroup::Kind::Z2, 1},
                      {{0}, {0}, {0}, {1}, {1}, {1}});
    CHECK_THROWS_AS(
        tpalg::decompose_derivation_space(tpalg::derivation_space(s1, half), bad),
        std::invalid_argument);
}
