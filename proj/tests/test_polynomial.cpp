#include "tpalg/polynomial.hpp"

#include <random>
#include <stdexcept>

#include "doctest.h"
#include "support/test_helpers.hpp"
#include "tpalg/rational.hpp"

using namespace tpalg;
using tpalg::testing::same_span;
using tpalg::testing::vec;

namespace {

Polynomial var(std::size_t v) { return Polynomial::variable(v); }

Polynomial random_linear(std::mt19937& rng, std::size_t nvars) {
    std::uniform_int_distribution<int> coeff(-4, 4);
    Polynomial out;
    for (std::size_t v = 0; v < nvars; ++v) out += Rational(coeff(rng)) * var(v);
    return out;
}

}  // namespace

TEST_CASE("polynomial arithmetic and term bookkeeping") {
    const Polynomial p = Rational(2) * var(0) + Rational(3) * (var(1) * var(1));
    CHECK(p.degree() == 2);
    CHECK(p.coefficient({0}) == Rational(2));
    CHECK(p.coefficient({1, 1}) == Rational(3));
    CHECK(p.coefficient({0, 1}) == Rational(0));

    CHECK((p - p).is_zero());
    CHECK((p - p).degree() == -1);
    CHECK(Polynomial::constant(5).degree() == 0);
    CHECK(Polynomial::constant(0).is_zero());

    Polynomial q;
    q.add_term({1, 0}, Rational(7));  // monomial gets sorted
    CHECK(q.coefficient({0, 1}) == Rational(7));
    q.add_term({0, 1}, Rational(-7));
    CHECK(q.is_zero());

    // cancellation keeps the map clean
    const Polynomial r = (var(0) + var(1)) * (var(0) - var(1));
    CHECK(r.coefficient({0, 0}) == Rational(1));
    CHECK(r.coefficient({1, 1}) == Rational(-1));
    CHECK(r.coefficient({0, 1}).is_zero());
    CHECK(r.terms().size() == 2);
}

TEST_CASE("polynomial multiplication rejects degree overflow") {
    const Polynomial quadratic = var(0) * var(1);
    CHECK_THROWS_AS(quadratic * var(0), std::domain_error);
    CHECK_THROWS_AS(quadratic * quadratic, std::domain_error);
    CHECK((quadratic * Polynomial::constant(3)).coefficient({0, 1}) == Rational(3));
}

TEST_CASE("polynomial substitution and evaluation") {
    // (x0 + x1)^2 with x0 -> 2y0, x1 -> y0 - y1
    const Polynomial p = (var(0) + var(1)) * (var(0) + var(1));
    const std::vector<Polynomial> repl = {Rational(2) * var(0), var(0) - var(1)};
    const Polynomial s = p.substitute(repl);
    // (3y0 - y1)^2 = 9y0^2 - 6y0y1 + y1^2
    CHECK(s.coefficient({0, 0}) == Rational(9));
    CHECK(s.coefficient({0, 1}) == Rational(-6));
    CHECK(s.coefficient({1, 1}) == Rational(1));

    CHECK(p.evaluate({Rational(3), Rational(-1)}) == Rational(4));
    CHECK_THROWS_AS(p.evaluate({Rational(1)}), std::invalid_argument);
    CHECK_THROWS_AS(p.substitute({var(0)}), std::invalid_argument);

    const Polynomial vanishing = (var(0) - var(1)).substitute({var(2), var(2)});
    CHECK(vanishing.is_zero());
}

TEST_CASE("polynomial normalization and rendering") {
    const Polynomial p =
        Rational(1, 2) * (var(0) * var(1)) - Rational(1, 3) * (var(2) * var(2));
    const Polynomial n = p.normalized();
    CHECK(n.coefficient({0, 1}) == Rational(3));
    CHECK(n.coefficient({2, 2}) == Rational(-2));
    CHECK((-p).normalized() == n);
    CHECK(Polynomial().normalized().is_zero());

    const std::vector<std::string> names = {"a", "b", "c"};
    CHECK(n.str(names) == "3*a*b + -2*c*c");
    CHECK(Polynomial().str(names) == "0");
    CHECK((Polynomial::constant(-2) + var(1)).str(names) == "-2 + 1*b");
}

TEST_CASE("rational square roots") {
    CHECK(*rational_sqrt(Rational(4, 9)) == Rational(2, 3));
    CHECK(*rational_sqrt(Rational(0)) == Rational(0));
    CHECK(*rational_sqrt(Rational(49)) == Rational(7));
    CHECK(!rational_sqrt(Rational(2)).has_value());
    CHECK(!rational_sqrt(Rational(4, 7)).has_value());
    CHECK(!rational_sqrt(Rational(-1)).has_value());
}

TEST_CASE("factoring quadratics that split over the rationals") {
    const auto check_factors = [](const Polynomial& q) {
        const auto f = factor_quadratic(q);
        REQUIRE(f.has_value());
        CHECK(f->first.degree() == 1);
        CHECK(f->second.degree() == 1);
        CHECK(f->first * f->second == q);
    };

    check_factors(var(0) * var(0) - var(1) * var(1));
    check_factors(var(0) * var(1));
    check_factors(var(0) * var(0));
    check_factors((Rational(2) * var(0) + Rational(3) * var(1)) * (var(0) - var(1)));
    check_factors(var(0) * var(1) + var(0) * var(2));   // x*(y + z)
    check_factors(var(0) * var(1) + var(1) * var(2));   // y*(x + z), no x^2 term
    check_factors(Rational(4) * (var(0) * var(0)) - Rational(9, 25) * (var(1) * var(1)));
}

TEST_CASE("factoring rejects irreducible quadratics") {
    CHECK(!factor_quadratic(var(0) * var(0) + var(1) * var(1)).has_value());
    // x^2 - 2y^2: would need sqrt(2)
    CHECK(!factor_quadratic(var(0) * var(0) - Rational(2) * (var(1) * var(1))).has_value());
    // xy + z^2 has rank 3
    CHECK(!factor_quadratic(var(0) * var(1) + var(2) * var(2)).has_value());
    // x0x1 + x1x2 + x2x0 also rank 3
    CHECK(!factor_quadratic(var(0) * var(1) + var(1) * var(2) + var(2) * var(0)).has_value());
}

TEST_CASE("factoring validates its input") {
    CHECK_THROWS_AS(factor_quadratic(Polynomial()), std::invalid_argument);
    CHECK_THROWS_AS(factor_quadratic(var(0)), std::invalid_argument);
    CHECK_THROWS_AS(factor_quadratic(var(0) * var(0) + var(1)), std::invalid_argument);
    CHECK_THROWS_AS(factor_quadratic(var(0) * var(0) + Polynomial::constant(1)),
                    std::invalid_argument);
}

TEST_CASE("products of random linear forms always factor back") {
    std::mt19937 rng(5150);
    for (int trial = 0; trial < 200; ++trial) {
        const Polynomial a = random_linear(rng, 4);
        const Polynomial b = random_linear(rng, 4);
        const Polynomial q = a * b;
        if (q.is_zero()) continue;
        const auto f = factor_quadratic(q);
        REQUIRE(f.has_value());
        CHECK(f->first * f->second == q);
    }
}

TEST_CASE("solving an empty system keeps the full space") {
    const auto res = solve_quadratic_system({}, 3);
    REQUIRE(res.resolved);
    REQUIRE(res.solution_bases.size() == 1);
    CHECK(res.solution_bases[0].size() == 3);
}

TEST_CASE("solving a single split quadratic branches into both hyperplanes") {
    const auto res = solve_quadratic_system({var(0) * var(1)}, 2);
    REQUIRE(res.resolved);
    REQUIRE(res.solution_bases.size() == 2);
    CHECK(same_span(res.solution_bases[0], {vec({0, 1})}, 2));
    CHECK(same_span(res.solution_bases[1], {vec({1, 0})}, 2));
}

TEST_CASE("solving a perfect square deduplicates the repeated branch") {
    const auto res = solve_quadratic_system({var(0) * var(0)}, 2);
    REQUIRE(res.resolved);
    REQUIRE(res.solution_bases.size() == 1);
    CHECK(same_span(res.solution_bases[0], {vec({0, 1})}, 2));
}

TEST_CASE("solving mixes linear constraints with case splits") {
    const std::vector<Polynomial> eqs = {var(0) - var(1), var(0) * var(2)};
    const auto res = solve_quadratic_system(eqs, 3);
    REQUIRE(res.resolved);
    REQUIRE(res.solution_bases.size() == 2);
    CHECK(same_span(res.solution_bases[0], {vec({0, 0, 1})}, 3));
    CHECK(same_span(res.solution_bases[1], {vec({1, 1, 0})}, 3));
}

TEST_CASE("solving keeps only maximal solution subspaces") {
    // (x0 - x1)(x0 + x1) = 0 and x0*x2 = 0: three lines, one shared
    const std::vector<Polynomial> eqs = {var(0) * var(0) - var(1) * var(1), var(0) * var(2)};
    const auto res = solve_quadratic_system(eqs, 3);
    REQUIRE(res.resolved);
    REQUIRE(res.solution_bases.size() == 3);
    CHECK(same_span(res.solution_bases[0], {vec({0, 0, 1})}, 3));
    CHECK(same_span(res.solution_bases[1], {vec({1, -1, 0})}, 3));
    CHECK(same_span(res.solution_bases[2], {vec({1, 1, 0})}, 3));
}

TEST_CASE("solutions of a resolved system satisfy every equation") {
    std::mt19937 rng(661);
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<Polynomial> eqs;
        for (int e = 0; e < 2; ++e) eqs.push_back(random_linear(rng, 4) * random_linear(rng, 4));
        const auto res = solve_quadratic_system(eqs, 4);
        if (!res.resolved) continue;  // budget exhaustion is allowed, wrong answers are not
        CHECK(!res.solution_bases.empty());
        for (const auto& basis : res.solution_bases) {
            Vector point(4);
            for (const Vector& b : basis) point.add_scaled(Rational(coeff(rng)), b);
            for (const Polynomial& q : eqs)
                CHECK(q.evaluate(point.coords()) == Rational(0));
        }
    }
}

TEST_CASE("solver reports unresolved systems honestly") {
    const auto res = solve_quadratic_system({var(0) * var(0) + var(1) * var(1)}, 2);
    CHECK(!res.resolved);
    CHECK(res.solution_bases.empty());

    // budget exhaustion
    const auto tight = solve_quadratic_system({var(0) * var(1)}, 2, 1);
    CHECK(!tight.resolved);

    CHECK_THROWS_AS(solve_quadratic_system({var(0) + Polynomial::constant(1)}, 1),
                    std::invalid_argument);
}
