#include <random>
#include <stdexcept>

#include "doctest.h"
#include "support/test_helpers.hpp"
#include "tpalg/catalog.hpp"
#include "tpalg/lie_algebra.hpp"

using tpalg::Degree;
using tpalg::Grading;
using tpalg::GradingGroup;
using tpalg::LieAlgebra;
using tpalg::Rational;
using tpalg::Vector;
using tpalg::testing::vec;

namespace {

// expected table entry: single term coeff*target at the stored pair (i, j)
struct Line {
    std::size_t i, j;
    long coeff;
    std::size_t target;
};

LieAlgebra::Table table_from(std::size_t dim, const std::vector<Line>& lines) {
    LieAlgebra::Table t;
    for (const auto& l : lines) {
        auto [it, fresh] = t.try_emplace({l.i, l.j}, Vector(dim));
        it->second[l.target] += Rational(l.coeff);
    }
    return t;
}

}  // namespace

TEST_CASE("catalog sl2 has the classical table") {
    const LieAlgebra sl2 = tpalg::build_catalog("sl2");
    CHECK(sl2.dim() == 3);
    CHECK(sl2.labels() == std::vector<std::string>{"e", "f", "h"});
    // [e,f]=h, [h,e]=2e, [f,h]=2f
    CHECK(sl2.table() == table_from(3, {{0, 1, 1, 2}, {0, 2, -2, 0}, {1, 2, 2, 1}}));
    CHECK(sl2.bracket_basis(2, 0) == vec({2, 0, 0}));
    CHECK(tpalg::check_jacobi(sl2).ok);
}

TEST_CASE("catalog heisenberg_1 is the 3-dimensional Heisenberg algebra") {
    const LieAlgebra h1 = tpalg::build_catalog("heisenberg", 1);
    CHECK(h1.dim() == 3);
    CHECK(h1.labels() == std::vector<std::string>{"z", "x1", "y1"});
    CHECK(h1.table() == table_from(3, {{1, 2, 1, 0}}));
    // z is central
    CHECK(h1.bracket_basis(0, 1).is_zero());
    CHECK(h1.bracket_basis(0, 2).is_zero());
    CHECK(tpalg::check_jacobi(h1).ok);
}

TEST_CASE("catalog so_2 is one-dimensional abelian, so_3 closes under the delta formula") {
    const LieAlgebra so2 = tpalg::build_catalog("so_2");
    CHECK(so2.dim() == 1);
    CHECK(so2.table().empty());

    const LieAlgebra so3 = tpalg::build_catalog("so", 3);
    CHECK(so3.dim() == 3);
    CHECK(so3.labels() == std::vector<std::string>{"s12", "s13", "s23"});
    // [s12,s13]=-s23, [s12,s23]=s13, [s13,s23]=-s12
    CHECK(so3.table() == table_from(3, {{0, 1, -1, 2}, {0, 2, 1, 1}, {1, 2, -1, 0}}));
    CHECK(tpalg::check_jacobi(so3).ok);
}

TEST_CASE("catalog name handling") {
    CHECK(tpalg::build_catalog("schrodinger_2") == tpalg::build_catalog("schrodinger", 2));
    CHECK(tpalg::build_catalog("so_4") == tpalg::build_catalog("so", 4));
    CHECK_THROWS_AS(tpalg::build_catalog("sl2", 3), std::invalid_argument);
    CHECK_THROWS_AS(tpalg::build_catalog("so"), std::invalid_argument);
    CHECK_THROWS_AS(tpalg::build_catalog("so_2", 3), std::invalid_argument);
    CHECK_THROWS_AS(tpalg::build_catalog("so_0"), std::invalid_argument);
    CHECK_THROWS_AS(tpalg::build_catalog("nope"), std::invalid_argument);
}

TEST_CASE("schrodinger n=1 matches the 6-dimensional table") {
    const LieAlgebra s1 = tpalg::build_schrodinger(1);
    CHECK(s1.dim() == 6);
    CHECK(s1.labels() == std::vector<std::string>{"e", "f", "h", "z", "x1", "y1"});
    CHECK(s1.table() == table_from(6, {
                            {0, 1, 1, 2},   // [e,f]=h
                            {0, 2, -2, 0},  // [h,e]=2e
                            {1, 2, 2, 1},   // [f,h]=2f
                            {4, 5, 1, 3},   // [x1,y1]=z
                            {2, 4, 1, 4},   // [h,x1]=x1
                            {2, 5, -1, 5},  // [h,y1]=-y1
                            {0, 5, 1, 4},   // [e,y1]=x1
                            {1, 4, 1, 5},   // [f,x1]=y1
                        }));
}

TEST_CASE("schrodinger n=2 matches the 9-dimensional table") {
    const LieAlgebra s2 = tpalg::build_schrodinger(2);
    CHECK(s2.dim() == 9);
    CHECK(s2.labels() == std::vector<std::string>{"e", "f", "h", "z", "x1", "x2", "y1", "y2",
                                                  "s12"});
    CHECK(s2.table() == table_from(9, {
                            {0, 1, 1, 2},   // [e,f]=h
                            {0, 2, -2, 0},  // [h,e]=2e
                            {1, 2, 2, 1},   // [f,h]=2f
                            {4, 6, 1, 3},   // [x1,y1]=z
                            {5, 7, 1, 3},   // [x2,y2]=z
                            {2, 4, 1, 4},   // [h,x1]=x1
                            {2, 5, 1, 5},   // [h,x2]=x2
                            {2, 6, -1, 6},  // [h,y1]=-y1
                            {2, 7, -1, 7},  // [h,y2]=-y2
                            {0, 6, 1, 4},   // [e,y1]=x1
                            {0, 7, 1, 5},   // [e,y2]=x2
                            {1, 4, 1, 6},   // [f,x1]=y1
                            {1, 5, 1, 7},   // [f,x2]=y2
                            {4, 8, 1, 5},   // [s12,x1]=-x2
                            {5, 8, -1, 4},  // [s12,x2]=x1
                            {6, 8, 1, 7},   // [s12,y1]=-y2
                            {7, 8, -1, 6},  // [s12,y2]=y1
                        }));
    CHECK(s2.bracket_basis(8, 4) == vec({0, 0, 0, 0, 0, -1, 0, 0, 0}));  // [s12,x1]=-x2
    CHECK(s2.bracket_basis(8, 7) == vec({0, 0, 0, 0, 0, 0, 1, 0, 0}));   // [s12,y2]=y1
}

TEST_CASE("schrodinger dimension formula and Jacobi identity") {
    CHECK_THROWS_AS(tpalg::build_schrodinger(0), std::invalid_argument);
    for (unsigned n = 1; n <= 10; ++n) {
        const std::size_t nn = n;
        CHECK(tpalg::schrodinger_dim(n) == 4 + 2 * nn + nn * (nn - 1) / 2);
        CHECK(tpalg::build_schrodinger(n).dim() == tpalg::schrodinger_dim(n));
    }
    CHECK(tpalg::build_schrodinger(3).dim() == 13);
    for (unsigned n = 1; n <= 5; ++n) CHECK(tpalg::check_jacobi(tpalg::build_schrodinger(n)).ok);

    // [s12,s13] expands by the delta formula to -s23
    const LieAlgebra s3 = tpalg::build_schrodinger(3);
    const std::size_t s12 = *s3.index_of("s12");
    const std::size_t s13 = *s3.index_of("s13");
    const std::size_t s23 = *s3.index_of("s23");
    Vector want(13);
    want[s23] = Rational(-1);
    CHECK(s3.bracket_basis(s12, s13) == want);
}

TEST_CASE("bracket is bilinear and antisymmetric") {
    const LieAlgebra s2 = tpalg::build_schrodinger(2);
    // [h,e] = 2e through the vector interface
    CHECK(s2.bracket(tpalg::unit_vector(9, 2), tpalg::unit_vector(9, 0)) ==
          Rational(2) * tpalg::unit_vector(9, 0));

    std::mt19937 gen(2711);
    std::uniform_int_distribution<long> coord(-4, 4);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<Rational> a(9), b(9);
        for (auto& c : a) c = Rational(coord(gen));
        for (auto& c : b) c = Rational(coord(gen));
        const Vector x{std::vector<Rational>(a)}, y{std::vector<Rational>(b)};
        CHECK(s2.bracket(x, y) == -s2.bracket(y, x));
        CHECK(s2.bracket(x, x).is_zero());
    }
    CHECK_THROWS_AS(s2.bracket(tpalg::unit_vector(8, 0), tpalg::unit_vector(9, 0)),
                    std::invalid_argument);
}

TEST_CASE("check_jacobi flags a corrupted sl2 table") {
    // [h,e]=e instead of 2e: stored as [e,h]=-e
    const LieAlgebra bad("bad_sl2", {"e", "f", "h"},
                         table_from(3, {{0, 1, 1, 2}, {0, 2, -1, 0}, {1, 2, 2, 1}}));
    const auto report = tpalg::check_jacobi(bad);
    CHECK_FALSE(report.ok);
    REQUIRE(report.violations.size() == 1);
    CHECK(report.violations[0].i == 0);
    CHECK(report.violations[0].j == 1);
    CHECK(report.violations[0].k == 2);
    CHECK_FALSE(report.violations[0].residual.is_zero());

    const LieAlgebra abelian("abelian3", {"a", "b", "c"}, {});
    CHECK(tpalg::check_jacobi(abelian).ok);
}

TEST_CASE("standard grading splits the schrodinger algebra into even and odd parts") {
    const LieAlgebra s2 = tpalg::build_schrodinger(2);
    const Grading g2 = tpalg::standard_grading(s2);
    CHECK(g2.group() == GradingGroup{GradingGroup::Kind::Z2, 1});
    CHECK(g2.degree(*s2.index_of("s12")) == Degree{0});
    CHECK(g2.degree(*s2.index_of("x1")) == Degree{1});
    CHECK(g2.degree(*s2.index_of("z")) == Degree{0});

    const Grading g1 = tpalg::standard_grading(tpalg::build_schrodinger(1));
    const std::vector<Degree> want = {{0}, {0}, {0}, {0}, {1}, {1}};
    for (std::size_t i = 0; i < 6; ++i) CHECK(g1.degree(i) == want[i]);

    const LieAlgebra s5 = tpalg::build_schrodinger(5);
    CHECK(tpalg::check_grading(s5, tpalg::standard_grading(s5)).ok);

    const LieAlgebra renamed("mystery", s2.labels(), LieAlgebra::Table(s2.table()));
    CHECK_THROWS_AS(tpalg::standard_grading(renamed), std::invalid_argument);
}

TEST_CASE("check_grading accepts the trivial grading and rejects a wrong degree") {
    const LieAlgebra s1 = tpalg::build_schrodinger(1);
    const Grading trivial(GradingGroup{GradingGroup::Kind::Z2, 1},
                          std::vector<Degree>(6, Degree{0}));
    CHECK(tpalg::check_grading(s1, trivial).ok);

    // deg(z)=1 breaks [x1,y1]=z: 1+1=0 but z sits in degree 1
    std::vector<Degree> degrees = {{0}, {0}, {0}, {1}, {1}, {1}};
    const auto report =
        tpalg::check_grading(s1, Grading(GradingGroup{GradingGroup::Kind::Z2, 1}, degrees));
    CHECK_FALSE(report.ok);
    REQUIRE(report.violations.size() == 1);
    CHECK(report.violations[0].i == 4);
    CHECK(report.violations[0].j == 5);
    CHECK(report.violations[0].k == 3);

    CHECK_THROWS_AS(tpalg::check_grading(s1, tpalg::standard_grading(tpalg::build_schrodinger(2))),
                    std::invalid_argument);
}

TEST_CASE("grading groups parse and print") {
    CHECK(GradingGroup::parse("Z2") == GradingGroup{GradingGroup::Kind::Z2, 1});
    CHECK(GradingGroup::parse("Z^3") == GradingGroup{GradingGroup::Kind::ZK, 3});
    CHECK(GradingGroup::parse("Z2^2") == GradingGroup{GradingGroup::Kind::Z2K, 2});
    CHECK(GradingGroup{GradingGroup::Kind::ZK, 3}.str() == "Z^3");
    CHECK_THROWS_AS(GradingGroup::parse("Z3"), std::invalid_argument);
    CHECK_THROWS_AS(GradingGroup::parse("Z^0"), std::invalid_argument);

    const GradingGroup z22{GradingGroup::Kind::Z2K, 2};
    const Grading g(z22, {{1, 1}, {0, 1}});
    CHECK(g.add({1, 1}, {0, 1}) == Degree{1, 0});
    CHECK(Grading::parse_degree("1,0", z22) == Degree{1, 0});
    CHECK(Grading::parse_degree("3,-1", z22) == Degree{3, -1});  // normalized on use
    CHECK(g.normalize({3, -1}) == Degree{1, 1});
    CHECK(Grading::degree_str({1, 0}) == "1,0");
    CHECK_THROWS_AS(Grading::parse_degree("1", z22), std::invalid_argument);
    CHECK_THROWS_AS(Grading::parse_degree("a,b", z22), std::invalid_argument);
}

TEST_CASE("brackets of odd basis vectors land in the even part") {
    for (unsigned n : {1u, 2u, 3u, 4u}) {
        const LieAlgebra s = tpalg::build_schrodinger(n);
        const Grading g = tpalg::standard_grading(s);
        const std::size_t z = 3;
        for (std::size_t i = 0; i < s.dim(); ++i) {
            for (std::size_t j = i + 1; j < s.dim(); ++j) {
                if (g.degree(i) != Degree{1} || g.degree(j) != Degree{1}) continue;
                const Vector b = s.bracket_basis(i, j);
                for (std::size_t k = 0; k < s.dim(); ++k)
                    if (!b[k].is_zero()) CHECK(k == z);  // x/y pairs only reach z
            }
        }
    }
}

TEST_CASE("lie algebra constructor validates input") {
    CHECK_THROWS_AS(LieAlgebra("a b", {"x"}, {}), std::invalid_argument);
    CHECK_THROWS_AS(LieAlgebra("a", {"x", "x"}, {}), std::invalid_argument);
    CHECK_THROWS_AS(LieAlgebra("a", {"x", ""}, {}), std::invalid_argument);
    CHECK_THROWS_AS(LieAlgebra("a", {"x", "y"}, table_from(2, {{1, 0, 1, 0}})),
                    std::invalid_argument);
    CHECK_THROWS_AS(LieAlgebra("a", {"x", "y"}, table_from(2, {{0, 2, 1, 0}})),
                    std::invalid_argument);
    CHECK_THROWS_AS(LieAlgebra("a", {"x", "y"}, table_from(3, {{0, 1, 1, 2}})),
                    std::invalid_argument);
}
