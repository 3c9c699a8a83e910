#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tpalg/rational.hpp"
#include "tpalg/vector.hpp"

namespace tpalg {

/// Polynomial of total degree at most 2 over indexed parameters. A monomial
/// is the sorted list of its variable indices (at most two, possibly equal);
/// zero coefficients are never stored, so the zero polynomial has no terms.
class Polynomial {
public:
    using Monomial = std::vector<std::size_t>;

    Polynomial() = default;

    static Polynomial constant(const Rational& c);
    static Polynomial variable(std::size_t v);

    bool is_zero() const { return terms_.empty(); }
    /// Total degree, or -1 for the zero polynomial.
    int degree() const;

    const std::map<Monomial, Rational>& terms() const { return terms_; }
    Rational coefficient(const Monomial& m) const;

    /// Adds c times the monomial m (m gets sorted; throws on degree > 2).
    void add_term(Monomial m, const Rational& c);

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Rational& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Rational& c, Polynomial p) { return p *= c; }
    Polynomial operator-() const;

    /// Product; throws std::domain_error when the result would exceed degree 2.
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

    /// Replaces variable v by replacement[v] everywhere; the result must stay
    /// within degree 2. Throws std::invalid_argument when a variable has no
    /// replacement entry.
    Polynomial substitute(const std::vector<Polynomial>& replacement) const;

    Rational evaluate(const std::vector<Rational>& point) const;

    /// Scalar multiple with integer coefficients of content 1 whose first
    /// stored coefficient is positive. Zero stays zero.
    Polynomial normalized() const;

    /// Deterministic rendering over the given variable names, terms in
    /// stored order joined by " + ", each "<coeff>", "<coeff>*<v>" or
    /// "<coeff>*<v>*<w>". The zero polynomial renders as "0".
    std::string str(const std::vector<std::string>& names) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }
    friend bool operator<(const Polynomial& a, const Polynomial& b) {
        return a.terms_ < b.terms_;
    }

private:
    std::map<Monomial, Rational> terms_;
};

/// Exact square root in the rationals, when one exists.
std::optional<Rational> rational_sqrt(const Rational& r);

/// Writes a homogeneous quadratic as a product of two linear forms with
/// rational coefficients, when possible; the returned pair multiplies back
/// to q exactly. Returns std::nullopt when no rational factorization exists.
/// Throws std::invalid_argument unless q is homogeneous of degree 2.
std::optional<std::pair<Polynomial, Polynomial>> factor_quadratic(const Polynomial& q);

/// Outcome of solve_quadratic_system: when resolved, the solution variety is
/// exactly the union of the returned linear subspaces (one basis per maximal
/// subspace, discovery order, no subspace contained in another).
struct QuadraticSolveResult {
    bool resolved = false;
    std::vector<std::vector<Vector>> solution_bases;
};

/// Solves a system of homogeneous polynomial equations of degree at most 2
/// in nvars variables by linear elimination plus case splits: a quadratic
/// constraint is handled by factoring it into two linear forms and branching
/// on each. Gives up (resolved = false) when a quadratic does not factor
/// over the rationals or the case tree exceeds max_branches nodes. Throws
/// std::invalid_argument on non-homogeneous input.
QuadraticSolveResult solve_quadratic_system(const std::vector<Polynomial>& eqs, std::size_t nvars,
                                            std::size_t max_branches = 64);

}  // namespace tpalg
