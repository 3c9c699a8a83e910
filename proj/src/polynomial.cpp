#include "tpalg/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "tpalg/linalg.hpp"
#include "tpalg/sparse_matrix.hpp"

namespace tpalg {

Polynomial Polynomial::constant(const Rational& c) {
    Polynomial p;
    p.add_term({}, c);
    return p;
}

Polynomial Polynomial::variable(std::size_t v) {
    Polynomial p;
    p.add_term({v}, 1);
    return p;
}

int Polynomial::degree() const {
    if (terms_.empty()) return -1;
    std::size_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.size());
    return static_cast<int>(d);
}

Rational Polynomial::coefficient(const Monomial& m) const {
    Monomial key = m;
    std::sort(key.begin(), key.end());
    const auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(Monomial m, const Rational& c) {
    if (m.size() > 2) throw std::domain_error("polynomial degree limited to 2");
    if (c.is_zero()) return;
    std::sort(m.begin(), m.end());
    const auto [it, inserted] = terms_.emplace(std::move(m), c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coeff] : terms_) coeff *= c;
    return *this;
}

Polynomial Polynomial::operator-() const {
    Polynomial out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            Polynomial::Monomial m = ma;
            m.insert(m.end(), mb.begin(), mb.end());
            out.add_term(std::move(m), ca * cb);
        }
    return out;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& replacement) const {
    const auto lookup = [&](std::size_t v) -> const Polynomial& {
        if (v >= replacement.size())
            throw std::invalid_argument("substitute: no replacement for variable " +
                                        std::to_string(v));
        return replacement[v];
    };
    Polynomial out;
    for (const auto& [m, c] : terms_) {
        if (m.empty()) {
            out.add_term({}, c);
        } else if (m.size() == 1) {
            out += c * lookup(m[0]);
        } else {
            out += c * (lookup(m[0]) * lookup(m[1]));
        }
    }
    return out;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
    Rational out;
    for (const auto& [m, c] : terms_) {
        Rational term = c;
        for (const std::size_t v : m) {
            if (v >= point.size())
                throw std::invalid_argument("evaluate: no value for variable " +
                                            std::to_string(v));
            term *= point[v];
        }
        out += term;
    }
    return out;
}

Polynomial Polynomial::normalized() const {
    if (terms_.empty()) return {};
    mpz_class denom_lcm(1);
    for (const auto& [m, c] : terms_) mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(),
                                              c.den().get_mpz_t());
    mpz_class content(0);
    for (const auto& [m, c] : terms_) {
        mpz_class scaled = c.num() * (denom_lcm / c.den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), scaled.get_mpz_t());
    }
    Rational scale(denom_lcm, content);
    if (terms_.begin()->second.sign() < 0) scale = -scale;
    Polynomial out = *this;
    out *= scale;
    return out;
}

std::string Polynomial::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.str();
        for (const std::size_t v : m) os << "*" << names.at(v);
    }
    return os.str();
}

std::optional<Rational> rational_sqrt(const Rational& r) {
    if (r.sign() < 0) return std::nullopt;
    if (!mpz_perfect_square_p(r.num().get_mpz_t()) || !mpz_perfect_square_p(r.den().get_mpz_t()))
        return std::nullopt;
    mpz_class n, d;
    mpz_sqrt(n.get_mpz_t(), r.num().get_mpz_t());
    mpz_sqrt(d.get_mpz_t(), r.den().get_mpz_t());
    return Rational(n, d);
}

namespace {

/// Terms of q not involving variable u.
Polynomial drop_variable(const Polynomial& q, std::size_t u) {
    Polynomial out;
    for (const auto& [m, c] : q.terms())
        if (std::find(m.begin(), m.end(), u) == m.end()) out.add_term(m, c);
    return out;
}

/// For homogeneous quadratic q: the linear form L with q = A*x_u^2 + x_u*L + rest,
/// where rest has no x_u.
Polynomial cross_part(const Polynomial& q, std::size_t u) {
    Polynomial out;
    for (const auto& [m, c] : q.terms()) {
        if (m.size() != 2) continue;
        if (m[0] == u && m[1] != u)
            out.add_term({m[1]}, c);
        else if (m[1] == u && m[0] != u)
            out.add_term({m[0]}, c);
    }
    return out;
}

std::vector<std::size_t> variables_of(const Polynomial& p) {
    std::vector<std::size_t> vars;
    for (const auto& [m, c] : p.terms())
        for (const std::size_t v : m) vars.push_back(v);
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    return vars;
}

/// Is M a scalar multiple of the square of a rational linear form? Returns
/// (B, l) with M = B*l^2 and l monic in its smallest variable.
std::optional<std::pair<Rational, Polynomial>> as_scaled_square(const Polynomial& m) {
    const std::vector<std::size_t> vars = variables_of(m);
    const std::size_t v = vars.front();
    const Rational b = m.coefficient({v, v});
    if (b.is_zero()) return std::nullopt;
    Polynomial l = Polynomial::variable(v);
    const Rational half_inv = Rational(1, 2) * b.inverse();
    for (const std::size_t w : vars)
        if (w != v) l += (half_inv * m.coefficient({v, w})) * Polynomial::variable(w);
    if (m != b * (l * l)) return std::nullopt;
    return std::make_pair(b, l);
}

/// Solves L*r = Qp for a linear form r (no constant term); L linear, Qp
/// homogeneous quadratic, neither involving excluded variable u.
std::optional<Polynomial> divide_quadratic(const Polynomial& qp, const Polynomial& l) {
    std::vector<std::size_t> vars = variables_of(qp);
    for (const std::size_t v : variables_of(l)) vars.push_back(v);
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());

    std::map<Polynomial::Monomial, std::size_t> row_of;
    const auto row_index = [&](Polynomial::Monomial m) {
        std::sort(m.begin(), m.end());
        return row_of.emplace(std::move(m), row_of.size()).first->second;
    };
    // unknown t_w per candidate variable; match coefficients of L * sum t_w x_w = Qp
    std::vector<std::tuple<std::size_t, std::size_t, Rational>> entries;
    for (std::size_t col = 0; col < vars.size(); ++col)
        for (const auto& [m, c] : l.terms())
            entries.emplace_back(row_index({m[0], vars[col]}), col, c);
    std::vector<std::pair<std::size_t, Rational>> rhs_entries;
    for (const auto& [m, c] : qp.terms()) rhs_entries.emplace_back(row_index(m), c);

    MatrixBuilder mb(row_of.size(), vars.size());
    for (const auto& [r, col, c] : entries) mb.add(r, col, c);
    Vector rhs(row_of.size());
    for (const auto& [r, c] : rhs_entries) rhs[r] += c;
    const auto solution = solve_affine(mb.build(), rhs);
    if (!solution) return std::nullopt;
    Polynomial r;
    for (std::size_t col = 0; col < vars.size(); ++col)
        r += solution->particular[col] * Polynomial::variable(vars[col]);
    return r;
}

}  // namespace

std::optional<std::pair<Polynomial, Polynomial>> factor_quadratic(const Polynomial& q) {
    if (q.is_zero() || q.degree() != 2)
        throw std::invalid_argument("factor_quadratic: expected a nonzero quadratic");
    for (const auto& [m, c] : q.terms())
        if (m.size() != 2)
            throw std::invalid_argument("factor_quadratic: polynomial is not homogeneous");

    const std::size_t u = variables_of(q).front();
    const Rational a = q.coefficient({u, u});
    const Polynomial l = cross_part(q, u);
    const Polynomial rest = drop_variable(q, u);

    std::optional<std::pair<Polynomial, Polynomial>> factors;
    if (!a.is_zero()) {
        // q = A*(x_u + L/2A)^2 + M; factors over Q iff M = -A*N^2 for linear N
        const Polynomial base = Polynomial::variable(u) + (Rational(1, 2) * a.inverse()) * l;
        const Polynomial m = rest - (Rational(1, 4) * a.inverse()) * (l * l);
        if (m.is_zero()) {
            factors = std::make_pair(a * base, base);
        } else {
            const auto square = as_scaled_square(m);
            if (!square) return std::nullopt;
            const auto s = rational_sqrt(-square->first * a.inverse());
            if (!s) return std::nullopt;
            const Polynomial n = *s * square->second;
            factors = std::make_pair(a * (base + n), base - n);
        }
    } else {
        // x_u appears only through cross terms: q = x_u*L + rest = L*(x_u + r)
        if (rest.is_zero()) {
            factors = std::make_pair(Polynomial::variable(u), l);
        } else {
            const auto r = divide_quadratic(rest, l);
            if (!r) return std::nullopt;
            factors = std::make_pair(l, Polynomial::variable(u) + *r);
        }
    }
    if (factors->first * factors->second != q)
        throw std::logic_error("factor_quadratic: factor verification failed");
    return factors;
}

namespace {

struct SolveState {
    const std::vector<Polynomial>* eqs = nullptr;
    std::size_t nvars = 0;
    std::size_t max_branches = 0;
    std::size_t used = 0;
    bool failed = false;
    std::vector<std::vector<Vector>> leaves;
};

std::vector<Polynomial> substitution_for(const std::vector<Vector>& basis, std::size_t nvars) {
    std::vector<Polynomial> repl(nvars);
    for (std::size_t t = 0; t < basis.size(); ++t)
        for (std::size_t i = 0; i < nvars; ++i)
            if (!basis[t][i].is_zero()) repl[i] += basis[t][i] * Polynomial::variable(t);
    return repl;
}

/// basis spans the subspace satisfying every constraint imposed so far.
void explore(SolveState& st, const std::vector<Vector>& basis) {
    if (st.failed) return;
    if (++st.used > st.max_branches) {
        st.failed = true;
        return;
    }
    const std::vector<Polynomial> repl = substitution_for(basis, st.nvars);
    Polynomial pending;
    for (const Polynomial& q : *st.eqs) {
        Polynomial s = q.substitute(repl);
        if (!s.is_zero()) {
            pending = std::move(s);
            break;
        }
    }
    if (pending.is_zero()) {
        st.leaves.push_back(basis);
        return;
    }

    std::vector<Polynomial> factors;
    if (pending.degree() == 1) {
        factors.push_back(pending);
    } else {
        const auto f = factor_quadratic(pending);
        if (!f) {
            st.failed = true;
            return;
        }
        factors.push_back(f->first);
        factors.push_back(f->second);
    }
    for (const Polynomial& lin : factors) {
        MatrixBuilder mb(1, basis.size());
        for (const auto& [m, c] : lin.terms()) mb.add(0, m.front(), c);
        const std::vector<Vector> kernel = nullspace_basis(mb.build());
        std::vector<Vector> restricted;
        restricted.reserve(kernel.size());
        for (const Vector& w : kernel) {
            Vector v(st.nvars);
            for (std::size_t t = 0; t < basis.size(); ++t)
                if (!w[t].is_zero()) v.add_scaled(w[t], basis[t]);
            restricted.push_back(normalize_direction(v));
        }
        explore(st, restricted);
        if (st.failed) return;
    }
}

std::size_t rank_of(const std::vector<const std::vector<Vector>*>& groups, std::size_t dim) {
    std::size_t rows = 0;
    for (const auto* g : groups) rows += g->size();
    MatrixBuilder mb(rows, dim);
    std::size_t r = 0;
    for (const auto* g : groups)
        for (const Vector& v : *g) {
            for (std::size_t i = 0; i < dim; ++i)
                if (!v[i].is_zero()) mb.add(r, i, v[i]);
            ++r;
        }
    return rref(mb.build()).rank;
}

}  // namespace

QuadraticSolveResult solve_quadratic_system(const std::vector<Polynomial>& eqs, std::size_t nvars,
                                            std::size_t max_branches) {
    for (const Polynomial& q : eqs) {
        if (q.is_zero()) continue;
        const std::size_t deg = q.terms().rbegin()->first.size();
        for (const auto& [m, c] : q.terms())
            if (m.size() != deg)
                throw std::invalid_argument("solve_quadratic_system: constraints must be "
                                            "homogeneous");
        if (deg == 0)
            throw std::invalid_argument("solve_quadratic_system: constraints must be "
                                        "homogeneous");
    }

    SolveState st;
    st.eqs = &eqs;
    st.nvars = nvars;
    st.max_branches = max_branches;
    std::vector<Vector> full;
    full.reserve(nvars);
    for (std::size_t i = 0; i < nvars; ++i) full.push_back(unit_vector(nvars, i));
    explore(st, full);
    if (st.failed) return {};

    QuadraticSolveResult out;
    out.resolved = true;
    for (std::size_t i = 0; i < st.leaves.size(); ++i) {
        bool keep = true;
        for (std::size_t j = 0; j < st.leaves.size() && keep; ++j) {
            if (i == j) continue;
            const std::size_t rank_j = rank_of({&st.leaves[j]}, nvars);
            const std::size_t rank_ij = rank_of({&st.leaves[i], &st.leaves[j]}, nvars);
            if (rank_ij != rank_j) continue;  // leaf i not contained in leaf j
            const std::size_t rank_i = rank_of({&st.leaves[i]}, nvars);
            if (rank_i < rank_j || j < i) keep = false;
        }
        if (keep) out.solution_bases.push_back(st.leaves[i]);
    }
    return out;
}

}  // namespace tpalg
