#include "tpalg/catalog.hpp"

#include <stdexcept>

namespace tpalg {
namespace {

std::string s_label(unsigned j, unsigned k) {
    if (j < 10 && k < 10) return "s" + std::to_string(j) + std::to_string(k);
    return "s" + std::to_string(j) + "_" + std::to_string(k);
}

// Collects bracket lines, normalizing [e_j,e_i] with j > i into -[e_i,e_j].
class TableBuilder {
public:
    explicit TableBuilder(std::size_t dim) : dim_(dim) {}

    void add(std::size_t i, std::size_t j, std::size_t target, const Rational& coeff) {
        if (i == j) throw std::logic_error("TableBuilder: [e_i,e_i] must be zero");
        Rational c = coeff;
        if (i > j) {
            std::swap(i, j);
            c = -c;
        }
        auto [it, inserted] = table_.try_emplace({i, j}, Vector(dim_));
        it->second[target] += c;
    }

    LieAlgebra::Table take() { return std::move(table_); }

private:
    std::size_t dim_;
    LieAlgebra::Table table_;
};

// Indices into the schrodinger basis order [e,f,h,z,x_*,y_*,s_*].
struct SchrodingerIndex {
    unsigned n;
    std::size_t e = 0, f = 1, h = 2, z = 3;
    std::size_t x(unsigned i) const { return 4 + (i - 1); }
    std::size_t y(unsigned i) const { return 4 + n + (i - 1); }
    std::size_t s(unsigned j, unsigned k) const {
        // lexicographic position of (j,k), j < k, within the s-block
        std::size_t before = 0;
        for (unsigned t = 1; t < j; ++t) before += n - t;
        return 4 + 2 * n + before + (k - j - 1);
    }
};

// The four Kronecker-delta terms of [s_jk, s_lm], each normalized to the
// lexicographic generator with a sign (s_ab = -s_ba, s_aa = 0). s_index maps
// an ordered generator pair a < b to its basis position.
template <typename SIdx>
void add_so_bracket(TableBuilder& tb, SIdx s_index, std::size_t row_i, std::size_t row_j,
                    unsigned j, unsigned k, unsigned l, unsigned m) {
    const auto term = [&](unsigned a, unsigned b, long sign) {
        if (a == b) return;
        if (a < b)
            tb.add(row_i, row_j, s_index(a, b), Rational(sign));
        else
            tb.add(row_i, row_j, s_index(b, a), Rational(-sign));
    };
    if (l == k) term(j, m, 1);
    if (j == m) term(k, l, 1);
    if (m == k) term(l, j, 1);
    if (l == j) term(m, k, 1);
}

LieAlgebra build_sl2() {
    TableBuilder tb(3);
    tb.add(0, 1, 2, Rational(1));   // [e,f] = h
    tb.add(2, 0, 0, Rational(2));   // [h,e] = 2e
    tb.add(1, 2, 1, Rational(2));   // [f,h] = 2f
    return LieAlgebra("sl2", {"e", "f", "h"}, tb.take());
}

LieAlgebra build_heisenberg(unsigned n) {
    const std::size_t dim = 2 * static_cast<std::size_t>(n) + 1;
    std::vector<std::string> labels = {"z"};
    for (unsigned i = 1; i <= n; ++i) labels.push_back("x" + std::to_string(i));
    for (unsigned i = 1; i <= n; ++i) labels.push_back("y" + std::to_string(i));
    TableBuilder tb(dim);
    for (unsigned i = 1; i <= n; ++i) tb.add(i, n + i, 0, Rational(1));  // [x_i,y_i] = z
    return LieAlgebra("heisenberg_" + std::to_string(n), std::move(labels), tb.take());
}

LieAlgebra build_so(unsigned n) {
    std::vector<std::pair<unsigned, unsigned>> pairs;
    std::vector<std::string> labels;
    for (unsigned j = 1; j <= n; ++j)
        for (unsigned k = j + 1; k <= n; ++k) {
            pairs.emplace_back(j, k);
            labels.push_back(s_label(j, k));
        }
    const auto s_index = [&](unsigned a, unsigned b) -> std::size_t {
        std::size_t before = 0;
        for (unsigned t = 1; t < a; ++t) before += n - t;
        return before + (b - a - 1);
    };
    TableBuilder tb(pairs.size());
    for (std::size_t u = 0; u < pairs.size(); ++u)
        for (std::size_t v = u + 1; v < pairs.size(); ++v)
            add_so_bracket(tb, s_index, u, v, pairs[u].first, pairs[u].second, pairs[v].first,
                           pairs[v].second);
    return LieAlgebra("so_" + std::to_string(n), std::move(labels), tb.take());
}

}  // namespace

std::size_t schrodinger_dim(unsigned n) {
    const std::size_t nn = n;
    return 4 + 2 * nn + nn * (nn - 1) / 2;
}

LieAlgebra build_schrodinger(unsigned n) {
    if (n == 0) throw std::invalid_argument("build_schrodinger: n must be >= 1");
    const SchrodingerIndex ix{n};
    const std::size_t dim = schrodinger_dim(n);

    std::vector<std::string> labels = {"e", "f", "h", "z"};
    for (unsigned i = 1; i <= n; ++i) labels.push_back("x" + std::to_string(i));
    for (unsigned i = 1; i <= n; ++i) labels.push_back("y" + std::to_string(i));
    for (unsigned j = 1; j <= n; ++j)
        for (unsigned k = j + 1; k <= n; ++k) labels.push_back(s_label(j, k));

    TableBuilder tb(dim);
    tb.add(ix.e, ix.f, ix.h, Rational(1));  // [e,f] = h
    tb.add(ix.h, ix.e, ix.e, Rational(2));  // [h,e] = 2e
    tb.add(ix.f, ix.h, ix.f, Rational(2));  // [f,h] = 2f
    for (unsigned i = 1; i <= n; ++i) {
        tb.add(ix.x(i), ix.y(i), ix.z, Rational(1));   // [x_i,y_i] = z
        tb.add(ix.h, ix.x(i), ix.x(i), Rational(1));   // [h,x_i] = x_i
        tb.add(ix.h, ix.y(i), ix.y(i), Rational(-1));  // [h,y_i] = -y_i
        tb.add(ix.e, ix.y(i), ix.x(i), Rational(1));   // [e,y_i] = x_i
        tb.add(ix.f, ix.x(i), ix.y(i), Rational(1));   // [f,x_i] = y_i
    }
    for (unsigned j = 1; j <= n; ++j)
        for (unsigned k = j + 1; k <= n; ++k) {
            tb.add(ix.s(j, k), ix.x(k), ix.x(j), Rational(1));   // [s_jk,x_k] = x_j
            tb.add(ix.s(j, k), ix.x(j), ix.x(k), Rational(-1));  // [s_jk,x_j] = -x_k
            tb.add(ix.s(j, k), ix.y(k), ix.y(j), Rational(1));   // [s_jk,y_k] = y_j
            tb.add(ix.s(j, k), ix.y(j), ix.y(k), Rational(-1));  // [s_jk,y_j] = -y_k
        }
    const auto s_index = [&](unsigned a, unsigned b) { return ix.s(a, b); };
    for (unsigned j = 1; j <= n; ++j)
        for (unsigned k = j + 1; k <= n; ++k)
            for (unsigned l = 1; l <= n; ++l)
                for (unsigned m = l + 1; m <= n; ++m) {
                    if (std::make_pair(j, k) >= std::make_pair(l, m)) continue;
                    add_so_bracket(tb, s_index, ix.s(j, k), ix.s(l, m), j, k, l, m);
                }

    return LieAlgebra("schrodinger_" + std::to_string(n), std::move(labels), tb.take());
}

LieAlgebra build_catalog(const std::string& name, std::optional<unsigned> n) {
    std::string base = name;
    std::optional<unsigned> embedded;
    if (const auto us = name.rfind('_'); us != std::string::npos && us + 1 < name.size()) {
        const std::string suffix = name.substr(us + 1);
        bool digits = true;
        for (char c : suffix) digits = digits && (c >= '0' && c <= '9');
        if (digits) {
            embedded = static_cast<unsigned>(std::stoul(suffix));
            base = name.substr(0, us);
        }
    }
    if (embedded && n && *embedded != *n)
        throw std::invalid_argument("build_catalog: n given twice with different values");
    if (embedded) n = embedded;

    if (base == "sl2") {
        if (n) throw std::invalid_argument("build_catalog: sl2 does not take n");
        return build_sl2();
    }
    const auto need_n = [&]() {
        if (!n) throw std::invalid_argument("build_catalog: '" + base + "' needs n");
        if (*n == 0) throw std::invalid_argument("build_catalog: n must be >= 1");
        return *n;
    };
    if (base == "heisenberg") return build_heisenberg(need_n());
    if (base == "so") return build_so(need_n());
    if (base == "schrodinger") return build_schrodinger(need_n());
    throw std::invalid_argument("build_catalog: unknown algebra '" + name + "'");
}

Grading standard_grading(const LieAlgebra& alg) {
    std::optional<LieAlgebra> reference;
    try {
        reference = build_catalog(alg.name());
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("standard_grading: algebra does not match any catalog entry");
    }
    if (reference->labels() != alg.labels() || reference->table() != alg.table())
        throw std::invalid_argument(
            "standard_grading: algebra does not match any catalog entry");
    std::vector<Degree> degrees;
    degrees.reserve(alg.dim());
    for (const auto& label : alg.labels())
        degrees.push_back({label[0] == 'x' || label[0] == 'y' ? 1L : 0L});
    return Grading(GradingGroup{GradingGroup::Kind::Z2, 1}, std::move(degrees));
}

}  // namespace tpalg
