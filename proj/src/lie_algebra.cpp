#include "tpalg/lie_algebra.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace tpalg {

namespace {

// names and labels are emitted as single tokens by the serializer
bool is_token(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c == '#' || c == ' ' || c == '\t' || c == '\r' || c == '\n') return false;
    return true;
}

}  // namespace

LieAlgebra::LieAlgebra(std::string name, std::vector<std::string> basis_labels, Table brackets)
    : name_(std::move(name)), labels_(std::move(basis_labels)) {
    if (!is_token(name_))
        throw std::invalid_argument("LieAlgebra: name must be a nonempty token");
    std::set<std::string> seen;
    for (const auto& l : labels_) {
        if (!is_token(l)) throw std::invalid_argument("LieAlgebra: bad basis label");
        if (!seen.insert(l).second)
            throw std::invalid_argument("LieAlgebra: duplicate basis label '" + l + "'");
    }
    const std::size_t d = labels_.size();
    for (auto& [key, expansion] : brackets) {
        if (key.first >= key.second)
            throw std::invalid_argument("LieAlgebra: bracket key must have i < j");
        if (key.second >= d)
            throw std::invalid_argument("LieAlgebra: bracket key out of range");
        if (expansion.dim() != d)
            throw std::invalid_argument("LieAlgebra: bracket expansion has wrong dimension");
        if (!expansion.is_zero()) table_.emplace(key, std::move(expansion));
    }
}

std::optional<std::size_t> LieAlgebra::index_of(const std::string& label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return i;
    return std::nullopt;
}

const Vector* LieAlgebra::stored_entry(std::size_t i, std::size_t j) const {
    const auto it = table_.find({i, j});
    return it == table_.end() ? nullptr : &it->second;
}

Vector LieAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
    Vector out(dim());
    if (i == j) return out;
    const bool flip = i > j;
    const Vector* stored = flip ? stored_entry(j, i) : stored_entry(i, j);
    if (stored == nullptr) return out;
    out = *stored;
    if (flip) out = -out;
    return out;
}

Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const {
    if (x.dim() != dim() || y.dim() != dim())
        throw std::invalid_argument("bracket: vector dimension does not match the algebra");
    Vector out(dim());
    for (std::size_t i = 0; i < dim(); ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim(); ++j) {
            if (i == j || y[j].is_zero()) continue;
            const Vector* stored = i < j ? stored_entry(i, j) : stored_entry(j, i);
            if (stored == nullptr) continue;
            Rational c = x[i] * y[j];
            if (i > j) c = -c;
            for (std::size_t k = 0; k < dim(); ++k)
                if (!(*stored)[k].is_zero()) out[k] += c * (*stored)[k];
        }
    }
    return out;
}

namespace {

// acc += sign * [v, e_k], touching only the support of the stored expansions.
void add_bracket_with_basis(const LieAlgebra& alg, Vector& acc, const Vector& v, std::size_t k,
                            int sign) {
    for (std::size_t s = 0; s < alg.dim(); ++s) {
        if (s == k || v[s].is_zero()) continue;
        const Vector* stored = s < k ? alg.stored_entry(s, k) : alg.stored_entry(k, s);
        if (stored == nullptr) continue;
        Rational c = v[s];
        if (s > k) c = -c;
        if (sign < 0) c = -c;
        for (std::size_t t = 0; t < alg.dim(); ++t)
            if (!(*stored)[t].is_zero()) acc[t] += c * (*stored)[t];
    }
}

}  // namespace

Vector bracket_with_basis(const LieAlgebra& alg, const Vector& v, std::size_t k) {
    if (v.dim() != alg.dim())
        throw std::invalid_argument("bracket_with_basis: vector dimension mismatch");
    if (k >= alg.dim()) throw std::invalid_argument("bracket_with_basis: index out of range");
    Vector out(alg.dim());
    add_bracket_with_basis(alg, out, v, k, +1);
    return out;
}

JacobiReport check_jacobi(const LieAlgebra& alg) {
    JacobiReport report;
    const std::size_t d = alg.dim();
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = i + 1; j < d; ++j) {
            for (std::size_t k = j + 1; k < d; ++k) {
                Vector acc(d);
                add_bracket_with_basis(alg, acc, alg.bracket_basis(i, j), k, +1);
                add_bracket_with_basis(alg, acc, alg.bracket_basis(j, k), i, +1);
                add_bracket_with_basis(alg, acc, alg.bracket_basis(k, i), j, +1);
                if (!acc.is_zero()) {
                    report.ok = false;
                    report.violations.push_back({i, j, k, std::move(acc)});
                }
            }
        }
    }
    return report;
}

AntisymmetryReport check_antisymmetry(const LieAlgebra& alg) {
    AntisymmetryReport report;
    const std::size_t d = alg.dim();
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = i; j < d; ++j) {
            Vector acc = alg.bracket_basis(i, j) + alg.bracket_basis(j, i);
            if (!acc.is_zero()) {
                report.ok = false;
                report.violations.push_back({i, j, std::move(acc)});
            }
        }
    }
    return report;
}

std::string GradingGroup::str() const {
    switch (kind) {
        case Kind::Z2:
            return "Z2";
        case Kind::ZK:
            return "Z^" + std::to_string(rank);
        case Kind::Z2K:
            return "Z2^" + std::to_string(rank);
    }
    throw std::logic_error("GradingGroup::str: bad kind");
}

GradingGroup GradingGroup::parse(const std::string& token) {
    const auto parse_rank = [&](const std::string& s) {
        if (s.empty()) throw std::invalid_argument("GradingGroup: missing rank in '" + token + "'");
        for (char c : s)
            if (c < '0' || c > '9')
                throw std::invalid_argument("GradingGroup: bad rank in '" + token + "'");
        const unsigned long r = std::stoul(s);
        if (r == 0) throw std::invalid_argument("GradingGroup: rank must be positive");
        return static_cast<std::size_t>(r);
    };
    if (token == "Z2") return {Kind::Z2, 1};
    if (token.rfind("Z2^", 0) == 0) return {Kind::Z2K, parse_rank(token.substr(3))};
    if (token.rfind("Z^", 0) == 0) return {Kind::ZK, parse_rank(token.substr(2))};
    throw std::invalid_argument("GradingGroup: unknown group '" + token + "'");
}

Grading::Grading(GradingGroup group, std::vector<Degree> degrees)
    : group_(group), degrees_(std::move(degrees)) {
    for (auto& d : degrees_) {
        if (d.size() != group_.rank)
            throw std::invalid_argument("Grading: degree rank does not match the group");
        d = normalize(std::move(d));
    }
}

Degree Grading::normalize(Degree d) const {
    if (group_.kind != GradingGroup::Kind::ZK)
        for (auto& c : d) c = ((c % 2) + 2) % 2;
    return d;
}

Degree Grading::add(const Degree& a, const Degree& b) const {
    Degree out(group_.rank);
    for (std::size_t i = 0; i < group_.rank; ++i) out[i] = a[i] + b[i];
    return normalize(std::move(out));
}

Degree Grading::sub(const Degree& a, const Degree& b) const {
    Degree out(group_.rank);
    for (std::size_t i = 0; i < group_.rank; ++i) out[i] = a[i] - b[i];
    return normalize(std::move(out));
}

std::string Grading::degree_str(const Degree& d) {
    std::ostringstream os;
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (i > 0) os << ',';
        os << d[i];
    }
    return os.str();
}

Degree Grading::parse_degree(const std::string& token, const GradingGroup& group) {
    Degree out;
    std::string part;
    std::istringstream is(token);
    while (std::getline(is, part, ',')) {
        std::size_t pos = 0;
        long value = 0;
        try {
            value = std::stol(part, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("Grading: bad degree component '" + part + "'");
        }
        if (pos != part.size())
            throw std::invalid_argument("Grading: bad degree component '" + part + "'");
        out.push_back(value);
    }
    if (out.size() != group.rank)
        throw std::invalid_argument("Grading: degree '" + token + "' does not match group rank");
    return out;
}

GradingReport check_grading(const LieAlgebra& alg, const Grading& g) {
    if (g.dim() != alg.dim())
        throw std::invalid_argument("check_grading: grading dimension does not match the algebra");
    GradingReport report;
    for (const auto& [key, expansion] : alg.table()) {
        const Degree want = g.add(g.degree(key.first), g.degree(key.second));
        for (std::size_t k = 0; k < alg.dim(); ++k) {
            if (expansion[k].is_zero()) continue;
            if (g.degree(k) != want) {
                report.ok = false;
                report.violations.push_back({key.first, key.second, k});
            }
        }
    }
    return report;
}

}  // namespace tpalg
