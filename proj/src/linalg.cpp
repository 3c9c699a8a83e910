#include "tpalg/linalg.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace tpalg {
namespace {

using IEntry = std::pair<std::size_t, mpz_class>;

// Integer row of the working system: entries sorted by column, all nonzero.
// `orig` is the input row index and breaks ties when picking pivots.
struct IRow {
    std::vector<IEntry> e;
    std::size_t orig = 0;
};

void divide_content(IRow& r) {
    mpz_class g = 0;
    for (const auto& [col, val] : r.e) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), val.get_mpz_t());
        if (g == 1) return;
    }
    if (g <= 1) return;  // empty row
    for (auto& [col, val] : r.e) mpz_divexact(val.get_mpz_t(), val.get_mpz_t(), g.get_mpz_t());
}

// s1*r1 + s2*r2, merging the sorted entry lists and dropping exact zeros.
IRow combine(const mpz_class& s1, const IRow& r1, const mpz_class& s2, const IRow& r2) {
    IRow out;
    out.orig = r1.orig;
    out.e.reserve(r1.e.size() + r2.e.size());
    std::size_t i = 0;
    std::size_t j = 0;
    mpz_class t;
    while (i < r1.e.size() && j < r2.e.size()) {
        if (r1.e[i].first < r2.e[j].first) {
            out.e.emplace_back(r1.e[i].first, s1 * r1.e[i].second);
            ++i;
        } else if (r2.e[j].first < r1.e[i].first) {
            out.e.emplace_back(r2.e[j].first, s2 * r2.e[j].second);
            ++j;
        } else {
            t = s1 * r1.e[i].second + s2 * r2.e[j].second;
            if (t != 0) out.e.emplace_back(r1.e[i].first, t);
            ++i;
            ++j;
        }
    }
    for (; i < r1.e.size(); ++i) out.e.emplace_back(r1.e[i].first, s1 * r1.e[i].second);
    for (; j < r2.e.size(); ++j) out.e.emplace_back(r2.e[j].first, s2 * r2.e[j].second);
    return out;
}

// row := (a/g)*row - (b/g)*pivot with a, b the leading coefficients sharing a
// column and g their gcd; the leading entries cancel exactly. The result is
// divided by its content to keep coefficients small.
IRow eliminate_lead(const IRow& row, const IRow& pivot) {
    const mpz_class& a = pivot.e.front().second;
    const mpz_class& b = row.e.front().second;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    IRow next = combine(a / g, row, -(b / g), pivot);
    divide_content(next);
    return next;
}

// Scales each row to integer entries of content 1; drops zero rows. When b is
// given, its coordinate joins row r at column m.cols() (the augmented column).
std::vector<IRow> to_integer_rows(const SparseMatrix& m, const Vector* b) {
    std::vector<std::vector<std::pair<std::size_t, Rational>>> rat(m.rows());
    for (const auto& e : m.entries()) rat[e.row].emplace_back(e.col, e.value);
    if (b != nullptr) {
        for (std::size_t r = 0; r < m.rows(); ++r)
            if (!(*b)[r].is_zero()) rat[r].emplace_back(m.cols(), (*b)[r]);
    }
    std::vector<IRow> rows;
    rows.reserve(m.rows());
    mpz_class lcm;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (rat[r].empty()) continue;
        lcm = 1;
        for (const auto& [col, val] : rat[r])
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), val.den().get_mpz_t());
        IRow row;
        row.orig = r;
        row.e.reserve(rat[r].size());
        for (const auto& [col, val] : rat[r])
            row.e.emplace_back(col, val.num() * mpz_class(lcm / val.den()));
        divide_content(row);
        rows.push_back(std::move(row));
    }
    return rows;
}

// Forward pass. Rows are bucketed by leading column and columns are consumed
// left to right; the pivot in each bucket is the row whose leading coefficient
// has the fewest bits (ties: lowest input row index). Every other row in the
// bucket is combined against the pivot and re-bucketed at its new, strictly
// larger leading column. Returns the pivot rows, sorted by leading column.
std::vector<IRow> forward_eliminate(std::vector<IRow> rows) {
    std::map<std::size_t, std::vector<IRow>> buckets;
    for (auto& r : rows) buckets[r.e.front().first].push_back(std::move(r));
    std::vector<IRow> pivots;
    while (!buckets.empty()) {
        auto it = buckets.begin();
        std::vector<IRow> bucket = std::move(it->second);
        buckets.erase(it);
        std::size_t best = 0;
        std::size_t best_bits = mpz_sizeinbase(bucket[0].e.front().second.get_mpz_t(), 2);
        for (std::size_t k = 1; k < bucket.size(); ++k) {
            std::size_t bits = mpz_sizeinbase(bucket[k].e.front().second.get_mpz_t(), 2);
            if (bits < best_bits || (bits == best_bits && bucket[k].orig < bucket[best].orig)) {
                best = k;
                best_bits = bits;
            }
        }
        for (std::size_t k = 0; k < bucket.size(); ++k) {
            if (k == best) continue;
            IRow next = eliminate_lead(bucket[k], bucket[best]);
            next.orig = bucket[k].orig;
            if (!next.e.empty()) buckets[next.e.front().first].push_back(std::move(next));
        }
        pivots.push_back(std::move(bucket[best]));
    }
    return pivots;
}

// Clears every pivot column from the rows above it, still fraction-free.
void back_substitute(std::vector<IRow>& pivots) {
    for (std::size_t k = pivots.size(); k-- > 0;) {
        const std::size_t col = pivots[k].e.front().first;
        for (std::size_t j = 0; j < k; ++j) {
            auto& ej = pivots[j].e;
            auto it = std::lower_bound(
                ej.begin(), ej.end(), col,
                [](const IEntry& entry, std::size_t c) { return entry.first < c; });
            if (it == ej.end() || it->first != col) continue;
            const mpz_class& a = pivots[k].e.front().second;
            const mpz_class b = it->second;
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
            IRow next = combine(a / g, pivots[j], -(b / g), pivots[k]);
            divide_content(next);
            pivots[j] = std::move(next);
        }
    }
}

std::vector<IRow> echelonize(const SparseMatrix& m, const Vector* b) {
    std::vector<IRow> pivots = forward_eliminate(to_integer_rows(m, b));
    back_substitute(pivots);
    return pivots;
}

// Free-variable basis read off fully reduced pivot rows. Columns at or past
// ncols (the augmented column, if any) are ignored. One vector per free
// column, in increasing column order, normalized to a canonical direction.
std::vector<Vector> extract_nullspace(const std::vector<IRow>& pivots, std::size_t ncols) {
    std::vector<char> is_pivot(ncols, 0);
    std::vector<std::size_t> pivot_cols;
    pivot_cols.reserve(pivots.size());
    for (const auto& p : pivots) {
        pivot_cols.push_back(p.e.front().first);
        is_pivot[p.e.front().first] = 1;
    }
    std::vector<std::size_t> free_index(ncols, 0);
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < ncols; ++c) {
        if (!is_pivot[c]) {
            free_index[c] = free_cols.size();
            free_cols.push_back(c);
        }
    }
    std::vector<Vector> basis(free_cols.size(), Vector(ncols));
    for (std::size_t i = 0; i < free_cols.size(); ++i) basis[i][free_cols[i]] = Rational(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        const mpz_class& lead = pivots[i].e.front().second;
        for (std::size_t k = 1; k < pivots[i].e.size(); ++k) {
            const auto& [col, val] = pivots[i].e[k];
            if (col < ncols && !is_pivot[col])
                basis[free_index[col]][pivot_cols[i]] = Rational(-val, lead);
        }
    }
    for (auto& v : basis) v = normalize_direction(v);
    return basis;
}

}  // namespace

RrefResult rref(const SparseMatrix& m) {
    std::vector<IRow> pivots = echelonize(m, nullptr);
    std::vector<std::size_t> pivot_cols;
    pivot_cols.reserve(pivots.size());
    std::vector<SparseMatrix::Entry> entries;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        pivot_cols.push_back(pivots[i].e.front().first);
        const mpz_class& lead = pivots[i].e.front().second;
        for (const auto& [col, val] : pivots[i].e)
            entries.push_back({i, col, Rational(val, lead)});
    }
    std::size_t rank = pivots.size();
    return RrefResult{SparseMatrix(m.rows(), m.cols(), std::move(entries)), rank,
                      std::move(pivot_cols)};
}

std::vector<Vector> nullspace_basis(const SparseMatrix& m) {
    return extract_nullspace(echelonize(m, nullptr), m.cols());
}

std::optional<AffineSolution> solve_affine(const SparseMatrix& a, const Vector& b) {
    if (a.rows() != b.dim())
        throw std::invalid_argument("solve_affine: right-hand side has " +
                                    std::to_string(b.dim()) + " coordinates, matrix has " +
                                    std::to_string(a.rows()) + " rows");
    const std::size_t aug = a.cols();
    std::vector<IRow> pivots = echelonize(a, &b);
    for (const auto& p : pivots)
        if (p.e.front().first == aug) return std::nullopt;
    Vector particular(aug);
    for (const auto& p : pivots) {
        const auto& last = p.e.back();
        if (last.first == aug)
            particular[p.e.front().first] = Rational(last.second, p.e.front().second);
    }
    return AffineSolution{std::move(particular), extract_nullspace(pivots, aug)};
}

}  // namespace tpalg
