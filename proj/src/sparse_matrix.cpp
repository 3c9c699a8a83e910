#include "tpalg/sparse_matrix.hpp"

#include <stdexcept>

namespace tpalg {

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols, std::vector<Entry> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        const Entry& e = entries_[i];
        if (e.row >= rows_ || e.col >= cols_)
            throw std::invalid_argument("SparseMatrix: entry out of bounds");
        if (e.value.is_zero())
            throw std::invalid_argument("SparseMatrix: explicit zero entry");
        if (i > 0) {
            const Entry& p = entries_[i - 1];
            if (p.row > e.row || (p.row == e.row && p.col >= e.col))
                throw std::invalid_argument("SparseMatrix: entries not strictly sorted");
        }
    }
}

Vector SparseMatrix::apply(const Vector& v) const {
    if (v.dim() != cols_) throw std::invalid_argument("SparseMatrix::apply: dimension mismatch");
    Vector out(rows_);
    for (const Entry& e : entries_) {
        if (v[e.col].is_zero()) continue;
        out[e.row] += e.value * v[e.col];
    }
    return out;
}

void MatrixBuilder::add(std::size_t row, std::size_t col, const Rational& value) {
    if (row >= rows_ || col >= cols_)
        throw std::invalid_argument("MatrixBuilder::add: position out of bounds");
    if (value.is_zero()) return;
    auto [it, inserted] = acc_.try_emplace({row, col}, value);
    if (!inserted) {
        it->second += value;
        if (it->second.is_zero()) acc_.erase(it);
    }
}

SparseMatrix MatrixBuilder::build() const {
    std::vector<SparseMatrix::Entry> entries;
    entries.reserve(acc_.size());
    for (const auto& [pos, value] : acc_)
        entries.push_back({pos.first, pos.second, value});
    return SparseMatrix(rows_, cols_, std::move(entries));
}

}  // namespace tpalg
