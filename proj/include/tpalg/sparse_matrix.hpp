#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "tpalg/rational.hpp"
#include "tpalg/vector.hpp"

namespace tpalg {

/// Sparse rational matrix. Entries are stored row-major, strictly sorted by
/// (row, col), with no explicit zeros and no duplicate positions.
class SparseMatrix {
public:
    struct Entry {
        std::size_t row;
        std::size_t col;
        Rational value;

        friend bool operator==(const Entry& a, const Entry& b) {
            return a.row == b.row && a.col == b.col && a.value == b.value;
        }
    };

    SparseMatrix() : rows_(0), cols_(0) {}
    SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

    /// Takes entries already sorted row-major with unique positions and no
    /// zero values; throws std::invalid_argument if any invariant fails.
    SparseMatrix(std::size_t rows, std::size_t cols, std::vector<Entry> entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const std::vector<Entry>& entries() const { return entries_; }
    std::size_t nonzeros() const { return entries_.size(); }

    /// Matrix-vector product (dense result).
    Vector apply(const Vector& v) const;

    friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }
    friend bool operator!=(const SparseMatrix& a, const SparseMatrix& b) { return !(a == b); }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Entry> entries_;
};

/// Accumulating builder: repeated add() at the same position sums the values;
/// zero sums are dropped from the built matrix.
class MatrixBuilder {
public:
    MatrixBuilder(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

    void add(std::size_t row, std::size_t col, const Rational& value);
    SparseMatrix build() const;

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::map<std::pair<std::size_t, std::size_t>, Rational> acc_;
};

}  // namespace tpalg
