#pragma once

#include <cstddef>
#include <vector>

#include "tpalg/lie_algebra.hpp"
#include "tpalg/rational.hpp"
#include "tpalg/vector.hpp"

namespace tpalg {

/// Square matrix over the rationals, stored column-major: column i is the
/// image of basis vector e_i. Flattening matches the unknown ordering of the
/// derivation solver: entry (k, i) sits at flat index i*dim + k.
class LinearMap {
public:
    explicit LinearMap(std::size_t dim) : dim_(dim), m_(dim * dim) {}

    static LinearMap identity(std::size_t dim);
    /// Inverse of to_flat. Throws std::invalid_argument unless dim(flat) is a
    /// perfect square.
    static LinearMap from_flat(const Vector& flat);

    std::size_t dim() const { return dim_; }

    const Rational& at(std::size_t row, std::size_t col) const { return m_[col * dim_ + row]; }
    Rational& at(std::size_t row, std::size_t col) { return m_[col * dim_ + row]; }

    /// Image of basis vector e_i.
    Vector column(std::size_t i) const;
    Vector apply(const Vector& v) const;
    Vector to_flat() const { return Vector(std::vector<Rational>(m_)); }

    bool is_zero() const;
    LinearMap& operator+=(const LinearMap& o);
    LinearMap& operator*=(const Rational& c);
    /// this += c * o
    LinearMap& add_scaled(const Rational& c, const LinearMap& o);

    friend bool operator==(const LinearMap& a, const LinearMap& b) {
        return a.dim_ == b.dim_ && a.m_ == b.m_;
    }
    friend bool operator!=(const LinearMap& a, const LinearMap& b) { return !(a == b); }

private:
    std::size_t dim_;
    std::vector<Rational> m_;
};

/// ad_x: v -> [x, v].
LinearMap adjoint_map(const LieAlgebra& alg, const Vector& x);

}  // namespace tpalg
