#pragma once

#include <cstddef>
#include <map>
#include <utility>

#include "tpalg/rational.hpp"
#include "tpalg/vector.hpp"

namespace tpalg {

/// Commutative bilinear product given by a sparse symmetric tensor: the
/// expansion of e_i * e_j is stored for i <= j only, absent pairs are zero,
/// and zero expansions are never stored.
class Product {
public:
    using Key = std::pair<std::size_t, std::size_t>;
    using Tensor = std::map<Key, Vector>;

    Product() = default;
    explicit Product(std::size_t dim) : dim_(dim) {}
    /// Validates: keys i <= j < dim, expansions of length dim, none zero.
    Product(std::size_t dim, Tensor tensor);

    std::size_t dim() const { return dim_; }
    const Tensor& tensor() const { return tensor_; }
    bool is_zero() const { return tensor_.empty(); }

    /// Sets e_i * e_j (either index order); a zero expansion clears the slot.
    void set(std::size_t i, std::size_t j, Vector value);

    /// e_i * e_j for any index order.
    Vector multiply_basis(std::size_t i, std::size_t j) const;
    /// v * e_k (equivalently e_k * v).
    Vector multiply_with_basis(const Vector& v, std::size_t k) const;
    Vector multiply(const Vector& v, const Vector& w) const;

    Product& operator+=(const Product& o);
    Product& operator*=(const Rational& c);
    /// this += c * o
    Product& add_scaled(const Rational& c, const Product& o);

    friend bool operator==(const Product& a, const Product& b) {
        return a.dim_ == b.dim_ && a.tensor_ == b.tensor_;
    }
    friend bool operator!=(const Product& a, const Product& b) { return !(a == b); }

private:
    std::size_t dim_ = 0;
    Tensor tensor_;
};

}  // namespace tpalg
