#include "tpalg/product.hpp"

#include <stdexcept>
#include <string>

namespace tpalg {

Product::Product(std::size_t dim, Tensor tensor) : dim_(dim), tensor_(std::move(tensor)) {
    for (const auto& [key, value] : tensor_) {
        if (key.first > key.second || key.second >= dim_)
            throw std::invalid_argument("Product: pair (" + std::to_string(key.first) + "," +
                                        std::to_string(key.second) + ") out of order or range");
        if (value.dim() != dim_)
            throw std::invalid_argument("Product: expansion length mismatch");
        if (value.is_zero()) throw std::invalid_argument("Product: zero expansion stored");
    }
}

void Product::set(std::size_t i, std::size_t j, Vector value) {
    if (i > j) std::swap(i, j);
    if (j >= dim_) throw std::invalid_argument("Product::set: index out of range");
    if (value.dim() != dim_) throw std::invalid_argument("Product::set: expansion length mismatch");
    if (value.is_zero())
        tensor_.erase({i, j});
    else
        tensor_.insert_or_assign({i, j}, std::move(value));
}

Vector Product::multiply_basis(std::size_t i, std::size_t j) const {
    if (i > j) std::swap(i, j);
    if (j >= dim_) throw std::invalid_argument("Product::multiply_basis: index out of range");
    const auto it = tensor_.find({i, j});
    return it == tensor_.end() ? Vector(dim_) : it->second;
}

Vector Product::multiply_with_basis(const Vector& v, std::size_t k) const {
    if (v.dim() != dim_)
        throw std::invalid_argument("Product::multiply_with_basis: dimension mismatch");
    if (k >= dim_) throw std::invalid_argument("Product::multiply_with_basis: index out of range");
    Vector out(dim_);
    for (const auto& [key, value] : tensor_) {
        if (key.first == k && !v[key.second].is_zero()) out.add_scaled(v[key.second], value);
        if (key.second == k && key.first != key.second && !v[key.first].is_zero())
            out.add_scaled(v[key.first], value);
    }
    return out;
}

Vector Product::multiply(const Vector& v, const Vector& w) const {
    if (v.dim() != dim_ || w.dim() != dim_)
        throw std::invalid_argument("Product::multiply: dimension mismatch");
    Vector out(dim_);
    for (const auto& [key, value] : tensor_) {
        Rational c = v[key.first] * w[key.second];
        if (key.first != key.second) c += v[key.second] * w[key.first];
        if (!c.is_zero()) out.add_scaled(c, value);
    }
    return out;
}

Product& Product::operator+=(const Product& o) { return add_scaled(1, o); }

Product& Product::operator*=(const Rational& c) {
    if (c.is_zero()) {
        tensor_.clear();
        return *this;
    }
    for (auto& [key, value] : tensor_) value *= c;
    return *this;
}

Product& Product::add_scaled(const Rational& c, const Product& o) {
    if (dim_ != o.dim_) throw std::invalid_argument("Product::add_scaled: dimension mismatch");
    if (c.is_zero()) return *this;
    for (const auto& [key, value] : o.tensor_) {
        const auto it = tensor_.find(key);
        if (it == tensor_.end()) {
            Vector scaled(dim_);
            scaled.add_scaled(c, value);
            tensor_.emplace(key, std::move(scaled));
        } else {
            it->second.add_scaled(c, value);
            if (it->second.is_zero()) tensor_.erase(it);
        }
    }
    return *this;
}

}  // namespace tpalg
