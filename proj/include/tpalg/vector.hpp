#pragma once

#include <cstddef>
#include <vector>

#include "tpalg/rational.hpp"

namespace tpalg {

/// Dense coordinate vector over the rationals.
class Vector {
public:
    Vector() = default;
    explicit Vector(std::size_t dim) : coords_(dim) {}
    explicit Vector(std::vector<Rational> coords) : coords_(std::move(coords)) {}

    std::size_t dim() const { return coords_.size(); }
    const Rational& operator[](std::size_t i) const { return coords_[i]; }
    Rational& operator[](std::size_t i) { return coords_[i]; }

    const std::vector<Rational>& coords() const { return coords_; }

    bool is_zero() const {
        for (const auto& c : coords_)
            if (!c.is_zero()) return false;
        return true;
    }

    Vector& operator+=(const Vector& o);
    Vector& operator-=(const Vector& o);
    Vector& operator*=(const Rational& c);
    /// this += c * o
    Vector& add_scaled(const Rational& c, const Vector& o);

    friend Vector operator+(Vector a, const Vector& b) { return a += b; }
    friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
    friend Vector operator*(const Rational& c, Vector v) { return v *= c; }
    Vector operator-() const;

    friend bool operator==(const Vector& a, const Vector& b) { return a.coords_ == b.coords_; }
    friend bool operator!=(const Vector& a, const Vector& b) { return !(a == b); }

private:
    std::vector<Rational> coords_;
};

/// Scales an integer-valued direction to content 1 with the first nonzero
/// coordinate positive: clears denominators, divides by the gcd of the
/// coordinates, flips the global sign if needed. Zero vectors pass through.
Vector normalize_direction(const Vector& v);

/// Standard basis vector e_i. Throws std::invalid_argument when i >= dim.
Vector unit_vector(std::size_t dim, std::size_t i);

}  // namespace tpalg
