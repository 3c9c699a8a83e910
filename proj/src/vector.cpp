#include "tpalg/vector.hpp"

#include <stdexcept>

namespace tpalg {

namespace {

void require_same_dim(const Vector& a, const Vector& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("Vector: dimension mismatch");
}

}  // namespace

Vector& Vector::operator+=(const Vector& o) {
    require_same_dim(*this, o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    return *this;
}

Vector& Vector::operator-=(const Vector& o) {
    require_same_dim(*this, o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
}

Vector& Vector::operator*=(const Rational& c) {
    for (auto& x : coords_) x *= c;
    return *this;
}

Vector& Vector::add_scaled(const Rational& c, const Vector& o) {
    require_same_dim(*this, o);
    if (c.is_zero()) return *this;
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += c * o.coords_[i];
    return *this;
}

Vector Vector::operator-() const {
    Vector r(*this);
    for (auto& x : r.coords_) x = -x;
    return r;
}

Vector normalize_direction(const Vector& v) {
    mpz_class lcm_den = 1;
    bool any = false;
    for (std::size_t i = 0; i < v.dim(); ++i) {
        if (v[i].is_zero()) continue;
        any = true;
        mpz_class l;
        mpz_lcm(l.get_mpz_t(), lcm_den.get_mpz_t(), v[i].den().get_mpz_t());
        lcm_den = l;
    }
    if (!any) return v;

    std::vector<mpz_class> ints(v.dim());
    mpz_class content = 0;
    for (std::size_t i = 0; i < v.dim(); ++i) {
        ints[i] = v[i].num() * (lcm_den / v[i].den());
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), content.get_mpz_t(), ints[i].get_mpz_t());
        content = g;
    }
    int lead_sign = 0;
    for (std::size_t i = 0; i < v.dim() && lead_sign == 0; ++i) lead_sign = sgn(ints[i]);
    if (lead_sign < 0) content = -content;

    Vector out(v.dim());
    for (std::size_t i = 0; i < v.dim(); ++i)
        out[i] = Rational(mpz_class(ints[i] / content));
    return out;
}

Vector unit_vector(std::size_t dim, std::size_t i) {
    if (i >= dim) throw std::invalid_argument("unit_vector: index out of range");
    Vector out(dim);
    out[i] = Rational(1);
    return out;
}

}  // namespace tpalg
