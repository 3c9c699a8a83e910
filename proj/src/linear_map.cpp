#include "tpalg/linear_map.hpp"

#include <stdexcept>

namespace tpalg {

LinearMap LinearMap::identity(std::size_t dim) {
    LinearMap out(dim);
    for (std::size_t i = 0; i < dim; ++i) out.at(i, i) = Rational(1);
    return out;
}

LinearMap LinearMap::from_flat(const Vector& flat) {
    std::size_t dim = 0;
    while (dim * dim < flat.dim()) ++dim;
    if (dim * dim != flat.dim())
        throw std::invalid_argument("LinearMap::from_flat: length is not a perfect square");
    LinearMap out(dim);
    for (std::size_t i = 0; i < flat.dim(); ++i) out.m_[i] = flat[i];
    return out;
}

Vector LinearMap::column(std::size_t i) const {
    if (i >= dim_) throw std::invalid_argument("LinearMap::column: index out of range");
    Vector out(dim_);
    for (std::size_t k = 0; k < dim_; ++k) out[k] = m_[i * dim_ + k];
    return out;
}

Vector LinearMap::apply(const Vector& v) const {
    if (v.dim() != dim_) throw std::invalid_argument("LinearMap::apply: dimension mismatch");
    Vector out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (v[i].is_zero()) continue;
        for (std::size_t k = 0; k < dim_; ++k)
            if (!m_[i * dim_ + k].is_zero()) out[k] += v[i] * m_[i * dim_ + k];
    }
    return out;
}

bool LinearMap::is_zero() const {
    for (const auto& c : m_)
        if (!c.is_zero()) return false;
    return true;
}

LinearMap& LinearMap::operator+=(const LinearMap& o) {
    if (o.dim_ != dim_) throw std::invalid_argument("LinearMap: dimension mismatch");
    for (std::size_t i = 0; i < m_.size(); ++i) m_[i] += o.m_[i];
    return *this;
}

LinearMap& LinearMap::operator*=(const Rational& c) {
    for (auto& entry : m_) entry *= c;
    return *this;
}

LinearMap& LinearMap::add_scaled(const Rational& c, const LinearMap& o) {
    if (o.dim_ != dim_) throw std::invalid_argument("LinearMap: dimension mismatch");
    for (std::size_t i = 0; i < m_.size(); ++i) m_[i] += c * o.m_[i];
    return *this;
}

LinearMap adjoint_map(const LieAlgebra& alg, const Vector& x) {
    if (x.dim() != alg.dim()) throw std::invalid_argument("adjoint_map: dimension mismatch");
    LinearMap out(alg.dim());
    for (std::size_t j = 0; j < alg.dim(); ++j) {
        const Vector col = bracket_with_basis(alg, x, j);
        for (std::size_t k = 0; k < alg.dim(); ++k) out.at(k, j) = col[k];
    }
    return out;
}

}  // namespace tpalg
