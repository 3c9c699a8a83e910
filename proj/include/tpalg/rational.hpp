#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace tpalg {

/// Exact rational scalar backed by arbitrary-precision integers.
///
/// Values are always kept in lowest terms with a positive denominator, and
/// every operation is exact. All solution spaces computed by this library
/// live over the rationals: the constraint systems have integer coefficients,
/// so a rational basis of a nullspace is also a basis of the complex solution
/// space.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}  // NOLINT: implicit by design, mirrors integer literals
    Rational(long n, long d);
    Rational(const mpz_class& n, const mpz_class& d);
    explicit Rational(const mpz_class& n) : q_(n) {}
    explicit Rational(const mpq_class& q);

    /// Parses "p" or "p/q" with optional leading sign on p; q must be a
    /// positive integer. Throws std::invalid_argument on malformed input.
    static Rational parse(const std::string& text);

    const mpz_class& num() const { return q_.get_num(); }
    const mpz_class& den() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    int sign() const { return sgn(q_); }

    /// Multiplicative inverse; throws std::domain_error on zero.
    Rational inverse() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    /// "p/q", or just "p" when the denominator is 1.
    std::string str() const;

private:
    mpq_class q_;  // invariant: canonical (lowest terms, positive denominator)
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace tpalg
