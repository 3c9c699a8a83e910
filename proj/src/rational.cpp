#include "tpalg/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace tpalg {

namespace {

bool is_integer_token(const std::string& s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    return true;
}

// mpz_class's string constructor rejects a leading '+'.
mpz_class parse_integer(const std::string& s) {
    return mpz_class(s[0] == '+' ? s.substr(1) : s);
}

}  // namespace

Rational::Rational(long n, long d) {
    if (d == 0) throw std::domain_error("Rational: zero denominator");
    q_ = mpq_class(n, d);
    q_.canonicalize();
}

Rational::Rational(const mpz_class& n, const mpz_class& d) {
    if (sgn(d) == 0) throw std::domain_error("Rational: zero denominator");
    q_ = mpq_class(n) / mpq_class(d);
}

Rational::Rational(const mpq_class& q) : q_(q) {
    q_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        if (!is_integer_token(text, true))
            throw std::invalid_argument("Rational::parse: malformed integer '" + text + "'");
        return Rational(parse_integer(text));
    }
    const std::string p = text.substr(0, slash);
    const std::string q = text.substr(slash + 1);
    if (!is_integer_token(p, true) || !is_integer_token(q, false))
        throw std::invalid_argument("Rational::parse: malformed rational '" + text + "'");
    mpz_class den(parse_integer(q));
    if (sgn(den) == 0)
        throw std::invalid_argument("Rational::parse: zero denominator in '" + text + "'");
    return Rational(parse_integer(p), den);
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("Rational::inverse: division by zero");
    return Rational(mpq_class(1) / q_);
}

Rational Rational::operator-() const {
    Rational r;
    r.q_ = -q_;
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    q_ /= o.q_;
    return *this;
}

std::string Rational::str() const {
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

}  // namespace tpalg
