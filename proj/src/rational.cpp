#include "cbmw/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

#include "cbmw/errors.hpp"

namespace cbmw {

Rational::Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw MathError("division by zero");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

static bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

Rational Rational::parse(std::string_view s) {
    bool neg = false;
    if (!s.empty() && s.front() == '-') {
        neg = true;
        s.remove_prefix(1);
    }
    std::string_view num = s, den = "1";
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        num = s.substr(0, slash);
        den = s.substr(slash + 1);
    }
    if (!all_digits(num) || !all_digits(den))
        throw std::invalid_argument("malformed rational: '" + std::string(s) + "'");
    mpz_class n(std::string(num), 10), d(std::string(den), 10);
    if (d == 0) throw std::invalid_argument("rational with zero denominator");
    if (neg) n = -n;
    return Rational(n, d);
}

Rational Rational::operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
}

Rational Rational::operator+(const Rational& o) const {
    Rational r;
    r.v_ = v_ + o.v_;
    return r;
}

Rational Rational::operator-(const Rational& o) const {
    Rational r;
    r.v_ = v_ - o.v_;
    return r;
}

Rational Rational::operator*(const Rational& o) const {
    Rational r;
    r.v_ = v_ * o.v_;
    return r;
}

Rational Rational::operator/(const Rational& o) const {
    if (o.is_zero()) throw MathError("division by zero");
    Rational r;
    r.v_ = v_ / o.v_;
    return r;
}

Rational Rational::inverse() const {
    if (is_zero()) throw MathError("division by zero");
    Rational r;
    r.v_ = 1 / v_;
    return r;
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    Rational base = e > 0 ? *this : inverse();
    unsigned long k = e > 0 ? static_cast<unsigned long>(e) : static_cast<unsigned long>(-e);
    Rational acc(1);
    while (k) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

std::string Rational::str() const {
    if (is_integer()) return num().get_str();
    return num().get_str() + "/" + den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace cbmw
