#include "cbmw/ratfun.hpp"

#include <ostream>

#include "cbmw/errors.hpp"
#include "cbmw/polygcd.hpp"

namespace cbmw {

RationalFunction::RationalFunction(const LaurentPolynomial& num, const LaurentPolynomial& den) {
    if (den.is_zero()) throw MathError("division by zero");
    if (num.is_zero()) {
        num_ = LaurentPolynomial();
        den_ = LaurentPolynomial(1);
        return;
    }
    // clear Laurent parts; the net monomial is a unit and belongs upstairs
    LaurentMonomial mn = num.monomial_gcd(), md = den.monomial_gcd();
    LaurentPolynomial n = num.shifted(mn.inverse());
    LaurentPolynomial d = den.shifted(md.inverse());
    LaurentMonomial carry = mn * md.inverse();

    LaurentPolynomial g = poly_gcd(n, d);
    if (!g.is_one()) {
        n = divide_exact(n, g);
        d = divide_exact(d, g);
    }
    if (d.lead().second < 0) {
        n = -n;
        d = -d;
    }
    num_ = n.shifted(carry);
    den_ = d;
}

RationalFunction RationalFunction::operator-() const {
    return RationalFunction(-num_, den_, NoNormalize{});
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (den_ == o.den_) return RationalFunction(num_ + o.num_, den_);
    if (den_.is_one()) return RationalFunction(num_ * o.den_ + o.num_, o.den_);
    if (o.den_.is_one()) return RationalFunction(num_ + o.num_ * den_, den_);
    // work over the lcm so the final reduction stays small
    LaurentPolynomial g = poly_gcd(den_, o.den_);
    if (g.is_one())
        return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    LaurentPolynomial d1 = divide_exact(den_, g), d2 = divide_exact(o.den_, g);
    return RationalFunction(num_ * d2 + o.num_ * d1, den_ * d2);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
    return *this + (-o);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    if (is_zero() || o.is_zero()) return RationalFunction();
    if (den_.is_one() && o.den_.is_one())
        return RationalFunction(num_ * o.num_, LaurentPolynomial(1), NoNormalize{});
    // cross-cancel before multiplying to keep the final gcd cheap
    LaurentMonomial m1 = num_.monomial_gcd(), m2 = o.num_.monomial_gcd();
    LaurentPolynomial n1 = num_.shifted(m1.inverse()), n2 = o.num_.shifted(m2.inverse());
    LaurentPolynomial g1 = poly_gcd(n1, o.den_), g2 = poly_gcd(n2, den_);
    if (!g1.is_one()) n1 = divide_exact(n1, g1);
    if (!g2.is_one()) n2 = divide_exact(n2, g2);
    LaurentPolynomial d1 = g2.is_one() ? den_ : divide_exact(den_, g2);
    LaurentPolynomial d2 = g1.is_one() ? o.den_ : divide_exact(o.den_, g1);
    return RationalFunction((n1 * n2).shifted(m1 * m2), d1 * d2);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
    return *this * o.inverse();
}

RationalFunction RationalFunction::inverse() const {
    if (is_zero()) throw MathError("division by zero");
    return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::pow(int e) const {
    if (e == 0) return RationalFunction(1);
    RationalFunction base = e > 0 ? *this : inverse();
    unsigned k = e > 0 ? static_cast<unsigned>(e) : static_cast<unsigned>(-e);
    // coprimality and sign survive powering, so skip renormalization
    LaurentPolynomial n(1), d(1);
    LaurentPolynomial bn = base.num_, bd = base.den_;
    while (k) {
        if (k & 1) {
            n *= bn;
            d *= bd;
        }
        bn *= bn;
        bd *= bd;
        k >>= 1;
    }
    return RationalFunction(std::move(n), std::move(d), NoNormalize{});
}

Rational RationalFunction::evaluate(const std::map<Variable, Rational>& point) const {
    Rational d = den_.evaluate(point);
    if (d.is_zero()) throw MathError("denominator vanishes at point: " + den_.str());
    return num_.evaluate(point) / d;
}

namespace {

RationalFunction substitute_into_poly(const LaurentPolynomial& p,
                                      const std::map<Variable, RationalFunction>& bindings) {
    RationalFunction acc;
    for (const auto& [m, c] : p.terms()) {
        RationalFunction term{LaurentPolynomial(c)};
        for (const auto& [v, e] : m.exponents()) {
            auto it = bindings.find(v);
            RationalFunction base = it != bindings.end()
                                        ? it->second
                                        : RationalFunction(LaurentPolynomial::variable(v));
            term *= base.pow(e);
        }
        acc += term;
    }
    return acc;
}

}  // namespace

RationalFunction RationalFunction::substitute(
    const std::map<Variable, RationalFunction>& bindings) const {
    RationalFunction n = substitute_into_poly(num_, bindings);
    RationalFunction d = substitute_into_poly(den_, bindings);
    if (d.is_zero()) throw MathError("denominator vanishes identically after substitution");
    return n / d;
}

std::string RationalFunction::str() const {
    if (den_.is_one()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

std::ostream& operator<<(std::ostream& os, const RationalFunction& f) { return os << f.str(); }

}  // namespace cbmw
