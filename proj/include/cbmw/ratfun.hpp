#pragma once

#include <iosfwd>
#include <map>
#include <string>

#include "cbmw/laurent.hpp"

namespace cbmw {

/// Quotient of two Laurent polynomials, always held in reduced normal form:
///  - zero is 0/1;
///  - numerator and denominator share no polynomial factor and no integer
///    content;
///  - the denominator is an ordinary polynomial carrying no monomial factor
///    (units of the Laurent ring live in the numerator), with positive
///    leading coefficient under the canonical monomial order.
/// Equality of normal forms is plain structural equality.
class RationalFunction {
  public:
    RationalFunction() : num_(), den_(1) {}
    RationalFunction(long c) : num_(c), den_(1) {}
    RationalFunction(const LaurentPolynomial& num) : num_(num), den_(1) {}
    RationalFunction(const LaurentPolynomial& num, const LaurentPolynomial& den);

    const LaurentPolynomial& num() const { return num_; }
    const LaurentPolynomial& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_one(); }

    RationalFunction operator-() const;
    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-(const RationalFunction& o) const;
    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction operator/(const RationalFunction& o) const;
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

    RationalFunction inverse() const;  // throws MathError on 0
    RationalFunction pow(int e) const;

    bool operator==(const RationalFunction& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }

    /// Exact value at a point; throws MathError naming the denominator when
    /// it vanishes there.
    Rational evaluate(const std::map<Variable, Rational>& point) const;

    /// Exact substitution followed by normalization. Variables absent from
    /// `bindings` are left alone. Throws MathError when the denominator
    /// vanishes identically after substitution.
    RationalFunction substitute(const std::map<Variable, RationalFunction>& bindings) const;

    std::string str() const;  // "num" or "(num)/(den)"

  private:
    struct NoNormalize {};
    RationalFunction(LaurentPolynomial num, LaurentPolynomial den, NoNormalize)
        : num_(std::move(num)), den_(std::move(den)) {}

    LaurentPolynomial num_, den_;
};

std::ostream& operator<<(std::ostream& os, const RationalFunction& f);

}  // namespace cbmw
