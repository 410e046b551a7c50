#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cbmw/rational.hpp"
#include "cbmw/variable.hpp"

namespace cbmw {

/// Power product of variables with integer (possibly negative) exponents.
/// Zero exponents are never stored; equality is equality of exponent maps.
class LaurentMonomial {
  public:
    LaurentMonomial() = default;  // the empty product

    static LaurentMonomial var(Variable v, int exp = 1);

    int exponent(Variable v) const;
    int total_degree() const;
    bool is_one() const { return exps_.empty(); }

    LaurentMonomial operator*(const LaurentMonomial& o) const;
    LaurentMonomial inverse() const;
    LaurentMonomial pow(int k) const;

    /// Componentwise <=, i.e. o/this has no negative exponents.
    bool divides(const LaurentMonomial& o) const;

    /// Graded lexicographic comparison: total degree first, then the
    /// variable order u_1 < ... < u_r < rho < q with the higher exponent
    /// winning at the first differing variable. Returns <0, 0 or >0.
    static int grlex_cmp(const LaurentMonomial& a, const LaurentMonomial& b);

    bool operator==(const LaurentMonomial& o) const { return exps_ == o.exps_; }

    /// (variable, exponent) pairs sorted by the variable order.
    const std::vector<std::pair<Variable, int>>& exponents() const { return exps_; }

    std::string str() const;  // "u1^2*rho^-1", "1" for the empty product

  private:
    std::vector<std::pair<Variable, int>> exps_;
};

/// Orders monomials with the graded-lex largest first, so that map
/// iteration visits terms in canonical printing order.
struct GrlexGreater {
    bool operator()(const LaurentMonomial& a, const LaurentMonomial& b) const {
        return LaurentMonomial::grlex_cmp(a, b) > 0;
    }
};

/// Multivariate Laurent polynomial over arbitrary-precision integers in
/// u_1..u_r, rho, q. Terms are kept in canonical (graded-lex descending)
/// order with no zero coefficients.
class LaurentPolynomial {
  public:
    using TermMap = std::map<LaurentMonomial, mpz_class, GrlexGreater>;

    LaurentPolynomial() = default;  // zero
    LaurentPolynomial(long c);
    LaurentPolynomial(const mpz_class& c);

    static LaurentPolynomial variable(Variable v, int exp = 1);
    static LaurentPolynomial term(const mpz_class& coeff, const LaurentMonomial& m);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_constant() const;
    bool is_single_term() const { return terms_.size() == 1; }
    std::size_t term_count() const { return terms_.size(); }

    const TermMap& terms() const { return terms_; }
    const mpz_class& coeff(const LaurentMonomial& m) const;  // 0 if absent

    /// Leading term under the canonical order. Polynomial must be nonzero.
    const std::pair<const LaurentMonomial, mpz_class>& lead() const;

    LaurentPolynomial operator-() const;
    LaurentPolynomial operator+(const LaurentPolynomial& o) const;
    LaurentPolynomial operator-(const LaurentPolynomial& o) const;
    LaurentPolynomial operator*(const LaurentPolynomial& o) const;
    LaurentPolynomial& operator+=(const LaurentPolynomial& o);
    LaurentPolynomial& operator-=(const LaurentPolynomial& o);
    LaurentPolynomial& operator*=(const LaurentPolynomial& o) { return *this = *this * o; }

    LaurentPolynomial operator*(const mpz_class& c) const;
    LaurentPolynomial pow(unsigned e) const;

    /// Multiplication by a bare monomial (shifts every exponent).
    LaurentPolynomial shifted(const LaurentMonomial& m) const;

    bool operator==(const LaurentPolynomial& o) const { return terms_ == o.terms_; }

    std::set<Variable> variables() const;
    /// Min/max exponent of v over all terms; nullopt if v does not occur.
    std::optional<std::pair<int, int>> exponent_range(Variable v) const;
    /// Per-variable minimum exponents as a monomial; dividing by it clears
    /// all negative exponents and common monomial factors.
    LaurentMonomial monomial_gcd() const;
    /// True if no exponent is negative (an ordinary polynomial).
    bool is_laurent_free() const;
    /// gcd of |coefficients|, positive; 0 for the zero polynomial.
    mpz_class content() const;

    /// Exact evaluation; every variable occurring must be bound.
    /// Throws MathError if a negative power of zero is required.
    Rational evaluate(const std::map<Variable, Rational>& point) const;

    /// Canonical text form, e.g. "u1^2 - 1" or "-u1 - u2".
    std::string str() const;

  private:
    void add_term(const LaurentMonomial& m, const mpz_class& c);
    TermMap terms_;
};

LaurentPolynomial operator*(const mpz_class& c, const LaurentPolynomial& p);
std::ostream& operator<<(std::ostream& os, const LaurentPolynomial& p);

/// The element q - q^-1 that everything in this theory funnels through.
LaurentPolynomial q_minus_q_inv();

/// Substitutes `value` for `v`. When `f` contains negative powers of `v`,
/// `value` must be a unit (single term with coefficient +-1); otherwise any
/// polynomial is accepted. Throws MathError if an inverse is needed but
/// `value` is not a unit.
LaurentPolynomial substitute_variable(const LaurentPolynomial& f, Variable v,
                                      const LaurentPolynomial& value);

}  // namespace cbmw
