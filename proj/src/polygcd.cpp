#include "cbmw/polygcd.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

#include "cbmw/errors.hpp"

namespace cbmw {
namespace {

LaurentPolynomial with_positive_lead(const LaurentPolynomial& p) {
    if (!p.is_zero() && p.lead().second < 0) return -p;
    return p;
}

LaurentPolynomial divide_coeffs(const LaurentPolynomial& p, const mpz_class& c) {
    LaurentPolynomial out;
    for (const auto& [m, coef] : p.terms()) {
        mpz_class q;
        mpz_divexact(q.get_mpz_t(), coef.get_mpz_t(), c.get_mpz_t());
        out += LaurentPolynomial::term(q, m);
    }
    return out;
}

// p viewed as a univariate polynomial in x with polynomial coefficients
std::map<int, LaurentPolynomial> univariate_view(const LaurentPolynomial& p, Variable x) {
    std::map<int, LaurentPolynomial> view;
    for (const auto& [m, c] : p.terms()) {
        int e = m.exponent(x);
        view[e] += LaurentPolynomial::term(c, m * LaurentMonomial::var(x, -e));
    }
    return view;
}

LaurentPolynomial from_view(const std::map<int, LaurentPolynomial>& view, Variable x) {
    LaurentPolynomial p;
    for (const auto& [e, coef] : view) p += coef.shifted(LaurentMonomial::var(x, e));
    return p;
}

int degree_in(const LaurentPolynomial& p, Variable x) {
    auto range = p.exponent_range(x);
    return range ? range->second : 0;
}

LaurentPolynomial coeff_of_power(const LaurentPolynomial& p, Variable x, int e) {
    LaurentPolynomial out;
    for (const auto& [m, c] : p.terms())
        if (m.exponent(x) == e) out += LaurentPolynomial::term(c, m * LaurentMonomial::var(x, -e));
    return out;
}

// lazy pseudo-remainder: multiplies the dividend by lc(q)^k as it goes
LaurentPolynomial pseudo_rem(LaurentPolynomial p, const LaurentPolynomial& q, Variable x) {
    const int dq = degree_in(q, x);
    const LaurentPolynomial lcq = coeff_of_power(q, x, dq);
    while (!p.is_zero()) {
        int dp = degree_in(p, x);
        if (dp < dq) break;
        LaurentPolynomial lcp = coeff_of_power(p, x, dp);
        p = p * lcq - (lcp.shifted(LaurentMonomial::var(x, dp - dq))) * q;
    }
    return p;
}

// gcd of the x-coefficients; for a primitive-in-x polynomial this is a unit
LaurentPolynomial content_in(const LaurentPolynomial& p, Variable x) {
    LaurentPolynomial g;
    for (const auto& [e, coef] : univariate_view(p, x)) {
        g = poly_gcd(g, coef);
        if (g.is_one()) break;
    }
    return g;
}

// both inputs ordinary, nonzero, integer-content-free, monomial-content-free
LaurentPolynomial gcd_primitive(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    if (a.is_constant() || b.is_constant()) return LaurentPolynomial(1);

    std::set<Variable> va = a.variables(), vb = b.variables();
    std::vector<Variable> common;
    std::set_intersection(va.begin(), va.end(), vb.begin(), vb.end(),
                          std::back_inserter(common));
    if (common.empty()) return LaurentPolynomial(1);

    // main variable: shortest expected remainder sequence
    Variable x = common.front();
    int best = std::min(degree_in(a, x), degree_in(b, x));
    for (Variable v : common) {
        int d = std::min(degree_in(a, v), degree_in(b, v));
        if (d < best) {
            best = d;
            x = v;
        }
    }

    LaurentPolynomial ca = content_in(a, x), cb = content_in(b, x);
    LaurentPolynomial cont = poly_gcd(ca, cb);
    LaurentPolynomial p = divide_exact(a, ca), q = divide_exact(b, cb);

    if (degree_in(p, x) < degree_in(q, x)) std::swap(p, q);
    LaurentPolynomial g(1);
    while (true) {
        LaurentPolynomial r = pseudo_rem(p, q, x);
        if (r.is_zero()) {
            g = q;
            break;
        }
        if (degree_in(r, x) == 0) break;  // primitive parts are coprime
        mpz_class ic = r.content();
        if (ic != 1) r = divide_coeffs(r, ic);
        LaurentPolynomial cr = content_in(r, x);
        if (!cr.is_one()) r = divide_exact(r, cr);
        p = q;
        q = r;
    }
    return cont * g;
}

}  // namespace

LaurentPolynomial poly_gcd(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    if (!a.is_laurent_free() || !b.is_laurent_free())
        throw std::invalid_argument("poly_gcd requires ordinary polynomials");
    if (a.is_zero()) return with_positive_lead(b);
    if (b.is_zero()) return with_positive_lead(a);
    if (a == b || a == -b) return with_positive_lead(a);

    mpz_class ica = a.content(), icb = b.content(), ic;
    mpz_gcd(ic.get_mpz_t(), ica.get_mpz_t(), icb.get_mpz_t());

    if (a.is_constant() || b.is_constant()) return LaurentPolynomial(ic);

    LaurentPolynomial a1 = ica == 1 ? a : divide_coeffs(a, ica);
    LaurentPolynomial b1 = icb == 1 ? b : divide_coeffs(b, icb);

    LaurentMonomial ma = a1.monomial_gcd(), mb = b1.monomial_gcd();
    LaurentMonomial mg;  // componentwise min of the two monomial contents
    for (const auto& [v, e] : ma.exponents()) {
        int e2 = std::min(e, mb.exponent(v));
        if (e2 != 0) mg = mg * LaurentMonomial::var(v, e2);
    }
    a1 = a1.shifted(ma.inverse());
    b1 = b1.shifted(mb.inverse());

    // single-term fast path: gcd is just the common monomial and content
    LaurentPolynomial g;
    if (a1.is_single_term() || b1.is_single_term())
        g = LaurentPolynomial(1);
    else
        g = gcd_primitive(a1, b1);

    return with_positive_lead(g.shifted(mg) * ic);
}

std::optional<LaurentPolynomial> try_divide(const LaurentPolynomial& a,
                                            const LaurentPolynomial& b) {
    if (b.is_zero()) throw MathError("division by zero polynomial");
    if (a.is_zero()) return LaurentPolynomial();

    LaurentMonomial ma = a.monomial_gcd(), mb = b.monomial_gcd();
    LaurentPolynomial r = a.shifted(ma.inverse());
    LaurentPolynomial d = b.shifted(mb.inverse());
    LaurentMonomial carry = ma * mb.inverse();

    LaurentPolynomial quot;
    const auto& [dlm, dlc] = d.lead();
    while (!r.is_zero()) {
        const auto& [rlm, rlc] = r.lead();
        if (!dlm.divides(rlm)) return std::nullopt;
        mpz_class qc, rem;
        mpz_tdiv_qr(qc.get_mpz_t(), rem.get_mpz_t(), rlc.get_mpz_t(), dlc.get_mpz_t());
        if (rem != 0) return std::nullopt;
        LaurentPolynomial t = LaurentPolynomial::term(qc, rlm * dlm.inverse());
        quot += t;
        r -= t * d;
    }
    return quot.shifted(carry);
}

LaurentPolynomial divide_exact(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    auto q = try_divide(a, b);
    if (!q) throw InternalError("inexact polynomial division");
    return *q;
}

}  // namespace cbmw
