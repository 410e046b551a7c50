#pragma once

#include <optional>

#include "cbmw/laurent.hpp"

namespace cbmw {

/// Greatest common divisor of two ordinary (no negative exponents)
/// multivariate polynomials over Z, including the integer content and any
/// common monomial factor. Result has a positive leading coefficient.
/// gcd(0, 0) = 0. Throws std::invalid_argument on Laurent input.
LaurentPolynomial poly_gcd(const LaurentPolynomial& a, const LaurentPolynomial& b);

/// Exact division a / b over Z, tolerant of Laurent input (monomial parts
/// are shifted out first). Returns nullopt when b does not divide a.
/// Throws MathError when b = 0.
std::optional<LaurentPolynomial> try_divide(const LaurentPolynomial& a,
                                            const LaurentPolynomial& b);

/// Like try_divide but throws InternalError when the division is inexact.
LaurentPolynomial divide_exact(const LaurentPolynomial& a, const LaurentPolynomial& b);

}  // namespace cbmw
