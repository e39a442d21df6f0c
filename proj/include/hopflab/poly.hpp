#pragma once

// Univariate polynomials over a Field, and root finding in the field itself.

#include <vector>

#include "hopflab/field.hpp"

namespace hopflab {

/// Coefficients low to high; the zero polynomial is empty.
using Poly = std::vector<Scalar>;

void trim(Poly& p);
/// -1 for the zero polynomial.
int degree(const Poly& p);
Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
/// a = q b + r with deg r < deg b; b must be nonzero.
void poly_divmod(const Poly& a, const Poly& b, Poly& q, Poly& r);
Poly poly_monic(Poly p);
/// Monic gcd (empty when both are zero).
Poly poly_gcd(Poly a, Poly b);
/// Returns g = gcd(a, b) (monic) and sets u, v with u a + v b = g.
Poly poly_ext_gcd(const Poly& a, const Poly& b, Poly& u, Poly& v);
Scalar poly_eval(const Poly& p, const Scalar& x);
/// (t - lambda)^k
Poly linear_power(const Scalar& lambda, int k);

/// Distinct roots of p lying in its field, sorted by their text form.
///
/// GF(p) and Q are handled completely (roots of Q-polynomials are found modulo
/// a 61-bit prime and confirmed exactly). Q(zeta_n) is handled completely when
/// the unit group mod n is cyclic, through an inert prime; otherwise only the
/// candidates 0 and +-zeta^j are tried.
std::vector<Scalar> roots_in_field(const Poly& p);

}  // namespace hopflab
