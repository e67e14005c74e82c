#pragma once

// Univariate polynomials over Q, dense ascending coefficient vectors.
// Everything here is exact; degrees in this project stay tiny (<= 8).

#include "picard/rat.hpp"

#include <vector>

namespace picard {

using Poly = std::vector<Rat>;  // p[i] = coefficient of x^i

Poly trim(Poly p);
int deg(const Poly& p);  // -1 for the zero polynomial
Rat lead(const Poly& p);

Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_scale(const Poly& a, const Rat& s);
Poly poly_neg(const Poly& a);
// Quotient and remainder of a by b (b != 0).
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);

Rat poly_eval(const Poly& p, const Rat& x);
Poly poly_derivative(const Poly& p);
// p(a*x + b)
Poly poly_compose_linear(const Poly& p, const Rat& a, const Rat& b);
// x^deg(p) * p(1/x) (coefficient reversal at the stated degree)
Poly poly_reverse(const Poly& p, int degree);

Poly poly_monic(const Poly& p);
// Largest rational c such that p/c has coprime integer coefficients; sign of lead.
Rat poly_content(const Poly& p);

Poly poly_gcd(const Poly& a, const Poly& b);  // monic gcd over Q
bool poly_squarefree(const Poly& p);

Rat poly_resultant(const Poly& a, const Poly& b);
Rat poly_discriminant(const Poly& p);  // (-1)^{n(n-1)/2} Res(p, p') / lead(p)

// All rational roots, with multiplicity, as a sorted list.
std::vector<Rat> rational_roots(const Poly& p);

// Factorization into irreducible factors over Q (degree <= 4 supported):
// returns (content, monic irreducible factors with multiplicity).
std::pair<Rat, std::vector<Poly>> factor_poly(const Poly& p);

}  // namespace picard
