#pragma once

// Parsing of polynomial and curve literals used by the command-line tools:
// expressions in x, y, z with integer/rational constants and the operators
// + - * / ^ and parentheses, e.g. "x^4+6*x^2-3" or "y^3*z - x^4 + z^4".

#include "picard/models.hpp"
#include "picard/poly.hpp"
#include "picard/ternary.hpp"

#include <array>
#include <map>
#include <string>

namespace picard {

// Sparse trivariate polynomial, exponent key (ey, ex, ez).
using SparsePoly = std::map<std::array<int, 3>, Rat>;

SparsePoly parse_poly_literal(const std::string& s);

// Homogeneous of degree 4 in (y, x, z).
TernaryQuartic parse_ternary_quartic(const std::string& s);

// Univariate in the given variable ('x', 'y' or 'z').
Poly parse_poly_in(const std::string& s, char var);

// "lhs = rhs": the difference, homogenized to degree 4 with z, must match
// one of the two Weierstrass shapes.  Throws std::invalid_argument.
PicardCurve parse_curve_literal(const std::string& s);

}  // namespace picard
