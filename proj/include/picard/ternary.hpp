#pragma once

// Ternary forms, the Macaulay resultant of three forms, and the degree-27
// discriminant of plane quartics with its closed forms for Weierstrass shapes.

#include "picard/poly.hpp"
#include "picard/rat.hpp"

#include <array>
#include <map>

namespace picard {

// Homogeneous trivariate forms in (y, x, z); exponent key (ey, ex, ez).
struct TernaryForm {
    int degree = 0;
    std::map<std::array<int, 3>, Rat> coeff;  // zero entries may be absent

    Rat get(int ey, int ex, int ez) const;
    void set(int ey, int ex, int ez, const Rat& v);
    bool is_zero() const;
    TernaryForm partial(int var) const;  // var: 0 = y, 1 = x, 2 = z
};

using TernaryQuartic = TernaryForm;  // degree == 4

struct LinearChange3 {
    // Row-major 3x3 matrix acting on the column (y, x, z)^T.
    std::array<std::array<Rat, 3>, 3> m;

    static LinearChange3 identity();
    Rat det() const;
    LinearChange3 mul(const LinearChange3& o) const;
};

// F o T: substitute (y, x, z) -> T * (y, x, z)^T.
TernaryForm transform(const TernaryForm& F, const LinearChange3& T);

// Classical Macaulay resultant of three ternary forms (degrees 2..4 each),
// via the critical-degree matrix and its extraneous minor.  Throws
// std::runtime_error if the extraneous minor stays singular after the
// deterministic unimodular retries.
Rat macaulay_resultant(const TernaryForm& F1, const TernaryForm& F2, const TernaryForm& F3);

// Delta(F) = Res(D_y F, D_x F, D_z F) / 2^14; nonzero iff V(F) is smooth.
Rat disc_ternary(const TernaryQuartic& F);

// Closed forms (b y^3 z = f(x, z) resp. b x^4 = f(y, z), f of true degree 4):
Rat disc_short_nonspecial(const Rat& b, const Poly& f);  // -3^9 b^12 c0^3 Delta(f)^2
Rat disc_short_special(const Rat& b, const Poly& f);     // -2^16 b^9 Delta(f)^3

// Plane models of the short Weierstrass shapes, as ternary quartics.
TernaryQuartic plane_nonspecial_short(const Rat& b, const Poly& f);  // b y^3 z - f(x,z)
TernaryQuartic plane_special_short(const Rat& b, const Poly& f);     // b x^4 - f(y,z)

}  // namespace picard
