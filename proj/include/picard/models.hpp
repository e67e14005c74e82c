#pragma once

// Picard-curve model types (nonspecial/special, short/long Weierstrass),
// conversions between them, point/tangent normalization, per-prime
// discriminant minimization, and the Tschirnhausen normal form.

#include "picard/binary.hpp"
#include "picard/poly.hpp"
#include "picard/rat.hpp"
#include "picard/ternary.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace picard {

// Homogeneous binary forms in (x, z) or (y, z) are stored as coefficient
// vectors indexed by the power of the first variable; the z-power is
// (degree - index).  The affine polynomial (z = 1) has the same vector.

// Curve b y^3 = f(x) with deg f = 4, c0 != 0 and Delta(f) != 0.
struct NonspecialShort {
    Rat b;
    Poly f;
};

// Curve (a0 y^3 + a1(x,z) y^2 + a2(x,z) y) z = a4(x,z) with the identity
// a1^2 = 3 a0 a2 of binary forms.  a1 linear, a2 quadratic, a4 quartic.
struct NonspecialLong {
    Rat a0;
    Poly a1;
    Poly a2;
    Poly a4;
};

// Curve b x^4 = f(y) with Delta(f) != 0 (as binary quartic) and I(f) = 0.
struct SpecialShort {
    Rat b;
    Poly f;
};

// Curve a0 x^4 + a1 z x^3 + a2 z^2 x^2 + a3 z^3 x = a4(y, z) with the scalar
// identities 8 a0 a2 = 3 a1^2 and 16 a0^2 a3 = a1^3.
struct SpecialLong {
    Rat a0;
    Rat a1;
    Rat a2;
    Rat a3;
    Poly a4;
};

enum class CurveKind { nonspecial, special };

struct PicardCurve {
    CurveKind kind;
    std::variant<NonspecialShort, NonspecialLong, SpecialShort, SpecialLong> model;
    std::string notes;

    // Validating factories: reject singular equations and violated long-model
    // relations, and derive `kind` from the defining equation.
    static PicardCurve from_nonspecial_short(const NonspecialShort& m);
    static PicardCurve from_nonspecial_long(const NonspecialLong& m);
    static PicardCurve from_special_short(const SpecialShort& m);
    static PicardCurve from_special_long(const SpecialLong& m);

    TernaryQuartic plane() const;   // defining plane quartic (variables y, x, z)
    Rat plane_disc() const;         // disc_ternary of plane()
};

// Complete-the-cube substitution y -> y - a1/(3 a0); exact by the relation.
NonspecialShort long_to_short_nonspecial(const NonspecialLong& m);

// Quartic analogue x -> x - a1 z/(4 a0); exact by the two relations.
SpecialShort long_to_short_special(const SpecialLong& m);

// Unimodular integral change of variables sending the rational point P
// (primitive integral coordinates in the (y, x, z) frame) to (1:0:0) and its
// tangent line to z = 0.  Throws if P is not on the curve or is singular.
std::pair<TernaryQuartic, LinearChange3> normalize_point_tangent(
    const TernaryQuartic& F, const std::array<Int, 3>& P);

// Recognize a plane quartic in one of the two Weierstrass shapes and rebuild
// the corresponding (validated) model; nullopt when the form has neither
// shape.  Throws when the shape matches but the equation is degenerate.
std::optional<PicardCurve> curve_from_plane(const TernaryQuartic& F);

// Bounded local search over model moves at p (never increases v_p of the
// plane discriminant; deterministic; returns the input when no move helps).
PicardCurve minimize_at_prime(const PicardCurve& c, const Int& p, int depth = 3);

struct PrimeExponent {
    Int p;
    long e = 0;              // v_p of the plane discriminant after minimization
    bool certified = false;  // true when no further improvement is possible
};

struct MinimalModelReport {
    PicardCurve curve;
    std::vector<PrimeExponent> exponents;  // ascending primes dividing Delta
    Rat disc;                              // plane discriminant of `curve`
};

// Applies minimize_at_prime at every prime dividing the discriminant
// (ascending order; each pass only touches its own prime).
MinimalModelReport global_minimal_model(const PicardCurve& c, int depth = 3);

// Normal form y^3 = x^4 + c2 x^2 + c3 x + c4 (monicize with u = b c0^2,
// v = b c0^3, then depress the cubic term).  Returns (c2, c3, c4).
std::array<Rat, 3> tschirnhausen_normal_form(const NonspecialShort& m);

// Restricted mode: minimal v_p of the plane discriminant over models of the
// traceless shape b y^3 = c0 x^4 + c2 x^2 + c3 x + c4 related to m by
// diagonal substitutions (integer programming over the three exponents).
long traceless_minimum_exponent(const NonspecialShort& m, const Int& p);

}  // namespace picard
