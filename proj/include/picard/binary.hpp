#pragma once

// Binary quartic forms and monic quartics: invariants I, J, discriminant,
// affine/Mobius actions, slope, reduction at a prime, Hessian shadow,
// rational symmetries and PGL2(Q)-equivalence.

#include "picard/poly.hpp"
#include "picard/rat.hpp"

#include <array>
#include <optional>
#include <vector>

namespace picard {

// c[0] x^4 + c[1] x^3 z + c[2] x^2 z^2 + c[3] x z^3 + c[4] z^4.
// Degree-3 inputs are represented with c[0] = 0 (root at infinity).
struct BinaryQuartic {
    std::array<Rat, 5> c{};

    static BinaryQuartic from_poly(const Poly& p);  // deg <= 4
    Poly to_poly() const;                           // dehomogenize at z = 1
    bool is_zero() const;
    bool operator==(const BinaryQuartic& o) const { return c == o.c; }
};

struct MobiusMap {
    Rat a = 1, b = 0, c = 0, d = 1;  // x -> (a x + b) / (c x + d)
    std::optional<Rat> eps;          // optional recorded scalar

    Rat det() const { return a * d - b * c; }
    MobiusMap compose(const MobiusMap& o) const;  // this after o? matrix product this*o
    MobiusMap inverse() const;
    bool is_identity_projective() const;
};

// (G o A)(x, z) = G(a x + b z, c x + d z).
BinaryQuartic form_act(const BinaryQuartic& G, const MobiusMap& A);

Rat invariant_I(const BinaryQuartic& f);
Rat invariant_J(const BinaryQuartic& f);
// (4 I^3 - J^2)/27; equals Res(f, f')/c0 when c0 != 0.
Rat disc_binary(const BinaryQuartic& f);
inline Rat disc_binary(const Poly& p) { return disc_binary(BinaryQuartic::from_poly(p)); }

// alpha^{-4} f(alpha x + beta) for monic quartic f.
Poly act_affine(const Poly& f, const Rat& alpha, const Rat& beta);

// Slope lambda(f) = min_{1<=i<=4} v_p(c_i)/i for monic quartic f
// (c_i = coefficient of x^{4-i}); +infinity marker when all c_i vanish.
struct SlopeValue {
    bool infinite = false;
    Rat lambda;
};
SlopeValue lambda_slope(const Poly& f, const Int& p);

// Reduction of a separable monic quartic at p; returns the reduced quartic and
// the affine map (alpha, beta) such that output = alpha^{-4} f(alpha x + beta).
std::pair<Poly, MobiusMap> reduce_quartic(const Poly& f, const Int& p);

// Sufficient conditions for reducedness; false is inconclusive.
bool is_reduced_sufficient(const Poly& f, const Int& p);

// Hessian covariant shadow of a special polynomial (I = 0, separable).
// Output monic of degree 3 or 4 (degree 3 encodes infinity in the divisor).
Poly hessian_shadow(const Poly& g);

// A transport (A, mu): G1 o A = mu * G2.
struct Transport {
    MobiusMap A;
    Rat mu;
};

// Complete list of projective transports from G2's root divisor to G1's.
std::vector<Transport> all_transports(const BinaryQuartic& G1, const BinaryQuartic& G2);

// All A in PGL2(Q) with g o A = mu g; mu reported as its 4th-power-free core.
std::vector<Transport> rational_symmetries(const Poly& g);

std::optional<Transport> are_equivalent(const Poly& g1, const Poly& g2);

}  // namespace picard
