#pragma once

// Weighted-projective invariants of cubic-shape curves, isomorphism tests
// over Q and over the algebraic closure, automorphism types, specialness
// detection, and twist enumeration with bounded bad reduction.

#include "picard/binary.hpp"
#include "picard/models.hpp"

#include <optional>
#include <vector>

namespace picard {

// Normalized representative of (c2 : c3 : c4) in weighted projective space
// with weights (6, 9, 12), where nu acts as (nu^-6 c2, nu^-9 c3, nu^-12 c4):
// integral, no prime p with v_p(c2) >= 6, v_p(c3) >= 9 and v_p(c4) >= 12
// simultaneously, and c3 >= 0.
struct WeightedPoint {
    Rat c2, c3, c4;
    bool operator==(const WeightedPoint& o) const {
        return c2 == o.c2 && c3 == o.c3 && c4 == o.c4;
    }
    bool operator<(const WeightedPoint& o) const {
        if (c2 != o.c2) return c2 < o.c2;
        if (c3 != o.c3) return c3 < o.c3;
        return c4 < o.c4;
    }
};

WeightedPoint normalize_weighted_point(const Rat& c2, const Rat& c3, const Rat& c4);
WeightedPoint weighted_point(const NonspecialShort& m);

// Scaling-invariant branch tuple:
//   c2 != 0 -> (1, c3^2/c2^3, c4/c2^2); else c3 != 0 -> (0, 1, c4^3/c3^4);
//   else (0, 0, 1).  The last value marks the special class.
struct QbarClass {
    std::array<Rat, 3> t;
    bool operator==(const QbarClass& o) const { return t == o.t; }
    bool is_special() const { return t[0] == 0 && t[1] == 0; }
};

QbarClass qbar_class(const NonspecialShort& m);

enum class AutType { Z3, Z6, Z9 };

// Z6 iff c3 = 0 and c2 != 0; Z9 iff c2 = c4 = 0; else Z3 (computed on the
// normal form).  Throws on special curves.
AutType automorphism_type(const NonspecialShort& m);

struct IsoResult {
    bool isomorphic = false;
    std::optional<Rat> nu;  // witness scaling when recovered
};

// Q-isomorphism of nonspecial curves: equality of normalized weighted
// points, with the witness nu recovered from coordinate ratios.  Throws
// std::invalid_argument for special curves (use is_isomorphic_special).
IsoResult is_isomorphic_Q(const NonspecialShort& m1, const NonspecialShort& m2);

// Isomorphism over the algebraic closure: equality of branch tuples.
bool is_isomorphic_Qbar(const NonspecialShort& m1, const NonspecialShort& m2);

// Q-isomorphism of fourth-power-shape curves x^4 = a g(y): some projective
// transport g1 o A = mu g2 with a2 / (a1 mu) a rational fourth power.
bool is_isomorphic_special(const SpecialShort& m1, const SpecialShort& m2);

// All twists of m with bad reduction inside S (S must contain 3), one
// representative per Q-isomorphism class, sorted by normalized weighted
// point.  The twist parameter ranges over S-unit classes modulo n-th powers
// with n = 3, 6 or 9 according to the automorphism type.
std::vector<NonspecialShort> twists_with_good_reduction_outside(const NonspecialShort& m,
                                                                std::vector<Int> S);

bool is_special(const PicardCurve& c);
// Shape-based test for plane quartics in one of the two Weierstrass shapes.
bool is_special(const TernaryQuartic& F);

}  // namespace picard
