#pragma once

// Good/bad-reduction tests at a prime, reduced short Weierstrass equations,
// bad-prime sets and conductor-exponent bound validation.

#include "picard/arith.hpp"
#include "picard/binary.hpp"
#include "picard/models.hpp"

#include <map>
#include <string>
#include <vector>

namespace picard {

// Machine-readable criterion that decided a reduction verdict.
enum class ReasonCode {
    disc_unit,                // the discriminant criterion (unit = good)
    c_valuation,              // scalar factor c of the reduced equation not a unit
    odd_3_valuation,          // 3 ramifies oddly over Q: always bad at 3
    a_mod_4,                  // v_p(a) not a multiple of 4 (fourth-power shape)
    ramified_splitting_field, // branch polynomial splits in a ramified extension
    wild_p2_special,          // fourth-power shape is always bad at 2
};

struct ReductionVerdict {
    Int p;
    bool good = false;
    ReasonCode reason = ReasonCode::disc_unit;
};

// Isomorphic model y^3 = c * f0(x) with f0 monic, reduced at p, and
// 0 <= v_p(c) <= 2.  Throws for p = 3 (the reduction theory needs p != 3).
std::pair<Rat, Poly> reduced_short_weierstrass(const NonspecialShort& m, const Int& p);

// Good reduction of the cubic-shape curve b y^3 = f(x) at p.  Over Q the
// prime 3 is always bad; otherwise good iff the reduced equation has unit c
// and unit discriminant.
ReductionVerdict has_good_reduction_nonspecial(const NonspecialShort& m, const Int& p);

// True iff the reduction of the marked-line pair (f, line at infinity) is
// good at p, i.e. the reduced quartic has unit discriminant.
bool good_reduction_marked_line(const Poly& f, const Int& p);

// Good reduction of the fourth-power-shape curve b x^4 = f(y) at p: always
// bad at 2 and 3 over Q; for p >= 5 good iff v_p(a) is a multiple of 4 and
// the splitting field of the branch polynomial is unramified at p
// (a = leading coefficient of f divided by b).
ReductionVerdict has_good_reduction_special(const SpecialShort& m, const Int& p);

// Sorted primes of bad reduction over Q.  Always contains 3; contains 2 for
// every special curve.
std::vector<Int> bad_primes(const PicardCurve& c);

// Conductor exponent at 3 for x^4 = a(y^4 + 6b y^2 + 3c y - 3b^2) with
// v_3(b) = 0 and 0 <= v_3(a) <= 3: returns 4 iff v_3(a) is 1 or 2, else 6.
long special_f3_family(const Rat& a, const Rat& b, const Rat& cprime);

struct ConductorViolation {
    Int p;  // 0 for a global (non-per-prime) violation
    std::string message;
};

// Validates externally supplied conductor exponents f_p against the bound
// tables: f_3 >= 4 always; for special curves f_2 >= 6, f_p in {0, 4, 6} for
// p >= 5, and the global floor N >= 2^6 3^6 (checked when f_2 and f_3 are
// both present).  Exponents are partial: missing primes are not flagged.
std::vector<ConductorViolation> validate_conductor_bounds(
    CurveKind kind, const std::map<Int, long>& f_exponents);

}  // namespace picard
