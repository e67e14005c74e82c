#pragma once

// Special polynomials y^4 + 6by^2 + cy - 3b^2, the classification of special
// polynomials with good reduction outside {2,3} (26 classes), the biquadratic
// descent obstruction, and the enumeration of the 800 fourth-power-shape
// curves with bad reduction inside {2,3}.

#include "picard/binary.hpp"
#include "picard/models.hpp"

#include <map>
#include <vector>

namespace picard {

// g = y^4 + 6 b y^2 + c y - 3 b^2; always satisfies invariant_I(g) = 0.
struct SpecialPolynomial {
    Rat b, c;
    Poly expand() const { return {-3 * b * b, c, 6 * b, Rat(0), Rat(1)}; }
};

// -27 (64 b^3 + c^2)^2; equals disc_binary of the expanded quartic.
Rat special_poly_discriminant(const SpecialPolynomial& sp);

// Local solvability of d1 x^2 + d2 y^2 = z^2 for squarefree d1, d2 with
// d1 d2 = -3 modulo squares: true iff some Hilbert symbol (d1, d2)_v is -1
// (the class is obstructed).  Throws std::invalid_argument if the
// precondition fails.
bool biquadratic_obstruction(const Int& d1, const Int& d2);

struct SpecialClassEntry {
    Poly g;                 // monic, degree 3 or 4, invariant_I = 0
    int row;                // pairing row index (0-based)
    bool left;              // left column of the pairing row
    bool self_paired;       // the row's partner is the polynomial itself
    std::vector<Rat> scal;  // 4th-power-free scalar classes of its symmetries
};

struct ClassificationTable {
    std::vector<SpecialClassEntry> entries;  // 26 entries, table order
};

// The 26 classes of special polynomials over Q whose splitting field is
// unramified outside {2,3}, rebuilt with full verification: specialness,
// separability, ramification bounds, pairwise non-equivalence, shadow
// pairing, and the Hilbert-symbol exclusion of the obstructed biquadratic
// pairs.  Throws std::runtime_error with the failing certificate.
const ClassificationTable& classify_special_good_outside_23();

// All curves x^4 = a g(y) with g from the classification table and
// a = +-2^mu 3^nu, 0 <= mu, nu <= 3, one representative per isomorphism
// class (the lexicographically least (sign, mu, nu) in each class).
// Exactly 800 curves, in table order.
std::vector<SpecialShort> enumerate_special_twists_23();

// The curve x^4 = y^3 + 1 together with its stored (validated, not
// recomputed) arithmetic data.
struct StandardSpecialCurve {
    SpecialShort model;
    Rat plane_disc_magnitude;               // 2^16 3^9
    Rat minimal_disc_magnitude;             // 2^7 3^9
    std::map<Int, long> conductor_exponents;  // {2: 6, 3: 6}
};

StandardSpecialCurve standard_special_curve();

}  // namespace picard
