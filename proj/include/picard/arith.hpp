#pragma once

// Hilbert symbols, S-unit class representatives and the S-unit equation.

#include "picard/poly.hpp"
#include "picard/rat.hpp"

#include <optional>
#include <vector>

namespace picard {

// Place of Q: a prime, or nullopt for the archimedean place.
using Place = std::optional<Int>;

// Local Hilbert symbol (a, b)_v in {+1, -1}.
int hilbert_symbol(const Rat& a, const Rat& b, const Place& v);

struct SUnitClassSet {
    std::vector<Int> primes;        // sorted, distinct
    long exponent = 1;              // n
    std::vector<Rat> representatives;  // +-prod p^e, 0 <= e < n; count 2*n^|S|
};

SUnitClassSet s_unit_classes(std::vector<Int> S, long n);

// All lambda with lambda and 1-lambda S-units whose prime exponents are
// bounded by `bound` in absolute value, one canonical representative per
// orbit of the six-element symmetry group
//   lambda -> {l, 1-l, 1/l, 1-1/l, 1/(1-l), l/(l-1)},
// sorted canonically (by height, then value).
std::vector<Rat> solve_sunit_equation(const std::vector<Int>& S, long bound);

// True iff q != 0 and v_p(q) = 0 for all p outside S.
bool is_s_unit(const Rat& q, const std::vector<Int>& S);

// True iff every root of the squarefree integer polynomial g (deg <= 4) lies
// in the maximal unramified extension of Q_p.
bool splitting_field_unramified(const Poly& g, const Int& p);

}  // namespace picard
