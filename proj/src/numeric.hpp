#pragma once

// Internal numeric helpers for the equivalence solver: high-precision complex
// root approximation (Durand-Kerner over GMP floats) and rational
// reconstruction by continued fractions.  Every consumer verifies candidates
// exactly over Q, so these are heuristics only.

#include "picard/poly.hpp"

#include <vector>

namespace picard::numeric {

struct Cplx {
    mpf_class re, im;

    Cplx() : re(0), im(0) {}
    Cplx(mpf_class r, mpf_class i) : re(std::move(r)), im(std::move(i)) {}
    Cplx(const Cplx&) = default;
    Cplx(Cplx&&) = default;
    Cplx& operator=(Cplx&&) = default;
    // mpf assignment keeps the destination precision; adopt the source's
    // instead, so assigning into default-constructed slots never truncates.
    Cplx& operator=(const Cplx& o) {
        mpf_set_prec(re.get_mpf_t(), mpf_get_prec(o.re.get_mpf_t()));
        mpf_set_prec(im.get_mpf_t(), mpf_get_prec(o.im.get_mpf_t()));
        re = o.re;
        im = o.im;
        return *this;
    }

    Cplx operator+(const Cplx& o) const { return {re + o.re, im + o.im}; }
    Cplx operator-(const Cplx& o) const { return {re - o.re, im - o.im}; }
    Cplx operator*(const Cplx& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    Cplx operator/(const Cplx& o) const {
        mpf_class n = o.re * o.re + o.im * o.im;
        return {(re * o.re + im * o.im) / n, (im * o.re - re * o.im) / n};
    }
    mpf_class norm2() const { return re * re + im * im; }
};

// All complex roots of a squarefree polynomial, at the given precision (bits).
std::vector<Cplx> complex_roots(const Poly& p, unsigned prec);

// Nearest rational with denominator below `den_bound`, if the approximation is
// consistent at the working precision; nullopt otherwise.
std::optional<Rat> reconstruct_rational(const mpf_class& x, const Int& den_bound);

// Solve the 4x4 complex linear system M c = rhs (Gaussian elimination).
std::vector<Cplx> solve4(std::vector<std::vector<Cplx>> M, std::vector<Cplx> rhs);

}  // namespace picard::numeric
