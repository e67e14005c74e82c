#pragma once

// Finite fields F_{p^k} as quotient rings by a deterministically chosen
// irreducible modulus, cached per (p, k).

#include "picard/rat.hpp"

#include <memory>
#include <vector>

namespace picard {

// Element representative: coefficient vector of length k, entries in [0, p).
using FqEl = std::vector<Int>;

class FqCtx {
  public:
    // Cached context; the modulus is the first monic irreducible of degree k
    // in the base-p counter order on its lower coefficients.
    static std::shared_ptr<const FqCtx> get(const Int& p, int k);

    const Int& p() const { return p_; }
    int k() const { return k_; }
    const std::vector<Int>& modulus() const { return mod_; }  // ascending, monic
    Int q() const;                                            // p^k

    FqEl zero() const { return FqEl(k_, Int(0)); }
    FqEl one() const;
    FqEl from_int(const Int& n) const;
    FqEl gen() const;  // class of t

    bool is_zero(const FqEl& a) const;
    bool eq(const FqEl& a, const FqEl& b) const;
    FqEl add(const FqEl& a, const FqEl& b) const;
    FqEl sub(const FqEl& a, const FqEl& b) const;
    FqEl neg(const FqEl& a) const;
    FqEl mul(const FqEl& a, const FqEl& b) const;
    FqEl inv(const FqEl& a) const;
    FqEl pow(FqEl a, Int e) const;

  private:
    FqCtx(Int p, int k);
    Int p_;
    int k_;
    std::vector<Int> mod_;
};

// Dense polynomials over F_q.
using FqPoly = std::vector<FqEl>;

FqPoly fqp_trim(const FqCtx& F, FqPoly a);
int fqp_deg(const FqCtx& F, const FqPoly& a);
FqPoly fqp_add(const FqCtx& F, const FqPoly& a, const FqPoly& b);
FqPoly fqp_sub(const FqCtx& F, const FqPoly& a, const FqPoly& b);
FqPoly fqp_mul(const FqCtx& F, const FqPoly& a, const FqPoly& b);
FqPoly fqp_mod(const FqCtx& F, FqPoly a, const FqPoly& b);
FqPoly fqp_gcd(const FqCtx& F, FqPoly a, FqPoly b);  // monic
FqPoly fqp_monic(const FqCtx& F, const FqPoly& a);
FqEl fqp_eval(const FqCtx& F, const FqPoly& a, const FqEl& x);
FqPoly fqp_derivative(const FqCtx& F, const FqPoly& a);
// x^e mod m
FqPoly fqp_xpow_mod(const FqCtx& F, const Int& e, const FqPoly& m);
FqPoly fqp_pow_mod(const FqCtx& F, FqPoly base, Int e, const FqPoly& m);

// All distinct roots of a in F_q (deterministic splitting).
std::vector<FqEl> fqp_roots(const FqCtx& F, const FqPoly& a);

}  // namespace picard
