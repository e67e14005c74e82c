// Unramifiedness of splitting fields over Q_p, via recursive Newton-polygon
// root counting in the degree-12 unramified extension (12 = lcm(1,2,3,4)).

#include "picard/arith.hpp"
#include "picard/gf.hpp"

namespace picard {

namespace {

struct RingCtx {
    // Z[t]/(m(t), p^M): unramified approximation ring with residue field F_{p^k}.
    std::shared_ptr<const FqCtx> F;
    Int p;
    int k;
    long M;
    Int pM;
    std::vector<Int> mod;  // integer lift of the F_q modulus, monic, ascending
};

using REl = std::vector<Int>;
using RPoly = std::vector<REl>;

Int rmod(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += m;
    return r;
}

REl r_zero(const RingCtx& R) { return REl(R.k, Int(0)); }

bool r_is_zero(const REl& a) {
    for (auto& c : a)
        if (c != 0) return false;
    return true;
}

REl r_add(const RingCtx& R, const REl& a, const REl& b) {
    REl r(R.k);
    for (int i = 0; i < R.k; ++i) r[i] = rmod(a[i] + b[i], R.pM);
    return r;
}

REl r_mul(const RingCtx& R, const REl& a, const REl& b) {
    std::vector<Int> prod(2 * R.k - 1, Int(0));
    for (int i = 0; i < R.k; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < R.k; ++j) prod[i + j] += a[i] * b[j];
    }
    for (int i = 2 * R.k - 2; i >= R.k; --i) {
        if (prod[i] == 0) continue;
        Int c = prod[i];
        for (int j = 0; j < R.k; ++j) prod[i - R.k + j] -= c * R.mod[j];
        prod[i] = 0;
    }
    REl r(R.k);
    for (int i = 0; i < R.k; ++i) r[i] = rmod(prod[i], R.pM);
    return r;
}

REl r_scale_int(const RingCtx& R, const REl& a, const Int& s) {
    REl r(R.k);
    for (int i = 0; i < R.k; ++i) r[i] = rmod(a[i] * s, R.pM);
    return r;
}

long r_val(const RingCtx& R, const REl& a) {
    long best = R.M;
    for (auto& c : a) {
        if (c == 0) continue;
        best = std::min(best, val_int(c, R.p));
        if (best == 0) break;
    }
    return best;
}

REl r_divexact_p(const RingCtx& R, const REl& a, long e) {
    Int pe = pow_int(R.p, (unsigned long)e);
    REl r(R.k);
    for (int i = 0; i < R.k; ++i) r[i] = a[i] / pe;
    return r;
}

FqEl r_residue(const RingCtx& R, const REl& a) {
    FqEl r(R.k);
    for (int i = 0; i < R.k; ++i) r[i] = rmod(a[i], R.p);
    return r;
}

REl r_lift(const RingCtx& R, const FqEl& a) {
    REl r(R.k);
    for (int i = 0; i < R.k; ++i) r[i] = a[i];
    return r;
}

struct PrecisionLoss {};

// Number of distinct roots of h in the valuation ring of the unramified field.
// `prec` is the number of meaningful p-adic digits still carried.
int count_integral_roots(const RingCtx& R, RPoly h, long prec, int depth) {
    if (depth < 0) throw PrecisionLoss{};
    while (!h.empty() && r_is_zero(h.back())) h.pop_back();
    if (h.empty()) throw PrecisionLoss{};
    long content = prec;
    for (auto& c : h) content = std::min(content, r_val(R, c));
    if (content >= prec) throw PrecisionLoss{};
    if (content > 0)
        for (auto& c : h) c = r_divexact_p(R, c, content);
    prec -= content;
    if (prec < 4) throw PrecisionLoss{};

    const FqCtx& F = *R.F;
    FqPoly hbar(h.size());
    for (size_t i = 0; i < h.size(); ++i) hbar[i] = r_residue(R, h[i]);
    hbar = fqp_trim(F, hbar);
    FqPoly dbar = fqp_derivative(F, hbar);

    int count = 0;
    for (const FqEl& u : fqp_roots(F, hbar)) {
        if (!F.is_zero(fqp_eval(F, dbar, u))) {
            ++count;  // simple residual root: Hensel lift
            continue;
        }
        // h(u + p*x), built by Horner over R.
        REl ulift = r_lift(R, u);
        RPoly shifted;  // polynomial in x
        for (int i = (int)h.size() - 1; i >= 0; --i) {
            // shifted = shifted * (u + p*x) + h[i]
            RPoly next(shifted.size() + 1, r_zero(R));
            for (size_t j = 0; j < shifted.size(); ++j) {
                next[j] = r_add(R, next[j], r_mul(R, shifted[j], ulift));
                next[j + 1] = r_add(R, next[j + 1], r_scale_int(R, shifted[j], R.p));
            }
            if (shifted.empty()) next.assign(1, r_zero(R));
            next[0] = r_add(R, next[0], h[i]);
            shifted = next;
        }
        count += count_integral_roots(R, shifted, prec, depth - 1);
    }
    return count;
}

RPoly to_rpoly(const RingCtx& R, const Poly& f) {
    RPoly h(f.size());
    for (size_t i = 0; i < f.size(); ++i) {
        if (!is_integer(f[i])) throw std::logic_error("to_rpoly: non-integral coefficient");
        h[i] = r_zero(R);
        h[i][0] = rmod(num(f[i]), R.pM);
    }
    return h;
}

// Distinct roots of the integral primitive polynomial f inside the full
// unramified field (integral and negative-valuation roots).
int count_unramified_roots(const Poly& f, const Int& p) {
    long v = 0;
    Rat disc = poly_discriminant(f);
    if (disc == 0) throw std::invalid_argument("count_unramified_roots: non-squarefree");
    v = std::abs(val_rat(disc, p));
    if (valuation(disc, p) == Valuation::fin(0)) return deg(f);  // separable reduction

    int d = deg(f);
    for (long M = 2 * v + 24;; M *= 2) {
        RingCtx R;
        R.F = FqCtx::get(p, 12);
        R.p = p;
        R.k = 12;
        R.M = M;
        R.pM = pow_int(p, (unsigned long)M);
        R.mod.assign(R.F->modulus().begin(), R.F->modulus().end());
        try {
            int total = count_integral_roots(R, to_rpoly(R, f), M, (int)v + 4);
            // Negative-valuation roots: x -> 1/x then x -> p*x.
            Poly rev = poly_reverse(f, d);
            Poly revp = poly_compose_linear(rev, Rat(p), 0);
            revp = poly_scale(revp, 1 / poly_content(revp));
            total += count_integral_roots(R, to_rpoly(R, revp), M, (int)v + 4);
            return total;
        } catch (const PrecisionLoss&) {
            if (M > 64 * (2 * v + 24))
                throw std::runtime_error("count_unramified_roots: precision retry exhausted");
        }
    }
}

}  // namespace

bool splitting_field_unramified(const Poly& g_in, const Int& p) {
    Poly g = trim(g_in);
    if (deg(g) < 1) throw std::invalid_argument("splitting_field_unramified: degree < 1");
    if (deg(g) > 4) throw std::invalid_argument("splitting_field_unramified: degree > 4");
    if (!poly_squarefree(g)) throw std::invalid_argument("splitting_field_unramified: not squarefree");
    auto [content, factors] = factor_poly(g);
    (void)content;
    for (const Poly& fq : factors) {
        if (deg(fq) == 1) continue;  // rational root
        Poly f = poly_scale(fq, 1 / poly_content(fq));  // primitive integral
        if (count_unramified_roots(f, p) != deg(f)) return false;
    }
    return true;
}

}  // namespace picard
