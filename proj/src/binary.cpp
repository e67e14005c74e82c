#include "picard/binary.hpp"

namespace picard {

BinaryQuartic BinaryQuartic::from_poly(const Poly& p_in) {
    Poly p = trim(p_in);
    if (deg(p) > 4) throw std::invalid_argument("BinaryQuartic: degree > 4");
    BinaryQuartic f;
    for (int i = 0; i < 5; ++i) f.c[4 - i] = (i < (int)p.size()) ? p[i] : Rat(0);
    return f;
}

Poly BinaryQuartic::to_poly() const {
    Poly p(5);
    for (int i = 0; i < 5; ++i) p[i] = c[4 - i];
    return trim(p);
}

bool BinaryQuartic::is_zero() const {
    for (auto& x : c)
        if (x != 0) return false;
    return true;
}

MobiusMap MobiusMap::compose(const MobiusMap& o) const {
    MobiusMap r;
    r.a = a * o.a + b * o.c;
    r.b = a * o.b + b * o.d;
    r.c = c * o.a + d * o.c;
    r.d = c * o.b + d * o.d;
    return r;
}

MobiusMap MobiusMap::inverse() const {
    Rat dt = det();
    if (dt == 0) throw std::domain_error("MobiusMap::inverse: singular");
    MobiusMap r;
    r.a = d / dt;
    r.b = -b / dt;
    r.c = -c / dt;
    r.d = a / dt;
    return r;
}

bool MobiusMap::is_identity_projective() const {
    return b == 0 && c == 0 && a == d && a != 0;
}

BinaryQuartic form_act(const BinaryQuartic& G, const MobiusMap& A) {
    // Expand G(a x + b z, c x + d z) via the bivariate substitution.
    // Represent binary forms as polynomials in x with z = 1 homogenized:
    // work with the two linear forms L1 = a x + b, L2 = c x + d (z = 1) and
    // multiply power products; degree bookkeeping is exact since total degree 4.
    Poly l1 = {A.b, A.a}, l2 = {A.d, A.c};
    Poly pow1[5], pow2[5];
    pow1[0] = {Rat(1)};
    pow2[0] = {Rat(1)};
    for (int i = 1; i <= 4; ++i) {
        pow1[i] = poly_mul(pow1[i - 1], l1);
        pow2[i] = poly_mul(pow2[i - 1], l2);
    }
    Poly acc;
    for (int i = 0; i <= 4; ++i) {
        // term c[i] * x^{4-i} z^i -> c[i] * L1^{4-i} L2^i
        if (G.c[i] == 0) continue;
        acc = poly_add(acc, poly_scale(poly_mul(pow1[4 - i], pow2[i]), G.c[i]));
    }
    // acc is the dehomogenization; re-homogenize at degree 4.
    BinaryQuartic out;
    for (int i = 0; i < 5; ++i) out.c[4 - i] = (i < (int)acc.size()) ? acc[i] : Rat(0);
    return out;
}

Rat invariant_I(const BinaryQuartic& f) {
    const auto& c = f.c;
    return 12 * c[0] * c[4] - 3 * c[1] * c[3] + c[2] * c[2];
}

Rat invariant_J(const BinaryQuartic& f) {
    const auto& c = f.c;
    return 72 * c[0] * c[2] * c[4] + 9 * c[1] * c[2] * c[3] - 27 * c[0] * c[3] * c[3] -
           27 * c[1] * c[1] * c[4] - 2 * c[2] * c[2] * c[2];
}

Rat disc_binary(const BinaryQuartic& f) {
    if (f.is_zero()) throw std::invalid_argument("disc_binary: zero form");
    Rat I = invariant_I(f), J = invariant_J(f);
    return (4 * I * I * I - J * J) / 27;
}

Poly act_affine(const Poly& f, const Rat& alpha, const Rat& beta) {
    if (alpha == 0) throw std::invalid_argument("act_affine: alpha = 0");
    return poly_scale(poly_compose_linear(f, alpha, beta), pow_rat(alpha, -4));
}

SlopeValue lambda_slope(const Poly& f_in, const Int& p) {
    Poly f = trim(f_in);
    if (deg(f) != 4 || f[4] != 1) throw std::invalid_argument("lambda_slope: monic quartic required");
    SlopeValue out;
    out.infinite = true;
    for (int i = 1; i <= 4; ++i) {
        const Rat& ci = f[4 - i];
        if (ci == 0) continue;
        Rat cand = Rat(val_rat(ci, p)) / i;
        if (out.infinite || cand < out.lambda) {
            out.infinite = false;
            out.lambda = cand;
        }
    }
    return out;
}

namespace {

long floor_rat(const Rat& q) {
    Int f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return mpz_get_si(f.get_mpz_t());
}

// If fbar = (x - abar)^4 over F_p with abar != 0, return an integer lift of abar.
std::optional<Int> fourth_power_shift(const Poly& f, const Int& p) {
    auto red = [&](const Rat& q) {
        Int n = num(q) % p, d = den(q) % p, inv;
        if (!mpz_invert(inv.get_mpz_t(), d.get_mpz_t(), p.get_mpz_t())) return Int(-1);
        Int r = n * inv % p;
        if (r < 0) r += p;
        return r;
    };
    std::vector<Int> cand;
    if (p == 2) {
        cand = {Int(1)};
    } else {
        // coefficient of x^3 in (x - a)^4 is -4a
        Int c3 = red(f[3]);
        Int inv4;
        Int four = 4 % p;
        if (!mpz_invert(inv4.get_mpz_t(), four.get_mpz_t(), p.get_mpz_t())) return std::nullopt;
        Int a = (-c3 * inv4) % p;
        if (a < 0) a += p;
        cand = {a};
    }
    for (const Int& a : cand) {
        if (a % p == 0) continue;
        bool ok = true;
        // compare f with (x - a)^4 coefficientwise mod p
        Poly pw = {Rat(-a), Rat(1)};
        Poly q = poly_mul(poly_mul(pw, pw), poly_mul(pw, pw));
        for (int i = 0; i <= 4 && ok; ++i) {
            Rat diff = (i < (int)f.size() ? f[i] : Rat(0)) - (i < (int)q.size() ? q[i] : Rat(0));
            if (diff != 0 && val_rat(diff, p) < 1) ok = false;
        }
        if (ok) {
            // Symmetric lift keeps the shifted coefficients small.
            Int lift = a;
            if (2 * lift > p) lift -= p;
            return lift;
        }
    }
    return std::nullopt;
}

}  // namespace

std::pair<Poly, MobiusMap> reduce_quartic(const Poly& f_in, const Int& p) {
    Poly f = trim(f_in);
    if (deg(f) != 4 || f[4] != 1) throw std::invalid_argument("reduce_quartic: monic quartic required");
    if (!poly_squarefree(f)) throw std::invalid_argument("reduce_quartic: non-separable input");
    MobiusMap total;  // x -> alpha x + beta accumulated
    for (int guard = 0; guard < 10000; ++guard) {
        SlopeValue sv = lambda_slope(f, p);
        if (sv.infinite) throw std::logic_error("reduce_quartic: degenerate slope");
        long n = floor_rat(sv.lambda);
        if (n != 0) {
            Rat pn = pow_rat(Rat(p), n);
            f = act_affine(f, pn, 0);
            MobiusMap step;
            step.a = pn;
            total = total.compose(step);
            continue;
        }
        // lambda in [0,1); step (b) applies only at lambda = 0.
        if (sv.lambda == 0) {
            auto a = fourth_power_shift(f, p);
            if (a) {
                f = poly_compose_linear(f, 1, Rat(*a));
                MobiusMap step;
                step.b = Rat(*a);
                total = total.compose(step);
                continue;
            }
        }
        break;
    }
    return {f, total};
}

bool is_reduced_sufficient(const Poly& f, const Int& p) {
    SlopeValue sv = lambda_slope(f, p);
    if (sv.infinite) return false;
    if (sv.lambda < 0 || sv.lambda >= 1) return false;
    if (sv.lambda == 0 && fourth_power_shift(f, p)) return false;
    // lambda = 0 with fbar = x^4 cannot occur (that forces lambda > 0).
    return true;
}

Poly hessian_shadow(const Poly& g_in) {
    Poly g = trim(g_in);
    int d = deg(g);
    if (d != 3 && d != 4) throw std::invalid_argument("hessian_shadow: degree must be 3 or 4");
    BinaryQuartic G = BinaryQuartic::from_poly(g);
    if (invariant_I(G) != 0) throw std::invalid_argument("hessian_shadow: invariant I nonzero");
    if (disc_binary(G) == 0) throw std::invalid_argument("hessian_shadow: degenerate (disc = 0)");
    // H = G_yy G_zz - G_yz^2 for G(y, z) homogeneous of degree 4.
    // In coefficients (c0..c4 as in BinaryQuartic with x := y):
    const auto& c = G.c;
    // G_yy = 12 c0 y^2 + 6 c1 y z + 2 c2 z^2
    // G_zz = 2 c2 y^2 + 6 c3 y z + 12 c4 z^2
    // G_yz = 3 c1 y^2 + 4 c2 y z + 3 c3 z^2
    Poly gyy = {2 * c[2], 6 * c[1], 12 * c[0]};
    Poly gzz = {12 * c[4], 6 * c[3], 2 * c[2]};
    Poly gyz = {3 * c[3], 4 * c[2], 3 * c[1]};
    Poly H = poly_sub(poly_mul(gyy, gzz), poly_mul(gyz, gyz));
    // H is the dehomogenization (z = 1) of a degree-4 covariant.
    H = trim(H);
    if (deg(H) < 3) throw std::logic_error("hessian_shadow: unexpected degeneration");
    Poly out = poly_monic(H);
    // The shadow divisor must be disjoint from the root divisor of g; a common
    // root at infinity is impossible (both degree 3 cannot happen), so a gcd
    // check on the finite parts suffices.
    if (deg(poly_gcd(g, out)) > 0)
        throw std::logic_error("hessian_shadow: shadow shares a root with g");
    return out;
}

}  // namespace picard
