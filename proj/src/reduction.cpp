#include "picard/reduction.hpp"

#include <algorithm>
#include <set>

namespace picard {

namespace {

// Integer model of a monic polynomial with the same splitting field:
// D^deg * g(y / D) for D the common denominator.
Poly integral_same_splitting_field(const Poly& g_in) {
    Poly g = trim(g_in);
    int d = deg(g);
    Int D = 1;
    for (auto& c : g) mpz_lcm(D.get_mpz_t(), D.get_mpz_t(), den(c).get_mpz_t());
    Poly out(g.size());
    Rat pw = 1;
    for (int i = d; i >= 0; --i) {
        out[i] = g[i] * pw;
        pw *= Rat(D);
    }
    return out;
}

}  // namespace

std::pair<Rat, Poly> reduced_short_weierstrass(const NonspecialShort& m, const Int& p) {
    if (p == 3) throw std::invalid_argument("reduced_short_weierstrass: p = 3 unsupported");
    Rat c0 = lead(m.f);
    if (deg(trim(m.f)) != 4 || c0 == 0 || m.b == 0 || poly_discriminant(m.f) == 0)
        throw std::invalid_argument("reduced_short_weierstrass: invalid model");
    Poly f0 = poly_monic(m.f);
    Rat c = c0 / m.b;
    auto [fr, A] = reduce_quartic(f0, p);
    // fr = alpha^{-4} f0(alpha x + beta): the scalar picks up alpha^4.
    c *= pow_rat(A.a, 4);
    long v = val_rat(c, p);
    long r = ((v % 3) + 3) % 3;  // target exponent in [0, 2]
    if (r != v) c *= pow_rat(Rat(p), r - v);  // absorb cubes into y
    return {c, fr};
}

ReductionVerdict has_good_reduction_nonspecial(const NonspecialShort& m, const Int& p) {
    ReductionVerdict out;
    out.p = p;
    if (p == 3) {
        out.good = false;
        out.reason = ReasonCode::odd_3_valuation;
        return out;
    }
    auto [c, f0] = reduced_short_weierstrass(m, p);
    if (val_rat(c, p) != 0) {
        out.good = false;
        out.reason = ReasonCode::c_valuation;
        return out;
    }
    out.good = (val_rat(poly_discriminant(f0), p) == 0);
    out.reason = ReasonCode::disc_unit;
    return out;
}

bool good_reduction_marked_line(const Poly& f, const Int& p) {
    if (poly_discriminant(f) == 0)
        throw std::invalid_argument("good_reduction_marked_line: inseparable input");
    Poly fr = reduce_quartic(f, p).first;
    return val_rat(poly_discriminant(fr), p) == 0;
}

ReductionVerdict has_good_reduction_special(const SpecialShort& m, const Int& p) {
    ReductionVerdict out;
    out.p = p;
    out.good = false;
    if (p == 2) {
        out.reason = ReasonCode::wild_p2_special;
        return out;
    }
    if (p == 3) {
        out.reason = ReasonCode::odd_3_valuation;
        return out;
    }
    Rat a = lead(m.f) / m.b;
    if (val_rat(a, p) % 4 != 0) {
        out.reason = ReasonCode::a_mod_4;
        return out;
    }
    Poly g = integral_same_splitting_field(poly_monic(m.f));
    if (!splitting_field_unramified(g, p)) {
        out.reason = ReasonCode::ramified_splitting_field;
        return out;
    }
    out.good = true;
    out.reason = ReasonCode::disc_unit;
    return out;
}

std::vector<Int> bad_primes(const PicardCurve& c) {
    std::set<Int> bad{Int(3)};
    if (c.kind == CurveKind::special) bad.insert(2);
    // The good-reduction criteria reduce the model internally, so any plane
    // discriminant works as a candidate set: its support contains the
    // minimal one, and good primes are simply not added.
    const auto& model = c.model;
    bool special_shape = std::holds_alternative<SpecialShort>(model) ||
                         std::holds_alternative<SpecialLong>(model);
    NonspecialShort ns;
    SpecialShort ss;
    if (std::holds_alternative<NonspecialShort>(model))
        ns = std::get<NonspecialShort>(model);
    else if (std::holds_alternative<NonspecialLong>(model))
        ns = long_to_short_nonspecial(std::get<NonspecialLong>(model));
    else if (std::holds_alternative<SpecialShort>(model))
        ss = std::get<SpecialShort>(model);
    else
        ss = long_to_short_special(std::get<SpecialLong>(model));
    for (const auto& [p, e] : factor_rat(c.plane_disc())) {
        if (bad.count(p)) continue;
        ReductionVerdict v = special_shape ? has_good_reduction_special(ss, p)
                                           : has_good_reduction_nonspecial(ns, p);
        if (!v.good) bad.insert(p);
    }
    return {bad.begin(), bad.end()};
}

long special_f3_family(const Rat& a, const Rat& b, const Rat& cprime) {
    (void)cprime;
    if (a == 0 || b == 0) throw std::invalid_argument("special_f3_family: zero parameter");
    if (val_rat(b, 3) != 0)
        throw std::invalid_argument("special_f3_family: 3 must not divide b");
    long v = val_rat(a, 3);
    if (v < 0 || v > 3)
        throw std::invalid_argument("special_f3_family: need 0 <= v_3(a) <= 3");
    return (v == 1 || v == 2) ? 4 : 6;
}

std::vector<ConductorViolation> validate_conductor_bounds(
    CurveKind kind, const std::map<Int, long>& f_exponents) {
    std::vector<ConductorViolation> out;
    for (auto& [p, e] : f_exponents) {
        if (e < 0) {
            out.push_back({p, "conductor exponent must be nonnegative"});
            continue;
        }
        if (p == 3 && e < 4) out.push_back({p, "f_3 >= 4 is required for every curve"});
        if (kind == CurveKind::special) {
            if (p == 2 && e < 6) out.push_back({p, "f_2 >= 6 is required for special curves"});
            if (p >= 5 && e != 0 && e != 4 && e != 6)
                out.push_back({p, "f_p of a special curve at p >= 5 must be 0, 4 or 6"});
        }
    }
    if (kind == CurveKind::special && f_exponents.count(2) && f_exponents.count(3)) {
        Rat N = 1;
        bool well_formed = true;
        for (auto& [p, e] : f_exponents) {
            if (e < 0) well_formed = false;
            else N *= pow_rat(Rat(p), e);
        }
        Rat floor = pow_rat(Rat(2), 6) * pow_rat(Rat(3), 6);
        if (well_formed && N < floor)
            out.push_back({Int(0), "special conductor must be at least 2^6 3^6"});
    }
    return out;
}

}  // namespace picard
