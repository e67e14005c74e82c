#include "picard/invariants.hpp"

#include "picard/arith.hpp"
#include "picard/reduction.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace picard {

namespace {

long floordiv(long a, long b) {
    long q = a / b;
    if (a % b != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

// Raw weighted coordinates of a curve, before normalization.
std::array<Rat, 3> raw_point(const NonspecialShort& m) { return tschirnhausen_normal_form(m); }

bool point_is_special(const std::array<Rat, 3>& c) { return c[0] == 0 && c[1] == 0; }

}  // namespace

WeightedPoint normalize_weighted_point(const Rat& c2, const Rat& c3, const Rat& c4) {
    if (c2 == 0 && c3 == 0 && c4 == 0)
        throw std::invalid_argument("normalize_weighted_point: zero point");
    std::array<Rat, 3> c{c2, c3, c4};
    static const long w[3] = {6, 9, 12};
    std::set<Int> primes;
    for (int i = 0; i < 3; ++i)
        if (c[i] != 0)
            for (auto& [p, e] : factor_rat(c[i])) primes.insert(p);
    for (const Int& p : primes) {
        long e = 0;
        bool first = true;
        for (int i = 0; i < 3; ++i) {
            if (c[i] == 0) continue;
            long q = floordiv(val_rat(c[i], p), w[i]);
            e = first ? q : std::min(e, q);
            first = false;
        }
        if (e == 0) continue;
        for (int i = 0; i < 3; ++i)
            if (c[i] != 0) c[i] *= pow_rat(Rat(p), -w[i] * e);
    }
    // Residual unit scaling: nu = -1 flips the sign of the weight-9
    // coordinate only.
    if (c[1] < 0) c[1] = -c[1];
    return {c[0], c[1], c[2]};
}

WeightedPoint weighted_point(const NonspecialShort& m) {
    std::array<Rat, 3> c = raw_point(m);
    return normalize_weighted_point(c[0], c[1], c[2]);
}

QbarClass qbar_class(const NonspecialShort& m) {
    std::array<Rat, 3> c = raw_point(m);
    if (c[0] != 0)
        return {{Rat(1), c[1] * c[1] / (c[0] * c[0] * c[0]), c[2] / (c[0] * c[0])}};
    if (c[1] != 0) return {{Rat(0), Rat(1), c[2] * c[2] * c[2] / pow_rat(c[1], 4)}};
    return {{Rat(0), Rat(0), Rat(1)}};
}

AutType automorphism_type(const NonspecialShort& m) {
    std::array<Rat, 3> c = raw_point(m);
    if (point_is_special(c))
        throw std::invalid_argument("automorphism_type: special curve");
    if (c[1] == 0) return AutType::Z6;  // c2 != 0 here
    if (c[0] == 0 && c[2] == 0) return AutType::Z9;
    return AutType::Z3;
}

IsoResult is_isomorphic_Q(const NonspecialShort& m1, const NonspecialShort& m2) {
    std::array<Rat, 3> t1 = raw_point(m1), t2 = raw_point(m2);
    if (point_is_special(t1) || point_is_special(t2))
        throw std::invalid_argument("is_isomorphic_Q: special curve");
    IsoResult out;
    WeightedPoint w1 = normalize_weighted_point(t1[0], t1[1], t1[2]);
    WeightedPoint w2 = normalize_weighted_point(t2[0], t2[1], t2[2]);
    out.isomorphic = (w1 == w2);
    if (!out.isomorphic) return out;
    // Witness nu with t2 = (nu^-6 t1_2, nu^-9 t1_3, nu^-12 t1_4), recovered
    // from the first nonzero coordinate ratio.
    std::optional<Rat> nu;
    if (t1[1] != 0)
        nu = exact_nth_root(t1[1] / t2[1], 9);
    else if (t1[0] != 0)
        nu = exact_nth_root(t1[0] / t2[0], 6);
    else
        nu = exact_nth_root(t1[2] / t2[2], 12);
    if (nu) {
        bool ok = true;
        static const long w[3] = {6, 9, 12};
        for (int i = 0; i < 3; ++i) {
            if ((t1[i] == 0) != (t2[i] == 0)) ok = false;
            else if (t1[i] != 0 && t2[i] * pow_rat(*nu, w[i]) != t1[i]) ok = false;
        }
        if (ok) out.nu = nu;
    }
    return out;
}

bool is_isomorphic_Qbar(const NonspecialShort& m1, const NonspecialShort& m2) {
    return qbar_class(m1) == qbar_class(m2);
}

bool is_isomorphic_special(const SpecialShort& m1, const SpecialShort& m2) {
    Rat a1 = lead(m1.f) / m1.b, a2 = lead(m2.f) / m2.b;
    BinaryQuartic g1 = BinaryQuartic::from_poly(poly_monic(m1.f));
    BinaryQuartic g2 = BinaryQuartic::from_poly(poly_monic(m2.f));
    // Necessary condition before the transport search: g1 o A = mu g2 forces
    // disc(g1)/disc(g2) = mu^6 / det(A)^12, a sixth power.
    if (nth_power_free_part(disc_binary(g1) / disc_binary(g2), 6).first != 1) return false;
    for (const Transport& T : all_transports(g1, g2))
        if (exact_nth_root(a2 / (a1 * T.mu), 4)) return true;
    return false;
}

std::vector<NonspecialShort> twists_with_good_reduction_outside(const NonspecialShort& m,
                                                                std::vector<Int> S) {
    std::sort(S.begin(), S.end());
    S.erase(std::unique(S.begin(), S.end()), S.end());
    if (!std::binary_search(S.begin(), S.end(), Int(3)))
        throw std::invalid_argument("twists_with_good_reduction_outside: S must contain 3");
    AutType t = automorphism_type(m);
    long n = t == AutType::Z3 ? 3 : (t == AutType::Z6 ? 6 : 9);
    std::array<Rat, 3> c = raw_point(m);
    std::set<Int> P(S.begin(), S.end());
    for (const Int& p : bad_primes(PicardCurve::from_nonspecial_short(m))) P.insert(p);
    SUnitClassSet cls = s_unit_classes({P.begin(), P.end()}, n);
    std::map<WeightedPoint, NonspecialShort> found;
    for (const Rat& lam : cls.representatives) {
        Poly f;
        switch (t) {
            case AutType::Z3:
                f = {pow_rat(lam, 4) * c[2], pow_rat(lam, 3) * c[1], lam * lam * c[0],
                     Rat(0), Rat(1)};
                break;
            case AutType::Z6:
                f = {lam * lam * c[2], Rat(0), lam * c[0], Rat(0), Rat(1)};
                break;
            case AutType::Z9:
                f = {Rat(0), lam * c[1], Rat(0), Rat(0), Rat(1)};
                break;
        }
        NonspecialShort tw{Rat(1), trim(f)};
        std::vector<Int> bp = bad_primes(PicardCurve::from_nonspecial_short(tw));
        bool inside = std::all_of(bp.begin(), bp.end(), [&](const Int& p) {
            return std::binary_search(S.begin(), S.end(), p);
        });
        if (!inside) continue;
        found.emplace(weighted_point(tw), tw);
    }
    std::vector<NonspecialShort> out;
    out.reserve(found.size());
    for (auto& [k, v] : found) out.push_back(v);
    return out;
}

bool is_special(const PicardCurve& c) { return c.kind == CurveKind::special; }

bool is_special(const TernaryQuartic& F) {
    if (F.degree != 4) throw std::invalid_argument("is_special: degree must be 4");
    // Cubic shape b y^3 z = f(x, z): monomials (3,0,1) and (0,i,4-i).
    if (F.get(3, 0, 1) != 0) {
        Poly f(5, Rat(0));
        for (auto& [e, v] : F.coeff) {
            if (v == 0 || e == std::array<int, 3>{3, 0, 1}) continue;
            if (e[0] != 0) throw std::invalid_argument("is_special: unsupported shape");
            f[e[1]] = -v;
        }
        NonspecialShort m{F.get(3, 0, 1), trim(f)};
        return qbar_class(m).is_special();
    }
    // Quartic shape b x^4 = f(y, z): monomials (0,4,0) and (i,0,4-i).
    if (F.get(0, 4, 0) != 0) {
        Poly f(5, Rat(0));
        for (auto& [e, v] : F.coeff) {
            if (v == 0 || e == std::array<int, 3>{0, 4, 0}) continue;
            if (e[1] != 0) throw std::invalid_argument("is_special: unsupported shape");
            f[e[0]] = -v;
        }
        return invariant_I(BinaryQuartic::from_poly(trim(f))) == 0;
    }
    throw std::invalid_argument("is_special: unsupported shape");
}

}  // namespace picard
