#include "picard/models.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace picard {

namespace {

// ---- small binary-form helpers (coefficient index = power of the first
// variable, z-power = degree - index) ----

Poly pad(const Poly& f, int n) {
    Poly r = f;
    r.resize(n, Rat(0));
    return r;
}

// f(x, s z) for a form of the given homogeneous degree.
Poly zscale(const Poly& f_in, const Rat& s, int degree) {
    Poly f = pad(f_in, degree + 1);
    Rat pw = 1;
    for (int i = degree; i >= 0; --i) {
        f[i] *= pw;
        pw *= s;
    }
    return f;
}

Rat coeff_at(const TernaryQuartic& F, int ey, int ex, int ez) { return F.get(ey, ex, ez); }

void set_if(TernaryQuartic& F, int ey, int ex, int ez, const Rat& v) {
    if (v != 0) F.coeff[{ey, ex, ez}] = v;
}

Rat binary_disc(const Poly& f) { return disc_binary(BinaryQuartic::from_poly(f)); }

long vp(const Rat& x, const Int& p) {
    Valuation v = valuation(x, p);
    if (v.infinite) throw std::logic_error("vp: zero value");
    return v.v;
}

// ---- plane forms of the four model shapes ----

TernaryQuartic plane_of(const NonspecialLong& m) {
    TernaryQuartic F;
    F.degree = 4;
    set_if(F, 3, 0, 1, m.a0);
    Poly a1 = pad(m.a1, 2), a2 = pad(m.a2, 3), a4 = pad(m.a4, 5);
    for (int i = 0; i <= 1; ++i) set_if(F, 2, i, 2 - i, a1[i]);
    for (int i = 0; i <= 2; ++i) set_if(F, 1, i, 3 - i, a2[i]);
    for (int i = 0; i <= 4; ++i) set_if(F, 0, i, 4 - i, -a4[i]);
    return F;
}

TernaryQuartic plane_of(const SpecialLong& m) {
    TernaryQuartic F;
    F.degree = 4;
    set_if(F, 0, 4, 0, m.a0);
    set_if(F, 0, 3, 1, m.a1);
    set_if(F, 0, 2, 2, m.a2);
    set_if(F, 0, 1, 3, m.a3);
    Poly a4 = pad(m.a4, 5);
    for (int i = 0; i <= 4; ++i) {
        Rat cur = coeff_at(F, i, 0, 4 - i) - a4[i];
        F.coeff.erase({i, 0, 4 - i});
        set_if(F, i, 0, 4 - i, cur);
    }
    return F;
}

// ---- validation ----

void validate(const NonspecialShort& m) {
    if (m.b == 0) throw std::invalid_argument("NonspecialShort: b = 0");
    if (deg(trim(m.f)) != 4) throw std::invalid_argument("NonspecialShort: quartic f required");
    if (poly_discriminant(m.f) == 0)
        throw std::invalid_argument("NonspecialShort: f not separable");
}

void validate(const SpecialShort& m) {
    if (m.b == 0) throw std::invalid_argument("SpecialShort: b = 0");
    int d = deg(trim(m.f));
    if (d < 3 || d > 4) throw std::invalid_argument("SpecialShort: quartic form f required");
    BinaryQuartic G = BinaryQuartic::from_poly(m.f);
    if (invariant_I(G) != 0) throw std::invalid_argument("SpecialShort: invariant I nonzero");
    if (disc_binary(G) == 0) throw std::invalid_argument("SpecialShort: degenerate f");
}

void validate(const NonspecialLong& m) {
    if (m.a0 == 0) throw std::invalid_argument("NonspecialLong: a0 = 0");
    if (deg(trim(m.a1)) > 1 || deg(trim(m.a2)) > 2 || deg(trim(m.a4)) > 4)
        throw std::invalid_argument("NonspecialLong: degree bounds violated");
    Poly lhs = poly_mul(pad(m.a1, 2), pad(m.a1, 2));
    Poly rhs = poly_scale(pad(m.a2, 3), 3 * m.a0);
    if (trim(poly_sub(lhs, rhs)).size() != 0)
        throw std::invalid_argument("NonspecialLong: relation a1^2 = 3 a0 a2 violated");
    if (disc_ternary(plane_of(m)) == 0)
        throw std::invalid_argument("NonspecialLong: singular equation");
}

void validate(const SpecialLong& m) {
    if (m.a0 == 0) throw std::invalid_argument("SpecialLong: a0 = 0");
    if (deg(trim(m.a4)) > 4) throw std::invalid_argument("SpecialLong: degree bound violated");
    if (8 * m.a0 * m.a2 != 3 * m.a1 * m.a1)
        throw std::invalid_argument("SpecialLong: relation 8 a0 a2 = 3 a1^2 violated");
    if (16 * m.a0 * m.a0 * m.a3 != m.a1 * m.a1 * m.a1)
        throw std::invalid_argument("SpecialLong: relation 16 a0^2 a3 = a1^3 violated");
    if (disc_ternary(plane_of(m)) == 0)
        throw std::invalid_argument("SpecialLong: singular equation");
}

// A nonspecial-shaped equation still defines a special curve exactly when its
// normal form is y^3 = x^4 + c4.
CurveKind kind_of(const NonspecialShort& m) {
    std::array<Rat, 3> c = tschirnhausen_normal_form(m);
    return (c[0] == 0 && c[1] == 0) ? CurveKind::special : CurveKind::nonspecial;
}

}  // namespace

PicardCurve PicardCurve::from_nonspecial_short(const NonspecialShort& m) {
    validate(m);
    PicardCurve c;
    c.kind = kind_of(m);
    c.model = m;
    return c;
}

PicardCurve PicardCurve::from_nonspecial_long(const NonspecialLong& m) {
    validate(m);
    PicardCurve c;
    c.kind = kind_of(long_to_short_nonspecial(m));
    c.model = m;
    return c;
}

PicardCurve PicardCurve::from_special_short(const SpecialShort& m) {
    validate(m);
    PicardCurve c;
    c.kind = CurveKind::special;
    c.model = m;
    return c;
}

PicardCurve PicardCurve::from_special_long(const SpecialLong& m) {
    validate(m);
    PicardCurve c;
    c.kind = CurveKind::special;
    c.model = m;
    return c;
}

TernaryQuartic PicardCurve::plane() const {
    return std::visit(
        [](const auto& m) -> TernaryQuartic {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, NonspecialShort>)
                return plane_nonspecial_short(m.b, m.f);
            else if constexpr (std::is_same_v<T, SpecialShort>)
                return plane_special_short(m.b, m.f);
            else
                return plane_of(m);
        },
        model);
}

Rat PicardCurve::plane_disc() const { return disc_ternary(plane()); }

NonspecialShort long_to_short_nonspecial(const NonspecialLong& m) {
    validate(m);
    // y -> y - a1/(3 a0): the y^2 and y terms cancel by the relation, and the
    // constant contribution -a1^3/(27 a0^2) moves to the quartic side.
    Poly a1 = pad(m.a1, 2);
    Poly cube = pad(poly_mul(poly_mul(a1, a1), a1), 4);  // degree-3 form; times z below
    Poly f = pad(m.a4, 5);
    Rat denom = 27 * m.a0 * m.a0;
    for (int i = 0; i <= 3; ++i) f[i] += cube[i] / denom;  // cubic * z is the z-fill
    NonspecialShort out{m.a0, trim(f)};
    validate(out);
    return out;
}

SpecialShort long_to_short_special(const SpecialLong& m) {
    validate(m);
    // x -> x - a1 z/(4 a0): cubic/quadratic/linear x-terms cancel by the two
    // relations; the constant contribution -a1^4 z^4/(256 a0^3) moves over.
    Poly f = pad(m.a4, 5);
    f[0] += pow_rat(m.a1, 4) / (256 * pow_rat(m.a0, 3));
    SpecialShort out{m.a0, trim(f)};
    validate(out);
    return out;
}

std::array<Rat, 3> tschirnhausen_normal_form(const NonspecialShort& m) {
    validate(m);
    Rat c0 = m.f[4];
    Rat u = m.b * c0 * c0, v = m.b * c0 * c0 * c0;
    // b (v y)^3 = f(u x): dividing by b v^3 makes the right side monic, since
    // both c0 u^4 and b v^3 equal b^4 c0^9.
    Poly g = poly_scale(poly_compose_linear(m.f, u, 0), 1 / (m.b * v * v * v));
    if (g[4] != 1) throw std::logic_error("tschirnhausen_normal_form: monicization failed");
    g = poly_compose_linear(g, 1, -g[3] / 4);  // depress the cubic term
    return {g[2], g[1], g[0]};
}

std::pair<TernaryQuartic, LinearChange3> normalize_point_tangent(
    const TernaryQuartic& F, const std::array<Int, 3>& P) {
    if (F.degree != 4) throw std::invalid_argument("normalize_point_tangent: quartic required");
    for (auto& [e, c] : F.coeff)
        if (!is_integer(c))
            throw std::invalid_argument("normalize_point_tangent: integral form required");
    Int g01, g;
    mpz_gcd(g01.get_mpz_t(), P[0].get_mpz_t(), P[1].get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g01.get_mpz_t(), P[2].get_mpz_t());
    if (g != 1) throw std::invalid_argument("normalize_point_tangent: P not primitive");
    // On-curve check.
    {
        Rat val = 0;
        for (auto& [e, c] : F.coeff) {
            Rat t = c;
            for (int i = 0; i < e[0]; ++i) t *= Rat(P[0]);
            for (int i = 0; i < e[1]; ++i) t *= Rat(P[1]);
            for (int i = 0; i < e[2]; ++i) t *= Rat(P[2]);
            val += t;
        }
        if (val != 0) throw std::invalid_argument("normalize_point_tangent: P not on curve");
    }
    // Unimodular U with first column P.
    LinearChange3 U = LinearChange3::identity();
    if (P[0] == 0 && P[1] == 0) {
        // P = (0, 0, +-1): a coordinate rotation does the job.
        U.m = {{{Rat(0), Rat(1), Rat(0)}, {Rat(0), Rat(0), Rat(1)}, {Rat(P[2]), Rat(0), Rat(0)}}};
    } else {
        Int u, v;
        mpz_gcdext(g01.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), P[0].get_mpz_t(),
                   P[1].get_mpz_t());
        Int s, t, one;
        mpz_gcdext(one.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), g01.get_mpz_t(),
                   P[2].get_mpz_t());
        Int q0 = P[0] / g01, q1 = P[1] / g01;
        U.m = {{{Rat(P[0]), Rat(-v), Rat(-t * q0)},
                {Rat(P[1]), Rat(u), Rat(-t * q1)},
                {Rat(P[2]), Rat(0), Rat(s)}}};
    }
    Rat dU = U.det();
    if (dU != 1 && dU != -1) throw std::logic_error("normalize_point_tangent: completion failed");
    TernaryQuartic F1 = transform(F, U);
    // P is now (1:0:0); the tangent there is gamma x + delta z with
    // gamma = [y^3 x] F1, delta = [y^3 z] F1 (the y^4 term vanished).
    Rat gq = coeff_at(F1, 3, 1, 0), dq = coeff_at(F1, 3, 0, 1);
    if (gq == 0 && dq == 0)
        throw std::invalid_argument("normalize_point_tangent: singular point");
    Int gi = num(gq), di = num(dq), gg;
    mpz_gcd(gg.get_mpz_t(), gi.get_mpz_t(), di.get_mpz_t());
    gi /= gg;
    di /= gg;
    Int a, b, one;
    mpz_gcdext(one.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t(), gi.get_mpz_t(), di.get_mpz_t());
    // x -> delta x + a z, z -> -gamma x + b z sends the tangent to z = 0.
    LinearChange3 T2 = LinearChange3::identity();
    T2.m[1][1] = Rat(di);
    T2.m[1][2] = Rat(a);
    T2.m[2][1] = Rat(-gi);
    T2.m[2][2] = Rat(b);
    LinearChange3 T = U.mul(T2);
    TernaryQuartic out = transform(F, T);
    if (coeff_at(out, 4, 0, 0) != 0 || coeff_at(out, 3, 1, 0) != 0 ||
        coeff_at(out, 3, 0, 1) == 0)
        throw std::logic_error("normalize_point_tangent: normalization failed");
    return {out, T};
}

// ======================= minimization machinery =======================

namespace {

// --- cheap searches on short models: state (b, f) over integers ---

struct ShortState {
    Rat b;
    Poly f;  // padded to 5 coefficients
};

std::string short_key(const ShortState& s) {
    std::ostringstream os;
    os << s.b;
    for (auto& c : s.f) os << "|" << c;
    return os.str();
}

// Joint p-content extraction plus the y- resp. x-rescale reduction.
ShortState short_normalize(ShortState s, const Int& p, int scale_pow) {
    long cb = vp(s.b, p);
    long cf = 1000;
    for (auto& c : s.f)
        if (c != 0) cf = std::min(cf, vp(c, p));
    long k = std::min(cb, cf);
    if (k != 0) {
        Rat pk = pow_rat(Rat(p), k);
        s.b /= pk;
        for (auto& c : s.f) c /= pk;
    }
    while (vp(s.b, p) >= scale_pow) s.b /= pow_rat(Rat(p), scale_pow);
    while (vp(s.b, p) < 0) s.b *= pow_rat(Rat(p), scale_pow);
    if (s.b < 0) {
        s.b = -s.b;
        for (auto& c : s.f) c = -c;
    }
    return s;
}

std::vector<ShortState> short_moves(const ShortState& s, const Int& p, int scale_pow) {
    std::vector<ShortState> out;
    long pl = mpz_get_si(p.get_mpz_t());
    for (long j = 0; j < pl; ++j)
        out.push_back({s.b, pad(poly_compose_linear(s.f, Rat(p), Rat(j)), 5)});
    for (long j = 1; j < pl; ++j)
        out.push_back({s.b, pad(poly_compose_linear(s.f, Rat(1), Rat(j)), 5)});
    // z -> p z: in the nonspecial shape the b y^3 z term carries one z, so b
    // picks up a factor p there; the special b x^4 term has none.
    out.push_back({scale_pow == 3 ? s.b * Rat(p) : s.b, zscale(s.f, Rat(p), 4)});
    Rat pw = pow_rat(Rat(p), scale_pow);
    out.push_back({s.b * pw, s.f});
    {
        ShortState t = s;
        for (auto& c : t.f) c *= pw;
        out.push_back(t);
    }
    return out;
}

template <typename Value>
ShortState short_search(ShortState start, const Int& p, int depth, int scale_pow,
                        Value&& value) {
    start = short_normalize(std::move(start), p, scale_pow);
    std::set<std::string> seen{short_key(start)};
    ShortState best = start;
    long best_v = value(best);
    std::deque<std::pair<ShortState, int>> queue{{start, 0}};
    while (!queue.empty()) {
        auto [cur, d] = queue.front();
        queue.pop_front();
        if (d >= depth) continue;
        for (ShortState& nxt : short_moves(cur, p, scale_pow)) {
            ShortState n = short_normalize(std::move(nxt), p, scale_pow);
            if (!seen.insert(short_key(n)).second) continue;
            long v = value(n);
            if (v < best_v) {
                best_v = v;
                best = n;
            }
            queue.push_back({n, d + 1});
        }
    }
    return best;
}

// --- ternary search for the long-model families ---

std::string form_key(const TernaryQuartic& F) {
    std::ostringstream os;
    for (auto& [e, c] : F.coeff)
        if (c != 0) os << e[0] << e[1] << e[2] << ":" << c << ";";
    return os.str();
}

TernaryQuartic form_normalize(TernaryQuartic F, const Int& p) {
    long m = 1000;
    for (auto it = F.coeff.begin(); it != F.coeff.end();)
        it = (it->second == 0) ? F.coeff.erase(it) : std::next(it);
    for (auto& [e, c] : F.coeff) m = std::min(m, vp(c, p));
    if (m != 0) {
        Rat pm = pow_rat(Rat(p), m);
        for (auto& [e, c] : F.coeff) c /= pm;
    }
    if (!F.coeff.empty() && F.coeff.begin()->second < 0)
        for (auto& [e, c] : F.coeff) c = -c;
    return F;
}

// Upper-triangular move set for the flag structure of each family.
// Variable indices: 0 = y, 1 = x, 2 = z.  `shears[v]` lists the variables
// whose multiples may be added to v.
std::vector<LinearChange3> family_moves(const Int& p,
                                        const std::vector<std::vector<int>>& shears) {
    std::vector<LinearChange3> out;
    long pl = mpz_get_si(p.get_mpz_t());
    for (int v = 0; v < 3; ++v) {
        std::vector<int> srcs = shears[v];
        {
            LinearChange3 T = LinearChange3::identity();
            T.m[v][v] = Rat(p);
            out.push_back(T);  // pure scale
        }
        for (int s : srcs) {
            for (long j = 1; j < pl; ++j) {
                LinearChange3 T = LinearChange3::identity();
                T.m[v][v] = Rat(p);
                T.m[v][s] = Rat(j);
                out.push_back(T);  // scale with shift
                LinearChange3 S = LinearChange3::identity();
                S.m[v][s] = Rat(j);
                out.push_back(S);  // plain shear
            }
        }
    }
    return out;
}

TernaryQuartic ternary_search(const TernaryQuartic& start_in, const Int& p, int depth,
                              const std::vector<std::vector<int>>& shears) {
    TernaryQuartic start = form_normalize(start_in, p);
    auto value = [&](const TernaryQuartic& F) { return vp(disc_ternary(F), p); };
    std::vector<LinearChange3> moves = family_moves(p, shears);
    std::set<std::string> seen{form_key(start)};
    TernaryQuartic best = start;
    long best_v = value(start);
    std::deque<std::pair<TernaryQuartic, int>> queue{{start, 0}};
    size_t guard = 0;
    while (!queue.empty() && guard < 40000) {
        auto [cur, d] = queue.front();
        queue.pop_front();
        if (d >= depth) continue;
        for (const LinearChange3& T : moves) {
            ++guard;
            TernaryQuartic n = form_normalize(transform(cur, T), p);
            if (!seen.insert(form_key(n)).second) continue;
            long v = value(n);
            if (v < best_v) {
                best_v = v;
                best = n;
            }
            queue.push_back({n, d + 1});
        }
    }
    return best;
}

// --- parsing plane forms back into model shapes ---

std::optional<PicardCurve> parse_nonspecial(const TernaryQuartic& F) {
    Rat a0 = coeff_at(F, 3, 0, 1);
    if (a0 == 0) return std::nullopt;
    Poly a1(2, Rat(0)), a2(3, Rat(0)), a4(5, Rat(0));
    for (auto& [e, c] : F.coeff) {
        if (c == 0) continue;
        if (e == std::array<int, 3>{3, 0, 1}) continue;
        if (e[0] == 2 && e[2] >= 1)
            a1[e[1]] = c;
        else if (e[0] == 1 && e[2] >= 1)
            a2[e[1]] = c;
        else if (e[0] == 0)
            a4[e[1]] = -c;
        else
            return std::nullopt;  // y^4, y^3 x, or y^2 x^2 present
    }
    if (trim(a1).empty() && trim(a2).empty()) {
        if (a4[4] == 0) return std::nullopt;
        return PicardCurve::from_nonspecial_short({a0, trim(a4)});
    }
    return PicardCurve::from_nonspecial_long({a0, trim(a1), trim(a2), trim(a4)});
}

std::optional<PicardCurve> parse_special(const TernaryQuartic& F) {
    Rat a0 = coeff_at(F, 0, 4, 0);
    if (a0 == 0) return std::nullopt;
    Rat a1 = coeff_at(F, 0, 3, 1), a2 = coeff_at(F, 0, 2, 2), a3 = coeff_at(F, 0, 1, 3);
    Poly a4(5, Rat(0));
    for (auto& [e, c] : F.coeff) {
        if (c == 0) continue;
        if (e[1] == 0)
            a4[e[0]] = -c;
        else if (e[0] != 0)
            return std::nullopt;  // mixed x^i y^j term
    }
    if (a1 == 0 && a2 == 0 && a3 == 0) return PicardCurve::from_special_short({a0, trim(a4)});
    return PicardCurve::from_special_long({a0, a1, a2, a3, trim(a4)});
}

// Clear denominators of a model state.
template <typename State>
State clear_denominators(State s) {
    Int l = den(s.b);
    for (auto& c : s.f) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den(c).get_mpz_t());
    s.b *= Rat(l);
    for (auto& c : s.f) c *= Rat(l);
    return s;
}

TernaryQuartic clear_denominators_form(TernaryQuartic F) {
    Int l = 1;
    for (auto& [e, c] : F.coeff) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den(c).get_mpz_t());
    for (auto& [e, c] : F.coeff) c *= Rat(l);
    return F;
}

}  // namespace

namespace {

PicardCurve minimize_pass(const PicardCurve& c, const Int& p, int depth) {
    long v_before = vp(c.plane_disc(), p);
    // Changes of model shift the exponent by 36k - 27l, a multiple of 9, and
    // integral models have nonnegative exponent, so v < 9 is already minimal.
    if (v_before < 9) return c;

    bool special_shape = std::holds_alternative<SpecialShort>(c.model) ||
                         std::holds_alternative<SpecialLong>(c.model);
    PicardCurve out = c;

    if (!special_shape && p != 3 && std::holds_alternative<NonspecialShort>(c.model)) {
        const auto& m = std::get<NonspecialShort>(c.model);
        ShortState s = clear_denominators(ShortState{m.b, pad(m.f, 5)});
        auto value = [&](const ShortState& st) {
            return vp(disc_short_nonspecial(st.b, st.f), p);
        };
        ShortState best = short_search(s, p, depth, 3, value);
        if (value(best) < v_before) out = PicardCurve::from_nonspecial_short({best.b, trim(best.f)});
    } else if (special_shape && p != 2 && std::holds_alternative<SpecialShort>(c.model)) {
        const auto& m = std::get<SpecialShort>(c.model);
        ShortState s = clear_denominators(ShortState{m.b, pad(m.f, 5)});
        auto value = [&](const ShortState& st) {
            Rat d = binary_disc(st.f);
            return 16 * vp(Rat(2), p) + 9 * vp(st.b, p) + 3 * vp(d, p);
        };
        ShortState best = short_search(s, p, depth, 4, value);
        if (value(best) < v_before) out = PicardCurve::from_special_short({best.b, trim(best.f)});
    } else {
        // Long-family ternary search (also the path for long-model inputs and
        // for the residue characteristics excluded by the short theorems).
        std::vector<std::vector<int>> shears =
            special_shape ? std::vector<std::vector<int>>{{2}, {2}, {}}
                          : std::vector<std::vector<int>>{{1, 2}, {2}, {}};
        TernaryQuartic F = clear_denominators_form(c.plane());
        TernaryQuartic best = ternary_search(F, p, depth, shears);
        if (vp(disc_ternary(best), p) < v_before) {
            std::optional<PicardCurve> parsed =
                special_shape ? parse_special(best) : parse_nonspecial(best);
            if (!parsed) throw std::logic_error("minimize_at_prime: shape lost in search");
            out = *parsed;
        }
    }
    if (vp(out.plane_disc(), p) > v_before)
        throw std::logic_error("minimize_at_prime: valuation increased");
    return out;
}

}  // namespace

PicardCurve minimize_at_prime(const PicardCurve& c, const Int& p, int depth) {
    // Iterate the bounded search to a fixed point so a further application
    // cannot improve the result.
    PicardCurve cur = c;
    long v = vp(cur.plane_disc(), p);
    for (;;) {
        PicardCurve nxt = minimize_pass(cur, p, depth);
        long vn = vp(nxt.plane_disc(), p);
        if (vn >= v) return cur;
        cur = nxt;
        v = vn;
    }
}

std::optional<PicardCurve> curve_from_plane(const TernaryQuartic& F) {
    if (auto c = parse_nonspecial(F)) return c;
    return parse_special(F);
}

MinimalModelReport global_minimal_model(const PicardCurve& c, int depth) {
    MinimalModelReport rep;
    rep.curve = c;
    Rat d0 = c.plane_disc();
    std::vector<Int> primes;
    for (auto& [p, e] : factor_rat(d0))
        if (e > 0) primes.push_back(p);
    std::sort(primes.begin(), primes.end());
    for (const Int& p : primes) rep.curve = minimize_at_prime(rep.curve, p, depth);
    rep.disc = rep.curve.plane_disc();
    for (const Int& p : primes) {
        PrimeExponent pe;
        pe.p = p;
        pe.e = vp(rep.disc, p);
        // Legal moves change the exponent by multiples of 9 (36 k - 27 l), so
        // anything below 9 is provably minimal.
        pe.certified = pe.e < 9;
        rep.exponents.push_back(pe);
    }
    return rep;
}

long traceless_minimum_exponent(const NonspecialShort& m, const Int& p) {
    validate(m);
    // Depress to the traceless representative (unique up to diagonal moves).
    Poly f = pad(poly_compose_linear(m.f, 1, -m.f[3] / (4 * m.f[4])), 5);
    if (f[3] != 0) throw std::logic_error("traceless_minimum_exponent: depression failed");
    long vb = vp(m.b, p);
    long vD = vp(poly_discriminant(f), p);
    long v4 = vp(f[4], p);
    long base = (p == 3 ? 9 : 0);
    long best = -1;
    for (long a = -12; a <= 12; ++a)
        for (long bexp = -12; bexp <= 12; ++bexp)
            for (long g = -12; g <= 12; ++g) {
                if (vb + 3 * bexp + g < 0) continue;
                bool ok = true;
                for (int i = 0; i <= 4 && ok; ++i) {
                    if (f[i] == 0) continue;
                    if (vp(f[i], p) + i * a + g < 0) ok = false;
                }
                if (!ok) continue;
                long V = base + 12 * (vb + 3 * bexp + g) + 3 * (v4 + 4 * a + g) +
                         2 * (vD + 12 * a + 6 * g);
                if (best < 0 || V < best) best = V;
            }
    return best;
}

}  // namespace picard
