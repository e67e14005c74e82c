#include "picard/ternary.hpp"

#include "detmod.hpp"

#include <algorithm>

namespace picard {

Rat TernaryForm::get(int ey, int ex, int ez) const {
    auto it = coeff.find({ey, ex, ez});
    return it == coeff.end() ? Rat(0) : it->second;
}

void TernaryForm::set(int ey, int ex, int ez, const Rat& v) {
    if (ey + ex + ez != degree)
        throw std::invalid_argument("TernaryForm::set: exponent degree mismatch");
    if (v == 0)
        coeff.erase({ey, ex, ez});
    else
        coeff[{ey, ex, ez}] = v;
}

bool TernaryForm::is_zero() const {
    for (auto& [e, c] : coeff)
        if (c != 0) return false;
    return true;
}

TernaryForm TernaryForm::partial(int var) const {
    TernaryForm r;
    r.degree = degree - 1;
    for (auto& [e, c] : coeff) {
        if (e[var] == 0) continue;
        std::array<int, 3> e2 = e;
        e2[var] -= 1;
        r.coeff[e2] += c * e[var];
    }
    for (auto it = r.coeff.begin(); it != r.coeff.end();)
        it = (it->second == 0) ? r.coeff.erase(it) : std::next(it);
    return r;
}

LinearChange3 LinearChange3::identity() {
    LinearChange3 t;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) t.m[i][j] = (i == j) ? 1 : 0;
    return t;
}

Rat LinearChange3::det() const {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

LinearChange3 LinearChange3::mul(const LinearChange3& o) const {
    LinearChange3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            r.m[i][j] = 0;
            for (int k = 0; k < 3; ++k) r.m[i][j] += m[i][k] * o.m[k][j];
        }
    return r;
}

namespace {

using Tri = std::map<std::array<int, 3>, Rat>;  // not necessarily homogeneous

Tri tri_mul(const Tri& a, const Tri& b) {
    Tri r;
    for (auto& [ea, ca] : a)
        for (auto& [eb, cb] : b)
            r[{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}] += ca * cb;
    return r;
}

}  // namespace

TernaryForm transform(const TernaryForm& F, const LinearChange3& T) {
    // Linear images of the three variables.
    std::array<Tri, 3> lin;
    for (int v = 0; v < 3; ++v) {
        for (int j = 0; j < 3; ++j) {
            if (T.m[v][j] == 0) continue;
            std::array<int, 3> e{0, 0, 0};
            e[j] = 1;
            lin[v][e] += T.m[v][j];
        }
        if (lin[v].empty()) lin[v][{0, 0, 0}] = 0;
    }
    TernaryForm out;
    out.degree = F.degree;
    for (auto& [e, c] : F.coeff) {
        Tri term;
        term[{0, 0, 0}] = c;
        for (int v = 0; v < 3; ++v)
            for (int k = 0; k < e[v]; ++k) term = tri_mul(term, lin[v]);
        for (auto& [em, cm] : term)
            if (cm != 0) out.coeff[em] += cm;
    }
    for (auto it = out.coeff.begin(); it != out.coeff.end();)
        it = (it->second == 0) ? out.coeff.erase(it) : std::next(it);
    return out;
}

namespace {

// Monomials of total degree t, x-power priority then y then z, descending.
// Exponents stored as (ey, ex, ez) to match TernaryForm keys.
std::vector<std::array<int, 3>> monomials(int t) {
    std::vector<std::array<int, 3>> out;
    for (int ex = t; ex >= 0; --ex)
        for (int ey = t - ex; ey >= 0; --ey) out.push_back({ey, ex, t - ex - ey});
    return out;
}

struct MacaulayFailure {};

// Res attempt for primitive integer forms; nullopt when the extraneous minor
// vanishes for this coordinate choice.
std::optional<Rat> macaulay_try(const std::array<TernaryForm, 3>& F) {
    int d1 = F[1].degree, d0 = F[0].degree, d2 = F[2].degree;
    // Row selection priorities: x with F[1]... the forms are passed as
    // (Fy, Fx, Fz) mapped to the variable whose power is reduced:
    // index 0 <-> y, 1 <-> x, 2 <-> z.
    int t = d0 + d1 + d2 - 2;
    auto mons = monomials(t);
    int n = (int)mons.size();
    std::map<std::array<int, 3>, int> col_of;
    for (int i = 0; i < n; ++i) col_of[mons[i]] = i;

    auto reduced_count = [&](const std::array<int, 3>& e) {
        int c = 0;
        if (e[1] >= d1) ++c;  // x
        if (e[0] >= d0) ++c;  // y
        if (e[2] >= d2) ++c;  // z
        return c;
    };

    std::vector<std::vector<Int>> M(n, std::vector<Int>(n, Int(0)));
    std::vector<int> nonreduced_idx;
    for (int i = 0; i < n; ++i) {
        const auto& e = mons[i];
        int which;  // which form multiplies this row
        std::array<int, 3> shift = e;
        if (e[1] >= d1) {
            which = 1;
            shift[1] -= d1;
        } else if (e[0] >= d0) {
            which = 0;
            shift[0] -= d0;
        } else {
            which = 2;
            shift[2] -= d2;
        }
        for (auto& [me, c] : F[which].coeff) {
            std::array<int, 3> tgt = {me[0] + shift[0], me[1] + shift[1], me[2] + shift[2]};
            if (!is_integer(c)) throw std::logic_error("macaulay_try: non-integral form");
            M[i][col_of.at(tgt)] = num(c);
        }
        if (reduced_count(e) >= 2) nonreduced_idx.push_back(i);
    }

    std::vector<std::vector<Int>> Mp(nonreduced_idx.size(),
                                     std::vector<Int>(nonreduced_idx.size()));
    for (size_t i = 0; i < nonreduced_idx.size(); ++i)
        for (size_t j = 0; j < nonreduced_idx.size(); ++j)
            Mp[i][j] = M[nonreduced_idx[i]][nonreduced_idx[j]];

    Int minor = detail::det_integer_matrix(Mp);
    if (minor == 0) return std::nullopt;
    Int full = detail::det_integer_matrix(M);
    Rat res = make_rat(full, minor);
    return res;
}

// Deterministic unimodular retries (shears), det = 1.
LinearChange3 retry_shear(int k) {
    LinearChange3 T = LinearChange3::identity();
    switch (k % 4) {
        case 0: T.m[0][1] = 1 + k / 4; break;  // y -> y + c x
        case 1: T.m[1][2] = 1 + k / 4; break;  // x -> x + c z
        case 2: T.m[2][0] = 1 + k / 4; break;  // z -> z + c y
        case 3:
            T.m[0][2] = 1 + k / 4;             // y -> y + c z
            T.m[1][0] = 1;                     // x -> x + y
            break;
    }
    return T;
}

}  // namespace

Rat macaulay_resultant(const TernaryForm& F1, const TernaryForm& F2, const TernaryForm& F3) {
    std::array<TernaryForm, 3> F = {F1, F2, F3};
    for (auto& f : F)
        if (f.is_zero()) return 0;
    // Scale each form to primitive integer coefficients; Res is homogeneous of
    // degree (product of the other two degrees) in each form.
    Rat scale = 1;
    std::array<int, 3> d = {F[0].degree, F[1].degree, F[2].degree};
    for (int i = 0; i < 3; ++i) {
        Poly coeffs;
        for (auto& [e, c] : F[i].coeff) coeffs.push_back(c);
        // content via poly_content on the coefficient list
        Rat cont = poly_content(coeffs);
        if (cont < 0) cont = -cont;
        for (auto& [e, c] : F[i].coeff) c /= cont;
        long w = d[(i + 1) % 3] * d[(i + 2) % 3];
        scale *= pow_rat(cont, w);
    }
    if (auto r = macaulay_try(F)) return scale * *r;
    for (int k = 0; k < 8; ++k) {
        LinearChange3 T = retry_shear(k);
        std::array<TernaryForm, 3> G = {transform(F[0], T), transform(F[1], T),
                                        transform(F[2], T)};
        // det(T) = 1, so the resultant is unchanged by this substitution.
        if (auto r = macaulay_try(G)) return scale * *r;
    }
    // Degenerate coordinate situation (extraneous minor identically zero on
    // the orbit of shears tried).  Fall back to a scalar perturbation:
    // R(t) = Res(F0 + t y^d0, F1 + t x^d1, F2 + t z^d2) is a polynomial in t
    // of degree at most D = d0 d1 + d0 d2 + d1 d2, and R(0) is the sought
    // value.  Interpolate from D+1 generic evaluations.
    {
        long D = (long)d[0] * d[1] + (long)d[0] * d[2] + (long)d[1] * d[2];
        std::vector<Rat> ts, ys;
        for (long tval = 1; (long)ts.size() <= D && tval <= 4 * D + 20; ++tval) {
            std::array<TernaryForm, 3> G = F;
            G[0].coeff[{d[0], 0, 0}] += tval;
            G[1].coeff[{0, d[1], 0}] += tval;
            G[2].coeff[{0, 0, d[2]}] += tval;
            std::optional<Rat> r = macaulay_try(G);
            for (int k = 0; !r && k < 8; ++k) {
                LinearChange3 T = retry_shear(k);
                std::array<TernaryForm, 3> H = {transform(G[0], T), transform(G[1], T),
                                                transform(G[2], T)};
                r = macaulay_try(H);
            }
            if (!r) continue;
            ts.push_back(Rat(tval));
            ys.push_back(*r);
        }
        if ((long)ts.size() > D) {
            Rat acc = 0;  // Lagrange interpolation evaluated at t = 0
            for (size_t j = 0; j < ts.size(); ++j) {
                Rat term = ys[j];
                for (size_t k = 0; k < ts.size(); ++k) {
                    if (k == j) continue;
                    term *= -ts[k] / (ts[j] - ts[k]);
                }
                acc += term;
            }
            return scale * acc;
        }
    }
    throw std::runtime_error("macaulay_resultant: extraneous minor vanished in all retries");
}

Rat disc_ternary(const TernaryQuartic& F) {
    if (F.degree != 4) throw std::invalid_argument("disc_ternary: degree-4 form required");
    Rat res = macaulay_resultant(F.partial(0), F.partial(1), F.partial(2));
    // The (y, x, z) argument order is an odd transposition of the reference
    // (x, y, z) orientation; with three degree-3 forms that flips the sign.
    Rat d = -res / pow_rat(Rat(2), 14);
    // Exactness of the 2^14 division is asserted on integral input forms.
    bool integral = true;
    for (auto& [e, c] : F.coeff)
        if (!is_integer(c)) integral = false;
    if (integral && !is_integer(d))
        throw std::logic_error("disc_ternary: division by 2^14 not exact");
    return d;
}

Rat disc_short_nonspecial(const Rat& b, const Poly& f) {
    if (b == 0) throw std::invalid_argument("disc_short_nonspecial: b = 0");
    if (deg(f) != 4) throw std::invalid_argument("disc_short_nonspecial: quartic required");
    Rat c0 = f[4];
    Rat df = poly_discriminant(f);
    return -pow_rat(Rat(3), 9) * pow_rat(b, 12) * pow_rat(c0, 3) * df * df;
}

Rat disc_short_special(const Rat& b, const Poly& f) {
    if (b == 0) throw std::invalid_argument("disc_short_special: b = 0");
    if (deg(f) != 4) throw std::invalid_argument("disc_short_special: quartic required");
    // Degree-27 homogeneity in (b, c_i) forces the cube of the binary
    // discriminant: 9 + 3*6 = 27.
    Rat df = poly_discriminant(f);
    return -pow_rat(Rat(2), 16) * pow_rat(b, 9) * df * df * df;
}

namespace {

// Homogenize the degree <= 4 polynomial f(t) to a binary form in (t, z) of
// degree 4 and install it in a ternary quartic; var = 1 uses x, var = 0 uses y.
void install_binary(TernaryQuartic& F, const Poly& f, int var, const Rat& sign) {
    for (int i = 0; i < 5; ++i) {
        Rat c = (i < (int)f.size()) ? f[i] : Rat(0);
        if (c == 0) continue;
        std::array<int, 3> e{0, 0, 0};
        e[var] = i;
        e[2] = 4 - i;
        F.coeff[e] += sign * c;
    }
}

}  // namespace

TernaryQuartic plane_nonspecial_short(const Rat& b, const Poly& f) {
    TernaryQuartic F;
    F.degree = 4;
    F.set(3, 0, 1, b);  // b y^3 z
    install_binary(F, f, 1, Rat(-1));
    for (auto it = F.coeff.begin(); it != F.coeff.end();)
        it = (it->second == 0) ? F.coeff.erase(it) : std::next(it);
    return F;
}

TernaryQuartic plane_special_short(const Rat& b, const Poly& f) {
    TernaryQuartic F;
    F.degree = 4;
    F.coeff[{0, 4, 0}] += b;  // b x^4
    install_binary(F, f, 0, Rat(-1));
    for (auto it = F.coeff.begin(); it != F.coeff.end();)
        it = (it->second == 0) ? F.coeff.erase(it) : std::next(it);
    return F;
}

}  // namespace picard
