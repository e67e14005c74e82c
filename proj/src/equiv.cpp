// PGL2(Q)-equivalence and rational symmetries of separable binary forms of
// degree 3/4, by complete enumeration of root-divisor transports.  Every
// candidate map is verified exactly before being reported.

#include "picard/binary.hpp"

#include "numeric.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace picard {

namespace {

Rat form_content(const BinaryQuartic& G) {
    Poly p(G.c.begin(), G.c.end());
    Rat c = poly_content(p);
    if (c == 0) throw std::invalid_argument("zero form");
    return c;
}

BinaryQuartic form_scale(const BinaryQuartic& G, const Rat& s) {
    BinaryQuartic r = G;
    for (auto& x : r.c) x *= s;
    return r;
}

struct RootData {
    std::vector<std::pair<Rat, Rat>> points;  // rational projective points (u : v)
    std::vector<Poly> quads;                  // monic irreducible quadratics
    std::vector<Poly> quarts;                 // monic irreducible quartics
    std::vector<int> pattern;                 // sorted factor degrees (infinity = 1)
};

RootData analyze(const BinaryQuartic& G) {
    RootData rd;
    Poly p = G.to_poly();
    int d = deg(p);
    if (d < 4) {
        rd.points.push_back({Rat(1), Rat(0)});  // root at infinity
        rd.pattern.push_back(1);
    }
    auto [content, factors] = factor_poly(p);
    (void)content;
    for (const Poly& f : factors) {
        rd.pattern.push_back(deg(f));
        if (deg(f) == 1)
            rd.points.push_back({-f[0], Rat(1)});
        else if (deg(f) == 2)
            rd.quads.push_back(f);
        else if (deg(f) == 4)
            rd.quarts.push_back(f);
        // irreducible cubics carry no transport data beyond the pattern;
        // their forms always come with a rational point (the one at infinity
        // or a linear factor), so the rational-point case handles them.
    }
    std::sort(rd.pattern.begin(), rd.pattern.end());
    return rd;
}

// Completion of the primitive point (u : v) to an invertible matrix whose
// first column is (u, v).
MobiusMap point_to_infinity(const std::pair<Rat, Rat>& pt) {
    MobiusMap M;
    M.a = pt.first;
    M.c = pt.second;
    if (pt.first != 0) {
        M.b = 0;
        M.d = 1;
    } else {
        M.b = 1;
        M.d = 0;
    }
    if (M.det() == 0) throw std::logic_error("point_to_infinity: degenerate point");
    return M;
}

std::optional<Rat> verify_transport(const BinaryQuartic& G1, const BinaryQuartic& G2,
                                    const MobiusMap& A) {
    if (A.det() == 0) return std::nullopt;
    BinaryQuartic t = form_act(G1, A);
    Rat mu;
    bool have = false;
    for (int i = 0; i < 5; ++i) {
        if (G2.c[i] == 0) {
            if (t.c[i] != 0) return std::nullopt;
            continue;
        }
        Rat r = t.c[i] / G2.c[i];
        if (!have) {
            mu = r;
            have = true;
        } else if (r != mu) {
            return std::nullopt;
        }
    }
    if (!have || mu == 0) return std::nullopt;
    return mu;
}

MobiusMap normalize_projective(const MobiusMap& A) {
    Poly v = {A.a, A.b, A.c, A.d};
    Rat c = poly_content(v);  // sign follows the last nonzero entry; fix below
    MobiusMap r = A;
    r.a /= c;
    r.b /= c;
    r.c /= c;
    r.d /= c;
    // First nonzero of (a, b, c, d) positive.
    for (Rat* x : {&r.a, &r.b, &r.c, &r.d}) {
        if (*x == 0) continue;
        if (*x < 0) {
            r.a = -r.a;
            r.b = -r.b;
            r.c = -r.c;
            r.d = -r.d;
        }
        break;
    }
    r.eps.reset();
    return r;
}

// Solutions alpha of dep2 = dep1 scaled: P2 = P1/a^2, Q2 = Q1/a^3.
std::vector<Rat> cubic_scale_solutions(const Rat& P1, const Rat& Q1, const Rat& P2,
                                       const Rat& Q2) {
    std::vector<Rat> out;
    if (P1 == 0 && P2 == 0) {
        if (Q1 != 0 && Q2 != 0)
            if (auto a = exact_nth_root(Q1 / Q2, 3)) out.push_back(*a);
    } else if (P1 != 0 && P2 != 0) {
        if (Q1 == 0 && Q2 == 0) {
            if (auto a = exact_sqrt(P1 / P2)) {
                out.push_back(*a);
                out.push_back(-*a);
            }
        } else if (Q1 != 0 && Q2 != 0) {
            Rat a = (Q1 * P2) / (Q2 * P1);
            if (a != 0 && a * a == P1 / P2 && a * a * a == Q1 / Q2) out.push_back(a);
        }
    }
    return out;
}

// Rational nullspace of an m x 4 system.
std::vector<std::array<Rat, 4>> nullspace4(std::vector<std::array<Rat, 4>> M) {
    int rows = (int)M.size();
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < 4 && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (M[i][c] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(M[piv], M[r]);
        Rat inv = 1 / M[r][c];
        for (int j = 0; j < 4; ++j) M[r][j] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || M[i][c] == 0) continue;
            Rat f = M[i][c];
            for (int j = 0; j < 4; ++j) M[i][j] -= f * M[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<std::array<Rat, 4>> basis;
    for (int c = 0; c < 4; ++c) {
        if (std::find(pivot_col.begin(), pivot_col.end(), c) != pivot_col.end()) continue;
        std::array<Rat, 4> v{Rat(0), Rat(0), Rat(0), Rat(0)};
        v[c] = 1;
        for (int i = 0; i < (int)pivot_col.size(); ++i) v[pivot_col[i]] = -M[i][c];
        basis.push_back(v);
    }
    return basis;
}

void push_candidate(std::vector<MobiusMap>& out, const MobiusMap& A) {
    if (A.det() == 0) return;
    out.push_back(A);
}

// Case with rational points on both divisors.
void candidates_rational_point(const BinaryQuartic& G1, const BinaryQuartic& G2,
                               const RootData& r1, const RootData& r2,
                               std::vector<MobiusMap>& out) {
    for (const auto& s : r1.points) {
        MobiusMap Ms = point_to_infinity(s);
        BinaryQuartic G1p = form_act(G1, Ms);
        Poly c1 = G1p.to_poly();  // cubic
        if (deg(c1) != 3) continue;
        for (const auto& rpt : r2.points) {
            MobiusMap Mr = point_to_infinity(rpt);
            BinaryQuartic G2p = form_act(G2, Mr);
            Poly c2 = G2p.to_poly();
            if (deg(c2) != 3) continue;
            Rat l1 = lead(c1), l2 = lead(c2);
            Poly m1 = poly_monic(c1), m2 = poly_monic(c2);
            Rat t1 = m1[2] / 3, t2 = m2[2] / 3;
            Poly dep1 = poly_compose_linear(m1, 1, -t1);
            Poly dep2 = poly_compose_linear(m2, 1, -t2);
            Rat P1 = dep1[1], Q1 = dep1[0], P2 = dep2[1], Q2 = dep2[0];
            for (const Rat& alpha : cubic_scale_solutions(P1, Q1, P2, Q2)) {
                MobiusMap B;
                B.a = alpha;
                B.b = alpha * t2 - t1;
                MobiusMap A = Ms.compose(B).compose(Mr.inverse());
                push_candidate(out, A);
            }
        }
    }
}

// Case (2,2): both forms are products of two irreducible quadratics.
void candidates_two_quadratics(const RootData& r1, const RootData& r2,
                               std::vector<MobiusMap>& out) {
    for (int pairing = 0; pairing < 2; ++pairing) {
        std::array<int, 2> sigma = pairing ? std::array<int, 2>{1, 0}
                                           : std::array<int, 2>{0, 1};
        // Per pair: square-class match of the two discriminants.
        std::array<Rat, 2> w;
        bool ok = true;
        for (int j = 0; j < 2 && ok; ++j) {
            const Poly& q2 = r2.quads[j];
            const Poly& q1 = r1.quads[sigma[j]];
            Rat d2 = q2[1] * q2[1] - 4 * q2[0];
            Rat d1 = q1[1] * q1[1] - 4 * q1[0];
            auto s = exact_sqrt(d1 / d2);
            if (!s)
                ok = false;
            else
                w[j] = *s;
        }
        if (!ok) continue;
        for (int s0 = 0; s0 < 2; ++s0)
            for (int s1 = 0; s1 < 2; ++s1) {
                std::array<int, 2> sign = {s0 ? -1 : 1, s1 ? -1 : 1};
                std::vector<std::array<Rat, 4>> eqs;
                for (int j = 0; j < 2; ++j) {
                    const Poly& q2 = r2.quads[j];
                    const Poly& q1 = r1.quads[sigma[j]];
                    Rat d2 = q2[1] * q2[1] - 4 * q2[0];
                    Rat e = -q2[1] / 2, f = Rat(1) / 2;
                    Rat g = -q1[1] / 2, h = Rat(sign[j]) * w[j] / 2;
                    // alpha*theta + beta = u*(gamma*theta + delta), split over
                    // the basis (1, sqrt(d2)).
                    eqs.push_back({e, Rat(1), -(g * e + h * f * d2), -g});
                    eqs.push_back({f, Rat(0), -(g * f + h * e), -h});
                }
                for (const auto& v : nullspace4(eqs)) {
                    MobiusMap A;
                    A.a = v[0];
                    A.b = v[1];
                    A.c = v[2];
                    A.d = v[3];
                    push_candidate(out, A);
                }
            }
    }
}

// Roots of q1 in Q[y]/(q2) (both monic irreducible quartics), exactly
// certified; numeric search over embedding assignments.
std::vector<Poly> roots_in_quartic_field(const Poly& q1, const Poly& q2) {
    std::vector<Poly> roots;
    std::set<std::vector<std::pair<Int, Int>>> seen;
    for (unsigned prec : {512u, 2048u}) {
        auto th = numeric::complex_roots(q2, prec);
        auto sr = numeric::complex_roots(q1, prec);
        Int den_bound = Int(1) << (prec / 3);
        std::array<int, 4> perm = {0, 1, 2, 3};
        std::sort(perm.begin(), perm.end());
        do {
            std::vector<std::vector<numeric::Cplx>> M(4, std::vector<numeric::Cplx>(4));
            std::vector<numeric::Cplx> rhs(4);
            for (int i = 0; i < 4; ++i) {
                numeric::Cplx pw(mpf_class(1, prec), mpf_class(0, prec));
                for (int k = 0; k < 4; ++k) {
                    M[i][k] = pw;
                    pw = pw * th[i];
                }
                rhs[i] = sr[perm[i]];
            }
            auto c = numeric::solve4(M, rhs);
            Poly P(4, Rat(0));
            bool ok = true;
            for (int k = 0; k < 4 && ok; ++k) {
                mpf_class tol(1, prec);
                mpf_div_2exp(tol.get_mpf_t(), tol.get_mpf_t(), prec / 3);
                if (abs(c[k].im) > tol * (abs(c[k].re) + 1)) {
                    ok = false;
                    break;
                }
                auto r = numeric::reconstruct_rational(c[k].re, den_bound);
                if (!r)
                    ok = false;
                else
                    P[k] = *r;
            }
            if (!ok) continue;
            // Exact certification: q1(P(y)) = 0 mod q2.
            Poly comp;
            for (int i = (int)q1.size() - 1; i >= 0; --i) {
                comp = poly_mul(comp, P);
                if (comp.empty()) comp = {Rat(0)};
                comp[0] += q1[i];
                comp = poly_divmod(trim(comp), q2).second;
            }
            if (deg(comp) >= 0) continue;
            std::vector<std::pair<Int, Int>> key;
            for (const Rat& x : P) key.push_back({num(x), den(x)});
            if (seen.insert(key).second) roots.push_back(P);
        } while (std::next_permutation(perm.begin(), perm.end()));
        if (!roots.empty()) break;
    }
    return roots;
}

void candidates_irreducible_quartic(const RootData& r1, const RootData& r2,
                                    std::vector<MobiusMap>& out) {
    const Poly& q1 = r1.quarts[0];
    const Poly& q2 = r2.quarts[0];
    for (const Poly& P : roots_in_quartic_field(q1, q2)) {
        // A(theta) = P(theta): alpha*y + beta - gamma*(y*P mod q2) - delta*P = 0.
        Poly T = poly_divmod(poly_mul(Poly{Rat(0), Rat(1)}, P), q2).second;
        std::vector<std::array<Rat, 4>> eqs;
        for (int k = 0; k < 4; ++k) {
            Rat tk = (k < (int)T.size()) ? T[k] : Rat(0);
            Rat pk = (k < (int)P.size()) ? P[k] : Rat(0);
            eqs.push_back({Rat(k == 1 ? 1 : 0), Rat(k == 0 ? 1 : 0), -tk, -pk});
        }
        for (const auto& v : nullspace4(eqs)) {
            MobiusMap A;
            A.a = v[0];
            A.b = v[1];
            A.c = v[2];
            A.d = v[3];
            push_candidate(out, A);
        }
    }
}

bool canon_matrix_less(const MobiusMap& x, const MobiusMap& y) {
    if (x.a != y.a) return x.a < y.a;
    if (x.b != y.b) return x.b < y.b;
    if (x.c != y.c) return x.c < y.c;
    return x.d < y.d;
}

}  // namespace

std::vector<Transport> all_transports(const BinaryQuartic& G1_in, const BinaryQuartic& G2_in) {
    if (G1_in.is_zero() || G2_in.is_zero())
        throw std::invalid_argument("all_transports: zero form");
    if (disc_binary(G1_in) == 0 || disc_binary(G2_in) == 0)
        throw std::invalid_argument("all_transports: separable forms required");
    Rat s1 = form_content(G1_in), s2 = form_content(G2_in);
    BinaryQuartic G1 = form_scale(G1_in, 1 / s1), G2 = form_scale(G2_in, 1 / s2);

    RootData r1 = analyze(G1), r2 = analyze(G2);
    std::vector<Transport> result;
    if (r1.pattern != r2.pattern) return result;

    // Invariant prefilter.
    Rat I1 = invariant_I(G1), I2 = invariant_I(G2);
    Rat J1 = invariant_J(G1), J2 = invariant_J(G2);
    if ((I1 == 0) != (I2 == 0) || (J1 == 0) != (J2 == 0)) return result;
    if (I1 != 0 && J1 != 0) {
        if ((J1 * J1) / (I1 * I1 * I1) != (J2 * J2) / (I2 * I2 * I2)) return result;
    } else if (I1 == 0) {
        // J ratio must be a cube.
        if (!exact_nth_root(J2 / J1, 3) &&
            nth_power_free_part(J2 / J1, 3).first != 1)
            return result;
    } else {
        if (nth_power_free_part(I2 / I1, 2).first != 1) return result;
    }

    std::vector<MobiusMap> cands;
    if (!r1.points.empty() && !r2.points.empty()) {
        candidates_rational_point(G1, G2, r1, r2, cands);
    } else if (r1.quads.size() == 2 && r2.quads.size() == 2) {
        candidates_two_quadratics(r1, r2, cands);
    } else if (r1.quarts.size() == 1 && r2.quarts.size() == 1) {
        candidates_irreducible_quartic(r1, r2, cands);
    }

    std::set<std::vector<Rat>> seen;
    std::vector<MobiusMap> verified;
    for (const MobiusMap& A0 : cands) {
        MobiusMap A = normalize_projective(A0);
        std::vector<Rat> key = {A.a, A.b, A.c, A.d};
        if (!seen.insert(key).second) continue;
        if (verify_transport(G1, G2, A)) verified.push_back(A);
    }
    std::sort(verified.begin(), verified.end(), canon_matrix_less);
    for (const MobiusMap& A : verified) {
        Rat mu_prim = *verify_transport(G1, G2, A);
        Transport t;
        t.A = A;
        t.mu = s1 * mu_prim / s2;  // back to the unscaled forms
        result.push_back(t);
    }
    return result;
}

std::vector<Transport> rational_symmetries(const Poly& g) {
    BinaryQuartic G = BinaryQuartic::from_poly(g);
    std::vector<Transport> ts = all_transports(G, G);
    for (auto& t : ts) t.mu = nth_power_free_part(t.mu, 4).first;
    return ts;
}

std::optional<Transport> are_equivalent(const Poly& g1, const Poly& g2) {
    BinaryQuartic G1 = BinaryQuartic::from_poly(g1);
    BinaryQuartic G2 = BinaryQuartic::from_poly(g2);
    std::vector<Transport> ts = all_transports(G1, G2);
    if (ts.empty()) return std::nullopt;
    return ts.front();
}

}  // namespace picard
