#include "picard/special.hpp"

#include "picard/arith.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace picard {

namespace {

std::string poly_str(const Poly& g) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < g.size(); ++i) os << (i ? " " : "") << g[i];
    os << "]";
    return os.str();
}

// Integer model with the same splitting field: D^deg g(y/D).
Poly integral_model(const Poly& g_in) {
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

// The 14 pairing rows of the classification; the second entry equals the
// first on self-paired rows.
struct RawRow {
    Poly left, right;
    bool self;
};

std::vector<RawRow> raw_rows() {
    return {
        {{0, 1, 0, 0, 1}, {0, 1, 0, 0, 1}, true},
        {{0, 2, 0, 0, 1}, {-2, 0, 0, 1}, false},
        {{0, 3, 0, 0, 1}, {-3, 0, 0, 1}, false},
        {{0, 6, 0, 0, 1}, {-6, 0, 0, 1}, false},
        {{0, 12, 0, 0, 1}, {-12, 0, 0, 1}, false},
        {{-3, 0, -6, 0, 1}, {-3, 0, 6, 0, 1}, false},
        {{-12, 0, -12, 0, 1}, {-12, 0, 12, 0, 1}, false},
        {{-3, 8, 6, 0, 1}, {-7, -4, -6, 4, 1}, false},
        {{-48, 32, -24, 0, 1}, {-32, -16, 24, -4, 1}, false},
        {{-12, -8, 12, 0, 1}, {-14, 4, -12, -2, 1}, false},
        {{-108, 96, -36, 0, 1}, {-12, -48, 36, -8, 1}, false},
        {{-12, 64, 12, 0, 1}, {-140, -32, -12, 16, 1}, false},
        {{-12, -16, 12, 0, 1}, {-20, 8, -12, -4, 1}, false},
        {{-12, 32, -12, 0, 1}, {-12, 32, -12, 0, 1}, true},
    };
}

[[noreturn]] void fail(const std::string& what, const Poly& g) {
    throw std::runtime_error("classification verification failed: " + what + " for " +
                             poly_str(g));
}

ClassificationTable build_table() {
    ClassificationTable T;
    std::vector<RawRow> rows = raw_rows();
    for (size_t r = 0; r < rows.size(); ++r) {
        std::vector<Poly> col{rows[r].left};
        if (!rows[r].self) col.push_back(rows[r].right);
        for (size_t side = 0; side < col.size(); ++side) {
            SpecialClassEntry e;
            e.g = col[side];
            e.row = int(r);
            e.left = (side == 0);
            e.self_paired = rows[r].self;
            // (i) specialness, separability, ramification outside {2,3}.
            BinaryQuartic G = BinaryQuartic::from_poly(e.g);
            if (invariant_I(G) != 0) fail("nonzero invariant I", e.g);
            Rat D = disc_binary(G);
            if (D == 0) fail("inseparable polynomial", e.g);
            for (auto& [p, ex] : factor_rat(D)) {
                if (p == 2 || p == 3) continue;
                if (!splitting_field_unramified(integral_model(e.g), p))
                    fail("splitting field ramified at " + p.get_str(), e.g);
            }
            // Scalar classes of the rational symmetries.
            std::set<Rat> scal;
            for (const Transport& S : rational_symmetries(e.g))
                scal.insert(nth_power_free_part(S.mu, 4).first);
            e.scal.assign(scal.begin(), scal.end());
            T.entries.push_back(e);
        }
    }
    if (T.entries.size() != 26) fail("entry count", {});
    // (ii) pairwise non-equivalence.
    for (size_t i = 0; i < T.entries.size(); ++i)
        for (size_t j = i + 1; j < T.entries.size(); ++j)
            if (are_equivalent(T.entries[i].g, T.entries[j].g))
                fail("equivalent to " + poly_str(T.entries[j].g), T.entries[i].g);
    // (iii) shadow pairing: the row partner is equivalent to the shadow.
    for (size_t r = 0; r < rows.size(); ++r) {
        Poly sh = hessian_shadow(rows[r].left);
        if (!are_equivalent(sh, rows[r].right)) fail("shadow pairing broken", rows[r].left);
        if (rows[r].self != bool(are_equivalent(sh, rows[r].left)))
            fail("self-pairing flag wrong", rows[r].left);
    }
    // (iv) the obstructed biquadratic pairs stay excluded; the unobstructed
    // one is realized by the final table row.
    if (!biquadratic_obstruction(-1, 3)) fail("(-1,3) should be obstructed", {});
    if (!biquadratic_obstruction(2, -6)) fail("(2,-6) should be obstructed", {});
    if (biquadratic_obstruction(-2, 6)) fail("(-2,6) should be unobstructed", {});
    return T;
}

}  // namespace

Rat special_poly_discriminant(const SpecialPolynomial& sp) {
    Rat inner = 64 * pow_rat(sp.b, 3) + sp.c * sp.c;
    return Rat(-27) * inner * inner;
}

bool biquadratic_obstruction(const Int& d1, const Int& d2) {
    if (d1 == 0 || d2 == 0) throw std::invalid_argument("biquadratic_obstruction: zero input");
    for (const Int& d : {d1, d2})
        for (auto& [p, e] : factor_rat(Rat(d)))
            if (e > 1) throw std::invalid_argument("biquadratic_obstruction: not squarefree");
    if (!exact_sqrt(Rat(d1 * d2) / Rat(-3)))
        throw std::invalid_argument("biquadratic_obstruction: d1 d2 != -3 modulo squares");
    std::set<Int> primes{Int(2), Int(3)};
    for (const Int& d : {d1, d2})
        for (const Int& p : support(Rat(d))) primes.insert(p);
    if (hilbert_symbol(Rat(d1), Rat(d2), std::nullopt) == -1) return true;
    for (const Int& p : primes)
        if (hilbert_symbol(Rat(d1), Rat(d2), p) == -1) return true;
    return false;
}

const ClassificationTable& classify_special_good_outside_23() {
    static const ClassificationTable T = build_table();
    return T;
}

std::vector<SpecialShort> enumerate_special_twists_23() {
    const ClassificationTable& T = classify_special_good_outside_23();
    std::vector<SpecialShort> out;
    for (const SpecialClassEntry& e : T.entries) {
        // Candidate scalars in lexicographic (sign, mu, nu) order.
        std::vector<Rat> kept;
        for (int sign = 0; sign < 2; ++sign)
            for (int mu = 0; mu <= 3; ++mu)
                for (int nu = 0; nu <= 3; ++nu) {
                    Rat a = pow_rat(Rat(2), mu) * pow_rat(Rat(3), nu);
                    if (sign) a = -a;
                    bool dup = false;
                    for (const Rat& prev : kept) {
                        for (const Rat& s : e.scal)
                            if (exact_nth_root(a / (prev * s), 4)) dup = true;
                        if (dup) break;
                    }
                    if (dup) continue;
                    kept.push_back(a);
                    Poly f = e.g;
                    for (auto& c : f) c *= a;
                    out.push_back(SpecialShort{Rat(1), f});
                }
    }
    return out;
}

StandardSpecialCurve standard_special_curve() {
    StandardSpecialCurve s;
    s.model = SpecialShort{Rat(1), {1, 0, 0, 1}};  // x^4 = y^3 + 1
    s.plane_disc_magnitude = pow_rat(Rat(2), 16) * pow_rat(Rat(3), 9);
    s.minimal_disc_magnitude = pow_rat(Rat(2), 7) * pow_rat(Rat(3), 9);
    s.conductor_exponents = {{Int(2), 6}, {Int(3), 6}};
    return s;
}

}  // namespace picard
