// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Each criterion body throws on the first violated check.

#include "picard/arith.hpp"
#include "picard/binary.hpp"
#include "picard/db.hpp"
#include "picard/invariants.hpp"
#include "picard/models.hpp"
#include "picard/parse.hpp"
#include "picard/poly.hpp"
#include "picard/rat.hpp"
#include "picard/reduction.hpp"
#include "picard/special.hpp"
#include "picard/ternary.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

using namespace picard;

namespace {

int failures = 0;
std::mt19937 rng(20240826);

struct CheckFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
    if (!ok) throw CheckFailure(what);
}

void criterion(int n, const std::string& what, double limit_s,
               const std::function<void()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    std::string failure;
    try {
        body();
    } catch (const std::exception& e) {
        failure = e.what();
    }
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (failure.empty() && limit_s > 0 && secs > limit_s) {
        std::ostringstream os;
        os << "runtime " << secs << "s exceeds limit " << limit_s << "s";
        failure = os.str();
    }
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(1);
    line << "criterion " << n << " [" << what << "]: "
         << (failure.empty() ? "PASS" : "FAIL") << " (" << secs << "s)";
    if (!failure.empty()) {
        line << " -- " << failure;
        ++failures;
    }
    std::cout << line.str() << "\n";
}

Rat rabs(const Rat& x) { return x < 0 ? -x : x; }

TernaryQuartic random_dense_quartic(std::uniform_int_distribution<long>& d) {
    TernaryQuartic F;
    F.degree = 4;
    for (int ey = 0; ey <= 4; ++ey)
        for (int ex = 0; ex + ey <= 4; ++ex) F.set(ey, ex, 4 - ey - ex, Rat(d(rng)));
    return F;
}

TernaryForm scale_form(const TernaryForm& F, const Rat& s) {
    TernaryForm r = F;
    for (auto& [e, c] : r.coeff) c *= s;
    return r;
}

// The six-element symmetry group of the unit equation l + (1 - l) = 1.
Rat unit_symmetry(const Rat& l, int k) {
    switch (k % 6) {
        case 0: return l;
        case 1: return 1 - l;
        case 2: return 1 / l;
        case 3: return 1 - 1 / l;
        case 4: return 1 / (1 - l);
        default: return l / (l - 1);
    }
}

}  // namespace

int main() {
    criterion(1, "standard-curve discriminant", 5.0, [] {
        Rat target = pow_rat(Rat(2), 16) * pow_rat(Rat(3), 9);
        TernaryQuartic F = parse_ternary_quartic("y^3*z - x^4 + z^4");
        require(rabs(disc_ternary(F)) == target, "resultant path magnitude");
        // The same curve in both short shapes, through the closed forms.
        require(rabs(disc_short_nonspecial(Rat(1), Poly{-1, 0, 0, 0, 1})) == target,
                "cubic-shape closed form");
        // The same class in the fourth-power shape: x^4 = y^4 + y.
        require(rabs(disc_short_special(Rat(1), Poly{0, 1, 0, 0, 1})) == target,
                "fourth-power-shape closed form");
    });

    criterion(2, "minimization examples", 90.0, [] {
        // x^4 = y^3 + 1: minimal |disc| = 2^7 3^9.
        MinimalModelReport r1 =
            global_minimal_model(PicardCurve::from_special_short({Rat(1), {1, 0, 0, 1}}));
        require(rabs(r1.disc) == pow_rat(Rat(2), 7) * pow_rat(Rat(3), 9),
                "fourth-power curve minimal disc");
        // y^3 = 7 (x^4 - 9 x^2 - 10 x - 9): v_7 drops 19 -> 10.
        PicardCurve c7 = parse_curve_literal("y^3=7*(x^4-9*x^2-10*x-9)");
        require(val_rat(c7.plane_disc(), 7) == 19, "v_7 before");
        require(val_rat(minimize_at_prime(c7, 7).plane_disc(), 7) == 10, "v_7 after");
        // y^3 = 17 x^4 + x^3 + 2 x^2 + x - 1: already minimal at 17 with v = 3,
        // while the traceless diagonal-move restriction can only reach 12.
        NonspecialShort m17{Rat(1), {-1, 1, 2, 1, 17}};
        PicardCurve c17 = PicardCurve::from_nonspecial_short(m17);
        require(val_rat(c17.plane_disc(), 17) == 3, "v_17 of the input");
        require(val_rat(minimize_at_prime(c17, 17).plane_disc(), 17) == 3, "v_17 minimal");
        require(traceless_minimum_exponent(m17, 17) == 12, "traceless minimum");
    });

    criterion(3, "classification and twist counts", 600.0, [] {
        const ClassificationTable& table = classify_special_good_outside_23();
        require(table.entries.size() == 26, "class count");
        // The shadow pairing: each row's two polynomials are exchanged by the
        // Hessian shadow up to equivalence; self-paired rows map to themselves.
        for (const SpecialClassEntry& e : table.entries) {
            const SpecialClassEntry* partner = nullptr;
            for (const SpecialClassEntry& o : table.entries)
                if (o.row == e.row && (e.self_paired || o.left != e.left)) partner = &o;
            require(partner != nullptr, "pairing partner exists");
            require(are_equivalent(hessian_shadow(e.g), partner->g).has_value(),
                    "hessian pairing");
        }
        std::vector<SpecialShort> tw = enumerate_special_twists_23();
        require(tw.size() == 800, "twist count");
        std::map<Poly, long> sizes;
        for (const SpecialShort& m : tw) ++sizes[poly_monic(m.f)];
        require(sizes.size() == 26, "per-class partition");
        long n16 = 0, n32 = 0;
        for (auto& [g, n] : sizes) (n == 16 ? n16 : n32) += 1;
        for (auto& [g, n] : sizes) require(n == 16 || n == 32, "class size in {16, 32}");
        require(n16 == 2 && n32 == 24, "two classes of 16, twenty-four of 32");
    });

    criterion(4, "local obstruction suite", 1.0, [] {
        auto obstructed = [](long d1, long d2) {
            return biquadratic_obstruction(Int(d1), Int(d2));
        };
        require(obstructed(-1, 3), "(-1, 3) obstructed");
        require(obstructed(2, -6), "(2, -6) obstructed");
        require(!obstructed(-2, 6), "(-2, 6) unobstructed");
        // Explicit witness (x, y, z) = (1, 1, 2) for -2 x^2 + 6 y^2 = z^2.
        require(Rat(-2) * 1 * 1 + Rat(6) * 1 * 1 == Rat(2) * Rat(2), "witness (1, 1, 2)");
    });

    criterion(5, "conductor-bound validators", 60.0, [] {
        // The standard fourth-power curve with conductor 2^6 3^6 passes.
        CurveRecord rec = make_record(PicardCurve::from_special_short({Rat(1), {1, 0, 0, 1}}));
        rec.conductor[2] = 6;
        rec.conductor[3] = 6;
        require(validate_conductor_exponents(rec).empty(), "standard record accepted");
        CurveRecord bad2 = rec;
        bad2.conductor[2] = 4;
        require(!validate_conductor_exponents(bad2).empty(), "f_2 < 6 rejected");
        CurveRecord bad3 = rec;
        bad3.conductor[3] = 2;
        require(!validate_conductor_exponents(bad3).empty(), "f_3 < 4 rejected");
        CurveRecord bad5 = rec;
        bad5.conductor[5] = 3;
        require(!validate_conductor_exponents(bad5).empty(), "f_5 = 3 rejected");
        for (long ok : {0L, 4L, 6L}) {
            std::map<Int, long> f{{Int(2), 6}, {Int(3), 6}, {Int(5), ok}};
            require(validate_conductor_bounds(CurveKind::special, f).empty(),
                    "f_5 in {0, 4, 6} accepted by the shape bounds");
        }
        // The ramified-family case at 3: v_3(a) = 1 forces exponent 4.
        require(special_f3_family(Rat(12), Rat(1), Rat(0)) == 4, "family exponent 4");
        require(special_f3_family(Rat(1), Rat(1), Rat(0)) == 6, "unramified scalar gives 6");
    });

    criterion(6, "property suites (>= 100 cases each)", 600.0, [] {
        // (a) Discriminant homogeneity: degree 27 in the coefficients and
        // weight 36 under linear changes of variables.
        {
            std::uniform_int_distribution<long> d(-3, 3);
            const Rat lambdas[] = {Rat(2), Rat(-3), Rat(5), make_rat(Int(1), Int(2))};
            int done = 0, guard = 0;
            while (done < 100 && guard < 2000) {
                ++guard;
                TernaryQuartic F = random_dense_quartic(d);
                Rat D;
                try {
                    D = disc_ternary(F);
                } catch (const std::runtime_error&) {
                    continue;
                }
                Rat lam = lambdas[done % 4];
                require(disc_ternary(scale_form(F, lam)) == pow_rat(lam, 27) * D,
                        "degree-27 homogeneity");
                LinearChange3 T;
                do {
                    for (int i = 0; i < 3; ++i)
                        for (int j = 0; j < 3; ++j) T.m[i][j] = Rat(d(rng));
                } while (T.det() == 0);
                try {
                    require(disc_ternary(transform(F, T)) == pow_rat(T.det(), 36) * D,
                            "weight-36 covariance");
                    ++done;
                } catch (const std::runtime_error&) {
                }
            }
            require(done == 100, "homogeneity cases completed");
        }
        // (b) Closed forms match the resultant path on smooth short models.
        {
            std::uniform_int_distribution<long> d(-5, 5);
            int done = 0;
            while (done < 100) {
                Poly f{Rat(d(rng)), Rat(d(rng)), Rat(d(rng)), Rat(d(rng)), Rat(1)};
                if (done % 2) f[4] = Rat(d(rng) ? d(rng) : 1);
                if (f[0] == 0 || f[4] == 0) continue;
                Rat b(d(rng));
                if (b == 0) continue;
                if (done % 5 == 0) b /= 2;
                require(disc_short_nonspecial(b, f) ==
                            disc_ternary(plane_nonspecial_short(b, f)),
                        "cubic-shape closed form");
                require(disc_short_special(b, f) == disc_ternary(plane_special_short(b, f)),
                        "fourth-power-shape closed form");
                ++done;
            }
        }
        // (c) Minimization terminates, never increases the exponent, and is
        // idempotent.
        {
            std::uniform_int_distribution<long> d(-20, 20);
            const long primes[] = {2, 5, 7};
            int done = 0;
            while (done < 100) {
                Poly f{Rat(d(rng)), Rat(d(rng)), Rat(d(rng)), Rat(d(rng)), Rat(1)};
                if (poly_discriminant(f) == 0) continue;
                PicardCurve c = PicardCurve::from_nonspecial_short({Rat(1), f});
                Int p(primes[done % 3]);
                long before = val_rat(c.plane_disc(), p);
                PicardCurve m = minimize_at_prime(c, p);
                long after = val_rat(m.plane_disc(), p);
                require(after <= before, "exponent never increases");
                require(val_rat(minimize_at_prime(m, p).plane_disc(), p) == after,
                        "idempotent");
                ++done;
            }
        }
        // (d) The Hessian shadow is an involution up to equivalence: on the
        // 26-polynomial list and on random members of the equianharmonic
        // family.
        {
            for (const SpecialClassEntry& e : classify_special_good_outside_23().entries)
                require(are_equivalent(hessian_shadow(hessian_shadow(e.g)), e.g).has_value(),
                        "involution on the classification list");
            std::uniform_int_distribution<long> d(-9, 9);
            int done = 0;
            while (done < 100) {
                SpecialPolynomial s{Rat(d(rng)), Rat(d(rng))};
                if (special_poly_discriminant(s) == 0) continue;
                Poly g = s.expand();
                require(are_equivalent(hessian_shadow(hessian_shadow(g)), g).has_value(),
                        "involution on random equianharmonic quartics");
                ++done;
            }
        }
        // (e) Twist enumerations only emit curves passing the good-reduction
        // filters away from the allowed primes.
        {
            std::vector<Int> S{2, 3};
            std::vector<NonspecialShort> tw =
                twists_with_good_reduction_outside({Rat(1), {0, 1, 0, 0, 1}}, S);
            require(tw.size() == 81, "cubic-shape twist count");
            for (const NonspecialShort& m : tw)
                for (long p : {5, 7, 11, 13})
                    require(has_good_reduction_nonspecial(m, Int(p)).good,
                            "good reduction outside {2, 3}");
            std::vector<SpecialShort> sp = enumerate_special_twists_23();
            for (size_t i = 0; i < sp.size(); i += 19)
                for (long p : {5, 7, 11})
                    require(has_good_reduction_special(sp[i], Int(p)).good,
                            "special twists good outside {2, 3}");
        }
        // (f) Unit-equation solutions: stable under doubling the bound, found
        // by the exhaustive oracle, and closed under the symmetry group.
        {
            for (const std::vector<Int>& S :
                 {std::vector<Int>{2}, std::vector<Int>{3}, std::vector<Int>{2, 3}}) {
                std::vector<Rat> a = solve_sunit_equation(S, 8);
                require(a == solve_sunit_equation(S, 16), "stable under doubled bound");
                // Exhaustive oracle over bounded exponent vectors.
                std::set<Rat> orbit_members;
                for (const Rat& l : a)
                    for (int k = 0; k < 6; ++k) orbit_members.insert(unit_symmetry(l, k));
                std::vector<Rat> values{Rat(1)};
                for (const Int& p : S) {
                    std::vector<Rat> next;
                    for (const Rat& v : values)
                        for (long e = -8; e <= 8; ++e) next.push_back(v * pow_rat(Rat(p), e));
                    values = next;
                }
                for (const Rat& v : values)
                    for (const Rat& l : {Rat(v), Rat(-v)}) {
                        if (l == 1 || !is_s_unit(1 - l, S)) continue;
                        require(orbit_members.count(l) == 1, "oracle solution covered");
                    }
            }
            // Randomized orbit checks over the largest set.
            std::vector<Int> S{2, 3};
            std::vector<Rat> reps = solve_sunit_equation(S, 8);
            require(!reps.empty(), "non-empty solution set");
            std::uniform_int_distribution<size_t> pick(0, reps.size() - 1);
            std::uniform_int_distribution<int> map6(0, 5);
            for (int i = 0; i < 120; ++i) {
                Rat l = reps[pick(rng)];
                for (int step = 0; step < 4; ++step) l = unit_symmetry(l, map6(rng));
                require(is_s_unit(l, S) && is_s_unit(1 - l, S),
                        "symmetry image still solves the unit equation");
            }
        }
    });

    criterion(7, "corrected exponent bound at 3", 60.0, [] {
        PicardCurve c = parse_curve_literal("y^3=x^4+x^3+3^3*x^2+3^5*x");
        require(c.kind == CurveKind::nonspecial, "cubic-shape curve");
        CurveRecord rec = make_record(c);
        require(val_rat(rec.disc, 3) >= 5, "enough room in the minimal discriminant");
        rec.conductor.clear();
        rec.conductor[3] = 5;
        require(validate_conductor_exponents(rec).empty(), "f_3 = 5 accepted");
        rec.conductor[3] = 3;
        require(!validate_conductor_exponents(rec).empty(),
                "f_3 = 3 rejected by the corrected lower bound");
    });

    std::cout << (failures == 0 ? "ACCEPTANCE: all criteria passed"
                                : "ACCEPTANCE: failures present")
              << "\n";
    return failures == 0 ? 0 : 1;
}
