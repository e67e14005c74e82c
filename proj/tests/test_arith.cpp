#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "picard/arith.hpp"
#include "picard/poly.hpp"
#include "picard/rat.hpp"

#include <random>
#include <set>

using namespace picard;

TEST_CASE("p-adic valuation basics") {
    CHECK(valuation(Rat(12), 3).v == 1);
    CHECK(valuation(Rat(12), 2).v == 2);
    CHECK(valuation(Rat(0), 5).infinite);
    Rat q = make_rat(Int(269), Int(8) * 17);
    CHECK(valuation(q, 17).v == -1);
    CHECK(valuation(q, 2).v == -3);
    CHECK(valuation(q, 269).v == 1);
}

TEST_CASE("valuation is a homomorphism with the ultrametric inequality") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<long> d(-500, 500);
    const long primes[] = {2, 3, 5, 7};
    int done = 0;
    while (done < 400) {
        long a = d(rng), b = d(rng), c = d(rng), e = d(rng);
        if (a == 0 || c == 0 || b == 0 || e == 0) continue;
        Rat x = make_rat(Int(a), Int(b));
        Rat y = make_rat(Int(c), Int(e));
        Int p(primes[done % 4]);
        auto vx = valuation(x, p), vy = valuation(y, p);
        CHECK(valuation(x * y, p).v == vx.v + vy.v);
        if (x + y != 0) {
            long m = std::min(vx.v, vy.v);
            CHECK(valuation(x + y, p).v >= m);
        }
        ++done;
    }
}

TEST_CASE("hilbert symbol known values") {
    CHECK(hilbert_symbol(Rat(-1), Rat(-1), std::nullopt) == -1);
    CHECK(hilbert_symbol(Rat(-1), Rat(3), Int(3)) == -1);
    // (-2, 6) is trivial at every place: global witness -2*1 + 6*1 = 4 = 2^2.
    CHECK(hilbert_symbol(Rat(-2), Rat(6), std::nullopt) == 1);
    CHECK(hilbert_symbol(Rat(-2), Rat(6), Int(2)) == 1);
    CHECK(hilbert_symbol(Rat(-2), Rat(6), Int(3)) == 1);
    CHECK(hilbert_symbol(Rat(-2), Rat(6), Int(5)) == 1);
    CHECK(Rat(-2) * 1 + Rat(6) * 1 == Rat(4));  // z = 2
    // (2, -6) is nontrivial somewhere.
    bool nontrivial = hilbert_symbol(Rat(2), Rat(-6), std::nullopt) == -1;
    for (long p : {2L, 3L})
        if (hilbert_symbol(Rat(2), Rat(-6), Int(p)) == -1) nontrivial = true;
    CHECK(nontrivial);
    CHECK(hilbert_symbol(Rat(-1), Rat(3), std::nullopt) *
              hilbert_symbol(Rat(-1), Rat(3), Int(2)) *
              hilbert_symbol(Rat(-1), Rat(3), Int(3)) ==
          1);
}

TEST_CASE("hilbert symbol: symmetry, bimultiplicativity, product formula") {
    std::mt19937 rng(777);
    std::uniform_int_distribution<long> d(-60, 60);
    int done = 0;
    while (done < 300) {
        long a = d(rng), b = d(rng), c = d(rng);
        if (a == 0 || b == 0 || c == 0) continue;
        Rat ra(a), rb(b), rc(c);
        // Places: infinity plus primes dividing 2abc.
        std::set<long> ps{2};
        for (long x : {a, b, c}) {
            long m = x < 0 ? -x : x;
            for (long p = 2; p * p <= m; ++p)
                while (m % p == 0) {
                    ps.insert(p);
                    m /= p;
                }
            if (m > 1) ps.insert(m);
        }
        int prod = hilbert_symbol(ra, rb, std::nullopt);
        for (long p : ps) {
            int h = hilbert_symbol(ra, rb, Int(p));
            CHECK(h == hilbert_symbol(rb, ra, Int(p)));
            CHECK(hilbert_symbol(ra * rc, rb, Int(p)) ==
                  h * hilbert_symbol(rc, rb, Int(p)));
            prod *= h;
        }
        CHECK(prod == 1);
        ++done;
    }
}

TEST_CASE("nth power free part") {
    auto [c1, r1] = nth_power_free_part(Rat(48), 4);
    CHECK(c1 == Rat(3));
    CHECK(r1 == Rat(2));
    auto [c2, r2] = nth_power_free_part(Rat(-1), 3);
    CHECK(c2 == Rat(-1));
    CHECK(r2 == Rat(1));
    Rat big = pow_rat(Rat(2), 9) * pow_rat(Rat(3), 14);
    auto [c3, r3] = nth_power_free_part(big, 6);
    CHECK(c3 == Rat(8 * 9));
    CHECK(r3 == Rat(2 * 9));
    // Reconstruction identity on random input.
    std::mt19937 rng(5);
    std::uniform_int_distribution<long> d(1, 4000);
    for (int i = 0; i < 200; ++i) {
        Rat q = make_rat(Int(d(rng)), Int(d(rng)));
        if (i % 2) q = -q;
        int n = 2 + i % 4;
        auto [core, root] = nth_power_free_part(q, n);
        CHECK(core * pow_rat(root, n) == q);
        for (auto& [p, e] : factor_rat(core)) {
            CHECK(e >= 0);
            CHECK(e < n);
        }
    }
}

TEST_CASE("s-unit class representatives") {
    auto s1 = s_unit_classes({Int(2), Int(3)}, 3);
    CHECK(s1.representatives.size() == 18);
    auto s2 = s_unit_classes({Int(3)}, 2);
    CHECK(s2.representatives.size() == 4);
    std::set<Rat> got(s2.representatives.begin(), s2.representatives.end());
    CHECK(got == std::set<Rat>{Rat(1), Rat(-1), Rat(3), Rat(-3)});
    auto s3 = s_unit_classes({Int(2), Int(3)}, 6);
    CHECK(s3.representatives.size() == 72);
}

namespace {

std::vector<Rat> orbit_of(const Rat& l) {
    return {l, 1 - l, 1 / l, 1 - 1 / l, 1 / (1 - l), l / (l - 1)};
}

bool contains_up_to_symmetry(const std::vector<Rat>& sols, const Rat& l) {
    for (auto& s : sols)
        for (auto& o : orbit_of(s))
            if (o == l) return true;
    return false;
}

}  // namespace

TEST_CASE("unit equation solutions for small prime sets") {
    auto a = solve_sunit_equation({Int(2)}, 10);
    CHECK(a.size() == 1);
    CHECK(contains_up_to_symmetry(a, Rat(2)));
    auto b = solve_sunit_equation({Int(3)}, 10);
    CHECK(b.empty());
    auto c = solve_sunit_equation({Int(2), Int(3)}, 10);
    CHECK(contains_up_to_symmetry(c, Rat(9)));
    CHECK(contains_up_to_symmetry(c, Rat(2)));
    for (auto& l : c) {
        CHECK(is_s_unit(l, {Int(2), Int(3)}));
        CHECK(is_s_unit(1 - l, {Int(2), Int(3)}));
    }
}

TEST_CASE("unit equation output is stable under doubling the bound") {
    std::vector<std::vector<Int>> sets = {{Int(2)}, {Int(3)}, {Int(2), Int(3)}};
    for (auto& S : sets) {
        auto lo = solve_sunit_equation(S, 10);
        auto hi = solve_sunit_equation(S, 20);
        CHECK(lo == hi);
    }
}

TEST_CASE("splitting field ramification tests") {
    Poly c2 = {Rat(-2), Rat(0), Rat(0), Rat(1)};  // x^3 - 2
    CHECK(splitting_field_unramified(c2, Int(5)));
    CHECK_FALSE(splitting_field_unramified(c2, Int(2)));
    CHECK_FALSE(splitting_field_unramified(c2, Int(3)));
    // (x)(x-1)(x-8)(x+1) at 7: all roots rational.
    Poly lin = poly_mul(poly_mul({Rat(0), Rat(1)}, {Rat(-1), Rat(1)}),
                        poly_mul({Rat(-8), Rat(1)}, {Rat(1), Rat(1)}));
    CHECK(splitting_field_unramified(lin, Int(7)));
    Poly cyc = {Rat(1), Rat(1), Rat(1)};  // x^2 + x + 1, disc -3
    CHECK(splitting_field_unramified(cyc, Int(2)));
    CHECK_FALSE(splitting_field_unramified(cyc, Int(3)));
    Poly e5 = {Rat(5), Rat(0), Rat(0), Rat(0), Rat(1)};  // x^4 + 5, Eisenstein
    CHECK_FALSE(splitting_field_unramified(e5, Int(5)));
    // x^2 - 17 at 2: 17 is a square in Q_2.
    CHECK(splitting_field_unramified({Rat(-17), Rat(0), Rat(1)}, Int(2)));
    CHECK_FALSE(splitting_field_unramified({Rat(-2), Rat(0), Rat(1)}, Int(2)));
}

TEST_CASE("unramified whenever the discriminant is a unit") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<long> d(-9, 9);
    const long primes[] = {2, 3, 5, 7, 11};
    int done = 0;
    while (done < 150) {
        Poly f = {Rat(d(rng)), Rat(d(rng)), Rat(d(rng)), Rat(d(rng)), Rat(1)};
        if (poly_discriminant(f) == 0) continue;
        Int p(primes[done % 5]);
        if (valuation(poly_discriminant(f), p).v != 0) continue;
        CHECK(splitting_field_unramified(f, p));
        ++done;
    }
}

TEST_CASE("unramifiedness is invariant under integral shifts and unit scalings") {
    std::mt19937 rng(4242);
    std::uniform_int_distribution<long> d(-6, 6);
    const long primes[] = {2, 3, 5};
    int done = 0;
    while (done < 60) {
        Poly f = {Rat(d(rng)), Rat(d(rng)), Rat(d(rng)), Rat(d(rng)), Rat(1)};
        if (poly_discriminant(f) == 0) continue;
        Int p(primes[done % 3]);
        bool base = splitting_field_unramified(f, p);
        long c = d(rng);
        Poly g = poly_compose_linear(f, Rat(1), Rat(c));  // f(x + c)
        CHECK(splitting_field_unramified(g, p) == base);
        long u = (done % 3 == 0) ? 5 : (p == 3 ? 2 : 3);  // unit at p
        Poly h = poly_compose_linear(f, make_rat(Int(1), Int(u)), Rat(0));
        Rat cont = poly_content(h);
        for (auto& x : h) x /= cont;
        CHECK(splitting_field_unramified(h, p) == base);
        ++done;
    }
}
