#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "picard/invariants.hpp"
#include "picard/reduction.hpp"
#include "picard/special.hpp"

#include <algorithm>
#include <random>
#include <sstream>

using namespace picard;

namespace {

std::mt19937 rng(20240824);

Rat rnd_rat(int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    int num = d(rng);
    std::uniform_int_distribution<int> e(1, 9);
    return Rat(num) / e(rng);
}

std::vector<Int> primes_in(int lo, int hi) {
    std::vector<Int> out;
    for (int p = lo; p <= hi; ++p)
        if (is_prime(Int(p))) out.push_back(p);
    return out;
}

}  // namespace

TEST_CASE("special polynomial discriminant") {
    CHECK(special_poly_discriminant({Rat(1), Rat(0)}) ==
          -pow_rat(Rat(2), 12) * pow_rat(Rat(3), 3));
    CHECK(special_poly_discriminant({Rat(0), Rat(1)}) == -27);
    for (int i = 0; i < 200; ++i) {
        SpecialPolynomial sp{rnd_rat(-12, 12), rnd_rat(-12, 12)};
        INFO("case " << i);
        CHECK(special_poly_discriminant(sp) == disc_binary(sp.expand()));
    }
}

TEST_CASE("the family always has vanishing invariant I") {
    for (int i = 0; i < 1000; ++i) {
        SpecialPolynomial sp{rnd_rat(-30, 30), rnd_rat(-30, 30)};
        INFO("case " << i);
        CHECK(invariant_I(BinaryQuartic::from_poly(sp.expand())) == 0);
    }
}

TEST_CASE("biquadratic obstruction") {
    CHECK(biquadratic_obstruction(-1, 3));
    CHECK(biquadratic_obstruction(2, -6));
    CHECK_FALSE(biquadratic_obstruction(-2, 6));
    // Rational witness for the unobstructed pair: (x, y, z) = (1, 1, 2).
    CHECK(Rat(-2) * 1 + Rat(6) * 1 - Rat(2) * 2 == 0);

    CHECK_THROWS_AS(biquadratic_obstruction(2, 3), std::invalid_argument);
    CHECK_THROWS_AS(biquadratic_obstruction(-4, 12), std::invalid_argument);
    CHECK_THROWS_AS(biquadratic_obstruction(0, -3), std::invalid_argument);
}

TEST_CASE("classification table structure") {
    const ClassificationTable& T = classify_special_good_outside_23();
    REQUIRE(T.entries.size() == 26);

    // Pairwise non-equivalent (re-checked independently of the builder).
    for (size_t i = 0; i < T.entries.size(); ++i)
        for (size_t j = i + 1; j < T.entries.size(); ++j)
            CHECK_FALSE(are_equivalent(T.entries[i].g, T.entries[j].g).has_value());

    // Every entry is special, separable, unramified outside {2,3}.
    for (auto& e : T.entries) {
        BinaryQuartic G = BinaryQuartic::from_poly(e.g);
        CHECK(invariant_I(G) == 0);
        CHECK(disc_binary(G) != 0);
    }

    // The listed pairing: the right entry of each row is equivalent to the
    // Hessian shadow of the left entry.
    for (size_t r = 0; r < 14; ++r) {
        const SpecialClassEntry* L = nullptr;
        const SpecialClassEntry* R = nullptr;
        for (auto& e : T.entries) {
            if (e.row != int(r)) continue;
            (e.left ? L : R) = &e;
        }
        REQUIRE(L != nullptr);
        Poly sh = hessian_shadow(L->g);
        if (L->self_paired) {
            CHECK(R == nullptr);
            CHECK(are_equivalent(sh, L->g).has_value());
        } else {
            REQUIRE(R != nullptr);
            CHECK(are_equivalent(sh, R->g).has_value());
        }
    }

    // The spotlighted row: x^4 + 2x pairs with x^3 - 2.
    Poly g2{0, 2, 0, 0, 1};
    CHECK(are_equivalent(hessian_shadow(g2), Poly{-2, 0, 0, 1}).has_value());

    // Exactly two self-paired entries, with nontrivial scalar class 9.
    std::vector<Poly> selfs;
    for (auto& e : T.entries)
        if (e.self_paired) selfs.push_back(e.g);
    REQUIRE(selfs.size() == 2);
    CHECK(selfs[0] == Poly{0, 1, 0, 0, 1});
    CHECK(selfs[1] == Poly{-12, 32, -12, 0, 1});
    for (auto& e : T.entries) {
        if (e.self_paired)
            CHECK(e.scal == std::vector<Rat>{Rat(1), Rat(9)});
        else
            CHECK(e.scal == std::vector<Rat>{Rat(1)});
    }
}

TEST_CASE("twist enumeration: count, class sizes, distinctness") {
    const ClassificationTable& T = classify_special_good_outside_23();
    std::vector<SpecialShort> tw = enumerate_special_twists_23();
    REQUIRE(tw.size() == 800);

    // Group boundaries: curves come in table order, a*g recognizable by the
    // monic part.
    size_t pos = 0;
    for (auto& e : T.entries) {
        size_t expect = e.self_paired ? 16 : 32;
        for (size_t k = 0; k < expect; ++k) {
            REQUIRE(pos < tw.size());
            CHECK(poly_monic(tw[pos].f) == e.g);
            ++pos;
        }
        // Within a group: pairwise non-isomorphic.
        for (size_t i = pos - expect; i < pos; ++i)
            for (size_t j = i + 1; j < pos; ++j) {
                INFO("group row " << e.row << " pair " << i << "," << j);
                CHECK_FALSE(is_isomorphic_special(tw[i], tw[j]));
            }
    }
    CHECK(pos == 800);

    // The collapsed groups really collapse: a and 9a give isomorphic curves.
    SpecialShort y4y{Rat(1), {0, 1, 0, 0, 1}};
    SpecialShort y4y9{Rat(1), {0, 9, 0, 0, 9}};  // x^4 = 9 (y^4 + y)
    CHECK(is_isomorphic_special(y4y, y4y9));

    // Scalars are canonical: the first group starts at a = 1 with +2^mu 3^nu
    // ascending.
    CHECK(tw[0].f == Poly{0, 1, 0, 0, 1});
    CHECK(tw[1].f == Poly{0, 3, 0, 0, 3});  // a = 3 (a = 9 collapses onto a = 1)
}

TEST_CASE("all 800 curves have good reduction away from 2 and 3") {
    std::vector<SpecialShort> tw = enumerate_special_twists_23();
    std::vector<Int> ps = primes_in(5, 97);
    REQUIRE(ps.size() == 23);
    for (size_t i = 0; i < tw.size(); ++i)
        for (auto& p : ps) {
            INFO("curve " << i << " p " << p.get_str());
            CHECK(has_good_reduction_special(tw[i], p).good);
        }
    // And via the full bad-prime computation on a sample.
    for (size_t i = 0; i < tw.size(); i += 97) {
        std::vector<Int> bp = bad_primes(PicardCurve::from_special_short(tw[i]));
        CHECK(bp == std::vector<Int>{Int(2), Int(3)});
    }
}

TEST_CASE("conductor exponent 4 at p = 3 for the eight ramified-family cases") {
    // The four biquadratic-type polynomials y^4 +- 6y^2 - 3, y^4 +- 12y^2 - 12
    // have c = 0 and b in {-1, 1, -2, 2}; twisting by a with v_3(a) in {1, 2}
    // lands in the small-conductor branch.
    std::vector<Rat> bs{Rat(-1), Rat(1), Rat(-2), Rat(2)};
    int cases = 0;
    for (const Rat& b : bs)
        for (long v = 1; v <= 2; ++v) {
            Rat a = pow_rat(Rat(3), v) * 2;  // any unit-times-3^v scalar
            INFO("b " << b << " v3(a) " << v);
            CHECK(special_f3_family(a, b, Rat(0)) == 4);
            ++cases;
        }
    CHECK(cases == 8);
    // Outside that valuation range the exponent is 6.
    CHECK(special_f3_family(Rat(1), Rat(1), Rat(0)) == 6);
    CHECK(special_f3_family(Rat(27), Rat(1), Rat(0)) == 6);
}

TEST_CASE("standard curve data") {
    StandardSpecialCurve s = standard_special_curve();
    PicardCurve c = PicardCurve::from_special_short(s.model);
    CHECK(is_special(c));

    Rat D = c.plane_disc();
    Rat mag = D < 0 ? -D : D;
    CHECK(mag == s.plane_disc_magnitude);
    CHECK(s.plane_disc_magnitude == pow_rat(Rat(2), 16) * pow_rat(Rat(3), 9));

    MinimalModelReport rep = global_minimal_model(c);
    Rat Dm = rep.disc < 0 ? -rep.disc : rep.disc;
    CHECK(Dm == s.minimal_disc_magnitude);

    CHECK(bad_primes(c) == std::vector<Int>{Int(2), Int(3)});

    CHECK(s.conductor_exponents == std::map<Int, long>{{Int(2), 6}, {Int(3), 6}});
    CHECK(validate_conductor_bounds(c.kind, s.conductor_exponents).empty());
    Rat N = 1;
    for (auto& [p, e] : s.conductor_exponents) N *= pow_rat(Rat(p), e);
    CHECK(N == pow_rat(Rat(2), 6) * pow_rat(Rat(3), 6));
}
