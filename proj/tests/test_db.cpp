#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "picard/db.hpp"
#include "picard/special.hpp"

#include <algorithm>
#include <random>

using namespace picard;

namespace {

std::mt19937 rng(20240825);

Rat rnd(int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    return Rat(d(rng));
}

PicardCurve random_cubic_curve() {
    while (true) {
        Poly f{rnd(-6, 6), rnd(-6, 6), rnd(-6, 6), rnd(-6, 6), rnd(-6, 6)};
        if (trim(f).size() != 5 || poly_discriminant(f) == 0) continue;
        Rat b = rnd(-4, 4);
        if (b == 0) continue;
        return PicardCurve::from_nonspecial_short({b, f});
    }
}

}  // namespace

TEST_CASE("build, dedup across presentations, lookup") {
    PicardCurve c1 = PicardCurve::from_nonspecial_short({1, {-1, 0, 0, 0, 1}});  // y^3=x^4-1
    PicardCurve c2 = PicardCurve::from_special_short({1, {1, 0, 0, 1}});         // x^4=y^3+1
    PicardCurve c3 = PicardCurve::from_nonspecial_short({1, {0, 1, 0, 0, 1}});   // y^3=x^4+x

    CHECK(db_build({}).records.empty());

    Database db = db_build({c1, c2, c3});
    REQUIRE(db.records.size() == 2);  // the two standard-curve presentations merge
    CHECK(db_validate(db).empty());

    // Exact-match lookup through an isomorphic (scaled) presentation.
    PicardCurve q = PicardCurve::from_nonspecial_short({1, {0, pow_rat(Rat(2), 9), 0, 0, 1}});
    std::optional<size_t> hit = db_find(db, q);
    REQUIRE(hit.has_value());
    CHECK(db.records[*hit].kind == CurveKind::nonspecial);
    CHECK(db.records[*hit].wp == WeightedPoint{Rat(0), Rat(1), Rat(0)});

    // A curve absent from the database.
    PicardCurve miss = PicardCurve::from_nonspecial_short({1, {0, 5, 0, 0, 1}});
    CHECK_FALSE(db_find(db, miss).has_value());

    // Both presentations of the standard curve find the same record.
    std::optional<size_t> h1 = db_find(db, c1), h2 = db_find(db, c2);
    REQUIRE(h1.has_value());
    CHECK(h1 == h2);
    CHECK(db.records[*h1].kind == CurveKind::special);

    // Bad-prime subset query.
    CHECK(db_query_bad_primes(db, {Int(2), Int(3)}).size() == 2);
    CHECK(db_query_bad_primes(db, {Int(3)}).size() == 1);
    CHECK(db_query_bad_primes(db, {Int(5)}).empty());

    // Weighted-point query.
    CHECK(db_query_weighted_point(db, WeightedPoint{Rat(0), Rat(1), Rat(0)}).size() == 1);
}

TEST_CASE("record round-trip is byte-identical") {
    std::vector<PicardCurve> input{
        PicardCurve::from_special_short({1, {1, 0, 0, 1}}),
        PicardCurve::from_nonspecial_short({1, {0, 1, 0, 0, 1}}),
        PicardCurve::from_nonspecial_short({2, {1, 1, 2, 1, 17}}),
    };
    for (int i = 0; i < 25; ++i) input.push_back(random_cubic_curve());
    Database db = db_build(input);
    // Attach partial conductor data to exercise the nullable field.
    db.records[0].conductor[Int(2)] = 6;
    db.records[0].conductor[Int(5)] = std::nullopt;

    std::string text = serialize_database(db);
    Database db2 = parse_database(text);
    CHECK(serialize_database(db2) == text);
    REQUIRE(db2.records.size() == db.records.size());
    for (size_t i = 0; i < db.records.size(); ++i) {
        CHECK(serialize_record(parse_record(serialize_record(db.records[i]))) ==
              serialize_record(db.records[i]));
    }
    CHECK(db2.q_index == db.q_index);
    CHECK(db2.twist_index == db.twist_index);

    CHECK_THROWS_AS(parse_record("label=x;kind=bogus"), std::invalid_argument);
    CHECK_THROWS_AS(parse_record(""), std::invalid_argument);
}

TEST_CASE("every input curve is found after building") {
    std::vector<PicardCurve> input;
    for (int i = 0; i < 30; ++i) input.push_back(random_cubic_curve());
    Database db = db_build(input);
    CHECK(db_validate(db).empty());
    for (size_t i = 0; i < input.size(); ++i) {
        INFO("curve " << i);
        CHECK(db_find(db, input[i]).has_value());
    }
    // Labels injective and stable across a rebuild of the same multiset.
    std::vector<std::string> labels;
    for (auto& r : db.records) labels.push_back(r.label);
    std::vector<std::string> sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
    std::vector<PicardCurve> shuffled(input.rbegin(), input.rend());
    Database db2 = db_build(shuffled);
    CHECK(serialize_database(db2) == serialize_database(db));
}

TEST_CASE("conductor exponent validation on records") {
    Database db = db_build({PicardCurve::from_special_short({1, {1, 0, 0, 1}})});
    CurveRecord& rec = db.records[0];

    // The paper-grade data for the standard curve is clean.
    StandardSpecialCurve s = standard_special_curve();
    for (auto& [p, e] : s.conductor_exponents) rec.conductor[p] = e;
    CHECK(validate_conductor_exponents(rec).empty());

    // A special record with f_2 below the wild bound fails.
    rec.conductor[Int(2)] = 4;
    CHECK_FALSE(validate_conductor_exponents(rec).empty());
    rec.conductor[Int(2)] = 6;

    // Exceeding the minimal-discriminant exponent is reported (v_2 = 7 here).
    rec.conductor[Int(2)] = 8;
    {
        auto v = validate_conductor_exponents(rec);
        REQUIRE(v.size() == 1);
        CHECK(v[0].p == 2);
    }
    rec.conductor[Int(2)] = 6;

    // Unknown exponents are not validated.
    rec.conductor[Int(5)] = std::nullopt;
    CHECK(validate_conductor_exponents(rec).empty());
}

TEST_CASE("twist queries") {
    // Mixed database: one nonspecial twist pair plus two special groups.
    PicardCurve n1 = PicardCurve::from_nonspecial_short({1, {0, 1, 0, 0, 1}});
    PicardCurve n2 = PicardCurve::from_nonspecial_short({1, {0, 2, 0, 0, 1}});
    PicardCurve n3 = PicardCurve::from_nonspecial_short({1, {1, 0, 1, 0, 1}});
    PicardCurve s1 = PicardCurve::from_special_short({1, {1, 0, 0, 1}});
    PicardCurve s2 = PicardCurve::from_special_short({1, {5, 0, 0, 5}});  // a = 5
    PicardCurve s3 = PicardCurve::from_special_short({1, {-3, 0, 6, 0, 1}});
    Database db = db_build({n1, n2, n3, s1, s2, s3});
    REQUIRE(db.records.size() == 6);
    CHECK(db_validate(db).empty());

    std::vector<size_t> tn = db_query_twists(db, n1);
    CHECK(tn.size() == 2);
    for (size_t i : tn) CHECK(db.records[i].kind == CurveKind::nonspecial);
    CHECK(db_query_twists(db, n3).size() == 1);

    std::vector<size_t> ts = db_query_twists(db, s1);
    CHECK(ts.size() == 2);  // s1 and its a=5 companion; s3 is a different class
    for (size_t i : ts) CHECK(db.records[i].kind == CurveKind::special);
    CHECK(db_query_twists(db, s3).size() == 1);

    // Twist query with a curve that is not stored but whose class is.
    PicardCurve probe = PicardCurve::from_special_short({1, {7, 0, 0, 7}});  // a = 7
    CHECK(db_query_twists(db, probe).size() == 2);
}

TEST_CASE("special twist sub-database: three families build cleanly") {
    // Building records for all 800 special curves takes several minutes, so
    // this case covers a representative slice: both size-16 families and one
    // size-32 family.  The full count of 800 and the per-family sizes over
    // the whole list are checked (cheaply) in the special-class suite.
    std::vector<SpecialShort> all = enumerate_special_twists_23();
    REQUIRE(all.size() == 800);
    const Poly g_self1{0, 1, 0, 0, 1};            // self-paired, 16 twists
    const Poly g_self2{-12, 32, -12, 0, 1};       // self-paired, 16 twists
    const Poly g_pair{0, 2, 0, 0, 1};             // paired family, 32 twists
    std::vector<PicardCurve> curves;
    for (const SpecialShort& m : all) {
        Poly g = poly_monic(m.f);
        if (g == g_self1 || g == g_self2 || g == g_pair)
            curves.push_back(PicardCurve::from_special_short(m));
    }
    REQUIRE(curves.size() == 64);
    Database db = db_build(curves);
    CHECK(db.records.size() == 64);
    CHECK(db_validate(db).empty());
    // Twist groups partition the records into the three families with the
    // documented sizes.
    std::vector<size_t> sizes;
    for (auto& [key, members] : db.twist_index) sizes.push_back(members.size());
    std::sort(sizes.begin(), sizes.end());
    REQUIRE(sizes.size() == 3);
    CHECK(sizes[0] == 16);
    CHECK(sizes[1] == 16);
    CHECK(sizes[2] == 32);
    // The standard curve's orbit.
    PicardCurve std_curve = PicardCurve::from_special_short({1, {1, 0, 0, 1}});
    CHECK(db_query_twists(db, std_curve).size() == 16);
    // Every record is bad only inside {2,3}.
    CHECK(db_query_bad_primes(db, {Int(2), Int(3)}).size() == 64);
}

TEST_CASE("rational-branch enumeration") {
    std::vector<Int> S{2, 3};
    std::vector<NonspecialShort> curves = enumerate_rational_branch_curves(S, 8);
    CHECK(!curves.empty());
    // Filter property: good reduction at small primes outside S.
    for (size_t i = 0; i < curves.size(); ++i)
        for (int p : {5, 7, 11, 13}) {
            INFO("curve " << i << " p " << p);
            CHECK(has_good_reduction_nonspecial(curves[i], Int(p)).good);
        }
    // No duplicates.
    for (size_t i = 0; i < curves.size(); ++i)
        for (size_t j = i + 1; j < curves.size(); ++j)
            CHECK_FALSE(is_isomorphic_Q(curves[i], curves[j]).isomorphic);
    // Stability under doubling the exponent bound.
    std::vector<NonspecialShort> again = enumerate_rational_branch_curves(S, 16);
    REQUIRE(again.size() == curves.size());
    for (size_t i = 0; i < curves.size(); ++i) {
        CHECK(again[i].b == curves[i].b);
        CHECK(again[i].f == curves[i].f);
    }
    // S = {3}: the S-unit pool is empty.
    CHECK(enumerate_rational_branch_curves({Int(3)}, 10).empty());
    CHECK_THROWS_AS(enumerate_rational_branch_curves({Int(2)}, 10), std::invalid_argument);
}
