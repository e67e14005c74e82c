#pragma once

// Curve database: records with reduced and minimal models, derived
// invariants, discriminant and bad-prime data, optional per-prime conductor
// exponents, plus build / query / validate operations and a line-delimited
// text format with byte-identical round-trips.

#include "picard/invariants.hpp"
#include "picard/models.hpp"
#include "picard/reduction.hpp"

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace picard {

// Reduced presentation stored in a record: y^3 = c f(x) with f the monic
// normal form x^4 + c2 x^2 + c3 x + c4 (nonspecial), or
// x^4 = a (y^4 + 6b y^2 + c y - 3b^2) (special).
struct ReducedNonspecial {
    Rat c;
    Poly f;
};
struct ReducedSpecial {
    Rat a, b, c;
};

struct CurveRecord {
    std::string label;  // "<|disc|>.<p1>e<e1>_<p2>e<e2>.<index>"
    CurveKind kind = CurveKind::nonspecial;
    std::variant<ReducedNonspecial, ReducedSpecial> reduced;
    PicardCurve minimal_short;  // short-shape minimal model
    PicardCurve minimal_long;   // long-shape presentation of the same model
    WeightedPoint wp;           // (0, 0, 1) marker for special records
    QbarClass qbar;
    Rat disc;                                       // minimal plane discriminant
    std::vector<std::pair<Int, long>> disc_factors;  // positive-exponent primes
    std::vector<Int> bad;
    std::map<Int, std::optional<long>> conductor;  // nullable per prime
    bool conductor_checked = false;  // all present f_p <= v_p(disc) verified
    std::string provenance;
};

struct Database {
    std::vector<CurveRecord> records;
    // Canonical class key -> record position (one record per key).
    std::map<std::string, size_t> q_index;
    // Twist-class key -> record positions.
    std::map<std::string, std::vector<size_t>> twist_index;
};

// Canonical Q-class key of a record ("wp:..." for nonspecial, "sp:..." for
// special) and its twist-class key.
std::string q_class_key(const CurveRecord& rec);

// Derived fields for one input curve (no label assigned yet).
CurveRecord make_record(const PicardCurve& c, const std::string& provenance = "input");

// Build: derive all fields, deduplicate by Q-isomorphism (across the two
// Weierstrass presentations), sort deterministically, assign labels, index.
Database db_build(const std::vector<PicardCurve>& curves);

// Exact Q-isomorphism lookup.
std::optional<size_t> db_find(const Database& db, const PicardCurve& c);
// All records in the twist class of c (records isomorphic to c over the
// algebraic closure through the stored twist grouping).
std::vector<size_t> db_query_twists(const Database& db, const PicardCurve& c);
std::vector<size_t> db_query_weighted_point(const Database& db, const WeightedPoint& w);
// Subset semantics: records whose bad primes all lie in S.
std::vector<size_t> db_query_bad_primes(const Database& db, std::vector<Int> S);

// Bound checks for the stored conductor exponents (present entries only):
// the shape bounds of the reduction module plus f_p <= v_p(disc^min).
std::vector<ConductorViolation> validate_conductor_exponents(const CurveRecord& rec);
// Whole-database validation: conductor checks plus index consistency.
std::vector<std::string> db_validate(const Database& db);

// Tagged one-line model serialization ("ns:b|f", "ss:b|f", "nl:a0|a1|a2|a4",
// "sl:a0|a1|a2|a3|a4") and its validating inverse.
std::string serialize_model(const PicardCurve& c);
PicardCurve parse_model_string(const std::string& s);

// Line format: fixed field order, ';'-separated key=value pairs, rationals
// as canonical "num/den" strings.
std::string serialize_record(const CurveRecord& rec);
CurveRecord parse_record(const std::string& line);
std::string serialize_database(const Database& db);
Database parse_database(const std::string& text);

// All curves y^3 = f with f splitting into four rational roots {0, 1, l3, l4}
// built from S-unit-equation solutions with l3 - l4 an S-unit, expanded by
// twists with good reduction outside S; S must contain 3.  `bound` limits
// the exponent search of the S-unit solver.
std::vector<NonspecialShort> enumerate_rational_branch_curves(const std::vector<Int>& S,
                                                              long bound);

}  // namespace picard
