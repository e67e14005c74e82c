// Command-line interface: S-unit and Hilbert-symbol utilities, binary
// quartic operations, plane-quartic discriminants, model minimization,
// good-reduction tests, invariants and twists, the special-curve
// classification, and the curve database.

#include "CLI11.hpp"
#include "picard/arith.hpp"
#include "picard/db.hpp"
#include "picard/invariants.hpp"
#include "picard/models.hpp"
#include "picard/parse.hpp"
#include "picard/reduction.hpp"
#include "picard/special.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace picard;

namespace {

std::vector<Int> parse_primes(const std::string& s) {
    std::vector<Int> out;
    std::stringstream ss(s);
    std::string piece;
    while (std::getline(ss, piece, ',')) {
        if (piece.empty()) continue;
        Int p(piece);
        if (p < 2 || !is_prime(p)) throw std::invalid_argument("not a prime: " + piece);
        out.push_back(p);
    }
    if (out.empty()) throw std::invalid_argument("empty prime list");
    return out;
}

Rat parse_rat_arg(const std::string& s) {
    Rat q(s);
    q.canonicalize();
    return q;
}

// Univariate literal in whichever single variable it uses.
Poly parse_any_poly(const std::string& s) {
    for (char v : {'x', 'y', 'z'}) {
        try {
            return parse_poly_in(s, v);
        } catch (const std::invalid_argument&) {
        }
    }
    throw std::invalid_argument("not a univariate polynomial: '" + s + "'");
}

std::string poly_out(const Poly& f) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < f.size(); ++i) os << (i ? "," : "") << f[i].get_str();
    os << "]";
    return os.str();
}

std::string reason_out(ReasonCode r) {
    switch (r) {
        case ReasonCode::disc_unit: return "discriminant-unit-test";
        case ReasonCode::c_valuation: return "scalar-valuation";
        case ReasonCode::odd_3_valuation: return "residue-characteristic-3";
        case ReasonCode::a_mod_4: return "scalar-valuation-mod-4";
        case ReasonCode::ramified_splitting_field: return "ramified-splitting-field";
        case ReasonCode::wild_p2_special: return "wild-at-2";
    }
    return "?";
}

void print_factorization(const Rat& v, const Int& bound) {
    if (v == 0) {
        std::cout << "0\n";
        return;
    }
    Int n = num(v) < 0 ? Int(-num(v)) : num(v);
    Int d = den(v);
    std::ostringstream os;
    if (v < 0) os << "-";
    bool first = true;
    auto emit = [&](const Int& p, long e) {
        if (!first) os << " * ";
        first = false;
        os << p.get_str();
        if (e != 1) os << "^" << e;
    };
    for (const Int* part : {&n, &d}) {
        Int m = *part;
        long sgn = (part == &d) ? -1 : 1;
        for (Int p = 2; p <= bound && m > 1; ++p) {
            if (!is_prime(p)) continue;
            long e = 0;
            while (m % p == 0) {
                m /= p;
                ++e;
            }
            if (e) emit(p, sgn * e);
            if (p * p > m && m > 1) {
                emit(m, sgn);  // remaining part is prime
                m = 1;
            }
        }
        if (m > 1) {
            if (!first) os << " * ";
            first = false;
            os << "cofactor(" << (sgn < 0 ? "1/" : "") << m.get_str() << ")";
        }
    }
    if (first) os << "1";
    std::cout << os.str() << "\n";
}

int run(int argc, char** argv) {
    CLI::App app{"exact arithmetic for plane-quartic curve models"};
    app.require_subcommand(1);

    // --- sunit ---
    auto* sunit = app.add_subcommand("sunit", "solve the S-unit equation l + m = 1");
    std::string sunit_primes = "2,3";
    long sunit_bound = 10;
    sunit->add_option("--primes", sunit_primes, "comma-separated primes");
    sunit->add_option("--bound", sunit_bound, "exponent bound");
    sunit->callback([&] {
        for (const Rat& l : solve_sunit_equation(parse_primes(sunit_primes), sunit_bound))
            std::cout << l.get_str() << "\n";
    });

    // --- hilbert ---
    auto* hil = app.add_subcommand("hilbert", "local Hilbert symbols of (a, b)");
    std::string hil_a, hil_b;
    hil->add_option("-a", hil_a)->required();
    hil->add_option("-b", hil_b)->required();
    hil->callback([&] {
        Rat a = parse_rat_arg(hil_a), b = parse_rat_arg(hil_b);
        bool nontrivial = false;
        int s = hilbert_symbol(a, b, std::nullopt);
        std::cout << "inf " << s << "\n";
        if (s < 0) nontrivial = true;
        std::set<Int> primes{Int(2)};
        for (const Rat& v : {a, b})
            for (const Int& p : support(v)) primes.insert(p);
        for (const Int& p : primes) {
            s = hilbert_symbol(a, b, p);
            std::cout << p.get_str() << " " << s << "\n";
            if (s < 0) nontrivial = true;
        }
        std::cout << "class " << (nontrivial ? "nontrivial" : "trivial") << "\n";
    });

    // --- quartic ---
    auto* quartic = app.add_subcommand("quartic", "binary quartic operations");
    quartic->require_subcommand(1);
    std::string q_poly, q_poly2;
    std::string q_prime = "2";
    auto add_poly_opts = [&](CLI::App* sub, bool two = false) {
        sub->add_option("--poly", q_poly, "polynomial literal")->required();
        if (two) sub->add_option("--poly2", q_poly2, "second polynomial")->required();
    };
    auto* q_reduce = quartic->add_subcommand("reduce", "reduce a monic quartic at a prime");
    add_poly_opts(q_reduce);
    q_reduce->add_option("--prime", q_prime);
    q_reduce->callback([&] {
        auto [fr, A] = reduce_quartic(parse_any_poly(q_poly), Int(q_prime));
        std::cout << "reduced " << poly_out(fr) << "\n";
        std::cout << "map (" << A.a.get_str() << "," << A.b.get_str() << "," << A.c.get_str()
                  << "," << A.d.get_str() << ")\n";
    });
    auto* q_disc = quartic->add_subcommand("disc", "invariants I, J and discriminant");
    add_poly_opts(q_disc);
    q_disc->callback([&] {
        BinaryQuartic G = BinaryQuartic::from_poly(parse_any_poly(q_poly));
        std::cout << "I " << invariant_I(G).get_str() << "\n";
        std::cout << "J " << invariant_J(G).get_str() << "\n";
        std::cout << "disc " << disc_binary(G).get_str() << "\n";
    });
    auto* q_shadow = quartic->add_subcommand("shadow", "Hessian shadow of a special polynomial");
    add_poly_opts(q_shadow);
    q_shadow->callback(
        [&] { std::cout << poly_out(hessian_shadow(parse_any_poly(q_poly))) << "\n"; });
    auto* q_sym = quartic->add_subcommand("symmetries", "rational symmetries");
    add_poly_opts(q_sym);
    q_sym->callback([&] {
        for (const Transport& T : rational_symmetries(parse_any_poly(q_poly)))
            std::cout << "map (" << T.A.a.get_str() << "," << T.A.b.get_str() << ","
                      << T.A.c.get_str() << "," << T.A.d.get_str() << ") mu "
                      << T.mu.get_str() << "\n";
    });
    auto* q_equiv = quartic->add_subcommand("equiv", "projective equivalence of two quartics");
    add_poly_opts(q_equiv, true);
    q_equiv->callback([&] {
        auto T = are_equivalent(parse_any_poly(q_poly), parse_any_poly(q_poly2));
        if (!T) {
            std::cout << "not equivalent\n";
            return;
        }
        std::cout << "equivalent map (" << T->A.a.get_str() << "," << T->A.b.get_str() << ","
                  << T->A.c.get_str() << "," << T->A.d.get_str() << ") mu " << T->mu.get_str()
                  << "\n";
    });

    // --- disc ---
    auto* disc = app.add_subcommand("disc", "discriminant of a plane quartic");
    std::string disc_ternary_lit;
    std::string disc_bound = "1000000";
    disc->add_option("--ternary", disc_ternary_lit, "homogeneous quartic literal")->required();
    disc->add_option("--bound", disc_bound, "trial-division bound");
    disc->callback([&] {
        Rat D = disc_ternary(parse_ternary_quartic(disc_ternary_lit));
        std::cout << "disc " << D.get_str() << "\n";
        print_factorization(D, Int(disc_bound));
    });

    // --- minimize ---
    auto* mini = app.add_subcommand("minimize", "minimize the discriminant of a curve model");
    std::string mini_curve, mini_prime;
    int mini_depth = 3;
    mini->add_option("--curve", mini_curve, "curve literal")->required();
    mini->add_option("--prime", mini_prime, "only this prime");
    mini->add_option("--depth", mini_depth, "search depth");
    mini->callback([&] {
        PicardCurve c = parse_curve_literal(mini_curve);
        if (!mini_prime.empty()) {
            PicardCurve m = minimize_at_prime(c, Int(mini_prime), mini_depth);
            std::cout << "model " << serialize_model(m) << "\n";
            std::cout << "disc " << m.plane_disc().get_str() << "\n";
            print_factorization(m.plane_disc(), Int(1000000));
            return;
        }
        MinimalModelReport rep = global_minimal_model(c, mini_depth);
        std::cout << "model " << serialize_model(rep.curve) << "\n";
        std::cout << "disc " << rep.disc.get_str() << "\n";
        print_factorization(rep.disc, Int(1000000));
        for (const PrimeExponent& pe : rep.exponents)
            std::cout << "p " << pe.p.get_str() << " e " << pe.e << " "
                      << (pe.certified ? "minimal" : "local-search-only") << "\n";
    });

    // --- goodred ---
    auto* gr = app.add_subcommand("goodred", "good-reduction tests at primes");
    std::string gr_curve, gr_primes = "2,3,5,7";
    gr->add_option("--curve", gr_curve)->required();
    gr->add_option("--primes", gr_primes);
    gr->callback([&] {
        PicardCurve c = parse_curve_literal(gr_curve);
        bool special_shape = std::holds_alternative<SpecialShort>(c.model) ||
                             std::holds_alternative<SpecialLong>(c.model);
        NonspecialShort ns;
        SpecialShort ss;
        if (std::holds_alternative<NonspecialShort>(c.model))
            ns = std::get<NonspecialShort>(c.model);
        else if (std::holds_alternative<NonspecialLong>(c.model))
            ns = long_to_short_nonspecial(std::get<NonspecialLong>(c.model));
        else if (std::holds_alternative<SpecialShort>(c.model))
            ss = std::get<SpecialShort>(c.model);
        else
            ss = long_to_short_special(std::get<SpecialLong>(c.model));
        for (const Int& p : parse_primes(gr_primes)) {
            ReductionVerdict v = special_shape ? has_good_reduction_special(ss, p)
                                               : has_good_reduction_nonspecial(ns, p);
            std::cout << p.get_str() << " " << (v.good ? "good" : "bad") << " "
                      << reason_out(v.reason) << "\n";
        }
        std::cout << "bad-primes";
        for (const Int& p : bad_primes(c)) std::cout << " " << p.get_str();
        std::cout << "\n";
    });

    // --- invariants ---
    auto* inv = app.add_subcommand("invariants", "weighted point, branch tuple, automorphisms");
    std::string inv_curve;
    inv->add_option("--curve", inv_curve)->required();
    inv->callback([&] {
        PicardCurve c = parse_curve_literal(inv_curve);
        std::cout << "kind " << (c.kind == CurveKind::special ? "special" : "nonspecial")
                  << "\n";
        if (c.kind == CurveKind::special) {
            std::cout << "qbar 0,0,1\n";
            return;
        }
        NonspecialShort m = std::holds_alternative<NonspecialShort>(c.model)
                                ? std::get<NonspecialShort>(c.model)
                                : long_to_short_nonspecial(std::get<NonspecialLong>(c.model));
        WeightedPoint w = weighted_point(m);
        std::cout << "weighted-point " << w.c2.get_str() << "," << w.c3.get_str() << ","
                  << w.c4.get_str() << "\n";
        QbarClass q = qbar_class(m);
        std::cout << "qbar " << q.t[0].get_str() << "," << q.t[1].get_str() << ","
                  << q.t[2].get_str() << "\n";
        AutType t = automorphism_type(m);
        std::cout << "automorphisms Z"
                  << (t == AutType::Z3 ? 3 : (t == AutType::Z6 ? 6 : 9)) << "\n";
    });

    // --- twists ---
    auto* tw = app.add_subcommand("twists", "twists with good reduction outside S");
    std::string tw_curve, tw_primes = "2,3";
    tw->add_option("--curve", tw_curve)->required();
    tw->add_option("--primes", tw_primes);
    tw->callback([&] {
        PicardCurve c = parse_curve_literal(tw_curve);
        if (!std::holds_alternative<NonspecialShort>(c.model))
            throw std::invalid_argument("twists: expected a short cubic-shape curve");
        for (const NonspecialShort& t : twists_with_good_reduction_outside(
                 std::get<NonspecialShort>(c.model), parse_primes(tw_primes)))
            std::cout << serialize_model(PicardCurve::from_nonspecial_short(t)) << "\n";
    });

    // --- special ---
    auto* sp = app.add_subcommand("special", "classification of fourth-power-shape curves");
    sp->require_subcommand(1);
    auto* sp_cls = sp->add_subcommand("classify", "the 26 polynomial classes");
    sp_cls->callback([&] {
        for (const SpecialClassEntry& e : classify_special_good_outside_23().entries) {
            std::cout << "row " << e.row << " " << (e.left ? "L" : "R") << " "
                      << poly_out(e.g) << " self " << (e.self_paired ? 1 : 0) << " scal";
            for (const Rat& s : e.scal) std::cout << " " << s.get_str();
            std::cout << "\n";
        }
    });
    bool sp_records = false;
    auto* sp_tw = sp->add_subcommand("twists", "the 800 curves with bad reduction in {2,3}");
    sp_tw->add_flag("--records", sp_records, "emit full database records (slow)");
    sp_tw->callback([&] {
        std::vector<SpecialShort> all = enumerate_special_twists_23();
        if (!sp_records) {
            for (const SpecialShort& m : all)
                std::cout << serialize_model(PicardCurve::from_special_short(m)) << "\n";
            return;
        }
        std::vector<PicardCurve> curves;
        for (const SpecialShort& m : all) curves.push_back(PicardCurve::from_special_short(m));
        std::cout << serialize_database(db_build(curves));
    });
    std::string sp_poly;
    auto* sp_sh = sp->add_subcommand("shadow", "Hessian shadow of a special polynomial");
    sp_sh->add_option("--poly", sp_poly)->required();
    sp_sh->callback([&] { std::cout << poly_out(hessian_shadow(parse_any_poly(sp_poly))) << "\n"; });

    // --- db (and the top-level validate alias) ---
    auto* db = app.add_subcommand("db", "curve database");
    db->require_subcommand(1);
    std::string db_in, db_out, db_file, db_curve, db_badprimes;
    bool db_twists = false;
    auto* dbuild = db->add_subcommand("build", "build a database from curve literals");
    dbuild->add_option("--in", db_in, "input file, one curve literal per line")->required();
    dbuild->add_option("--out", db_out, "output database file")->required();
    dbuild->callback([&] {
        std::ifstream in(db_in);
        if (!in) throw std::invalid_argument("cannot open " + db_in);
        std::vector<PicardCurve> curves;
        std::string line;
        while (std::getline(in, line)) {
            size_t a = line.find_first_not_of(" \t");
            if (a == std::string::npos || line[a] == '#') continue;
            curves.push_back(parse_curve_literal(line));
        }
        Database built = db_build(curves);
        std::ofstream out(db_out);
        out << serialize_database(built);
        std::cout << "records " << built.records.size() << "\n";
    });
    auto load_db = [](const std::string& path) {
        std::ifstream in(path);
        if (!in) throw std::invalid_argument("cannot open " + path);
        std::stringstream ss;
        ss << in.rdbuf();
        return parse_database(ss.str());
    };
    auto* dquery = db->add_subcommand("query", "query a database");
    dquery->add_option("--db", db_file)->required();
    dquery->add_option("--curve", db_curve, "curve literal");
    dquery->add_flag("--twists", db_twists, "return the whole twist class");
    dquery->add_option("--bad-primes", db_badprimes, "subset query, e.g. 2,3");
    dquery->callback([&] {
        Database loaded = load_db(db_file);
        std::vector<size_t> hits;
        if (!db_badprimes.empty()) {
            hits = db_query_bad_primes(loaded, parse_primes(db_badprimes));
        } else if (!db_curve.empty()) {
            PicardCurve c = parse_curve_literal(db_curve);
            if (db_twists) {
                hits = db_query_twists(loaded, c);
            } else if (auto h = db_find(loaded, c)) {
                hits.push_back(*h);
            }
        } else {
            throw std::invalid_argument("query needs --curve or --bad-primes");
        }
        for (size_t i : hits) std::cout << serialize_record(loaded.records[i]) << "\n";
    });
    int validate_rc = 0;
    auto validate_action = [&](const std::string& path) {
        Database loaded = load_db(path);
        std::vector<std::string> problems = db_validate(loaded);
        for (const std::string& msg : problems) std::cout << msg << "\n";
        std::cout << (problems.empty() ? "ok" : "violations") << " " << loaded.records.size()
                  << " records\n";
        if (!problems.empty()) validate_rc = 1;
    };
    auto* dvalidate = db->add_subcommand("validate", "validate a database");
    dvalidate->add_option("--db", db_file)->required();
    dvalidate->callback([&] { validate_action(db_file); });
    auto* topval = app.add_subcommand("validate", "validate a database");
    std::string topval_file;
    topval->add_option("--db", topval_file)->required();
    topval->callback([&] { validate_action(topval_file); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    return validate_rc;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
