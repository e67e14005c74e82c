#include "picard/db.hpp"

#include "picard/arith.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace picard {

namespace {

Poly pad(Poly f, size_t n) {
    if (f.size() < n) f.resize(n, Rat(0));
    return f;
}

std::string rat_str(const Rat& q) { return q.get_str(); }

Rat parse_rat(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("parse_rat: empty");
    Rat q(s);
    q.canonicalize();
    return q;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

std::string poly_csv(const Poly& f) {
    std::string out;
    for (size_t i = 0; i < f.size(); ++i) {
        if (i) out += ",";
        out += rat_str(f[i]);
    }
    return out;
}

Poly parse_poly_csv(const std::string& s) {
    Poly out;
    if (s.empty()) return out;
    for (auto& piece : split(s, ',')) out.push_back(parse_rat(piece));
    return out;
}

NonspecialShort as_nonspecial_short(const PicardCurve& c) {
    if (std::holds_alternative<NonspecialShort>(c.model))
        return std::get<NonspecialShort>(c.model);
    if (std::holds_alternative<NonspecialLong>(c.model))
        return long_to_short_nonspecial(std::get<NonspecialLong>(c.model));
    throw std::invalid_argument("expected a cubic-shape model");
}

bool has_special_shape(const PicardCurve& c) {
    return std::holds_alternative<SpecialShort>(c.model) ||
           std::holds_alternative<SpecialLong>(c.model);
}

SpecialShort as_special_short(const PicardCurve& c) {
    if (std::holds_alternative<SpecialShort>(c.model)) return std::get<SpecialShort>(c.model);
    if (std::holds_alternative<SpecialLong>(c.model))
        return long_to_short_special(std::get<SpecialLong>(c.model));
    // A special curve presented in the cubic shape: the normal form is
    // y^3 = x^4 + c4, i.e. x^4 = y^3 - c4.
    std::array<Rat, 3> t = tschirnhausen_normal_form(as_nonspecial_short(c));
    if (t[0] != 0 || t[1] != 0)
        throw std::invalid_argument("as_special_short: curve is not special");
    return SpecialShort{Rat(1), {-t[2], Rat(0), Rat(0), Rat(1)}};
}

// Canonical (a, b, c) presentation of a fourth-power-shape curve.
ReducedSpecial reduce_special(const SpecialShort& m) {
    Poly f = trim(m.f);
    Rat a = lead(f) / m.b;
    Poly g = poly_monic(f);
    if (deg(g) == 3) {
        // Move the root at infinity to a finite position: translate until the
        // origin is off the root set, then swap the roles of y and z.
        Rat t = 0;
        while (poly_eval(g, t) == 0) t += 1;
        if (t != 0) g = poly_compose_linear(g, Rat(1), t);
        Poly gp = pad(g, 5), rev(5, Rat(0));
        for (int i = 0; i <= 4; ++i) rev[i] = gp[4 - i];
        a *= rev[4];  // new leading coefficient before monicization
        g = poly_monic(trim(rev));
    }
    g = pad(g, 5);
    // Depress the cubic term; the family constant -3b^2 is then automatic
    // from the vanishing of the invariant I.
    Poly h = pad(poly_compose_linear(g, Rat(1), -g[3] / 4), 5);
    Rat b = h[2] / 6, cc = h[1];
    if (h[3] != 0 || h[0] != -3 * b * b)
        throw std::logic_error("reduce_special: normal form failed");
    // Scaling y -> ly sends (a, b, c) to (a l^4, b / l^2, c / l^3); extract
    // the canonical prime content and fix c >= 0 with l = -1.
    std::set<Int> primes;
    for (const Rat& v : {b, cc})
        if (v != 0)
            for (auto& [p, e] : factor_rat(v)) primes.insert(p);
    for (const Int& p : primes) {
        long e;
        if (b == 0)
            e = val_rat(cc, p) >= 0 ? val_rat(cc, p) / 3 : -((-val_rat(cc, p) + 2) / 3);
        else if (cc == 0)
            e = val_rat(b, p) >= 0 ? val_rat(b, p) / 2 : -((-val_rat(b, p) + 1) / 2);
        else {
            long eb = val_rat(b, p) >= 0 ? val_rat(b, p) / 2 : -((-val_rat(b, p) + 1) / 2);
            long ec = val_rat(cc, p) >= 0 ? val_rat(cc, p) / 3 : -((-val_rat(cc, p) + 2) / 3);
            e = std::min(eb, ec);
        }
        if (e == 0) continue;
        Rat l = pow_rat(Rat(p), e);
        b /= l * l;
        cc /= l * l * l;
        a *= pow_rat(l, 4);
    }
    if (cc < 0) cc = -cc;  // l = -1 fixes b and a
    a = nth_power_free_part(a, 4).first;
    return ReducedSpecial{a, b, cc};
}

SpecialShort expand_reduced(const ReducedSpecial& r) {
    Poly g{-3 * r.b * r.b, r.c, 6 * r.b, Rat(0), Rat(1)};
    for (auto& co : g) co *= r.a;
    return SpecialShort{Rat(1), trim(g)};
}

PicardCurve to_long_presentation(const PicardCurve& c) {
    if (std::holds_alternative<NonspecialLong>(c.model) ||
        std::holds_alternative<SpecialLong>(c.model))
        return c;
    if (std::holds_alternative<NonspecialShort>(c.model)) {
        const auto& m = std::get<NonspecialShort>(c.model);
        return PicardCurve::from_nonspecial_long({m.b, {}, {}, m.f});
    }
    const auto& m = std::get<SpecialShort>(c.model);
    return PicardCurve::from_special_long({m.b, Rat(0), Rat(0), Rat(0), m.f});
}

PicardCurve to_short_presentation(const PicardCurve& c) {
    if (std::holds_alternative<NonspecialShort>(c.model) ||
        std::holds_alternative<SpecialShort>(c.model))
        return c;
    if (std::holds_alternative<NonspecialLong>(c.model))
        return PicardCurve::from_nonspecial_short(
            long_to_short_nonspecial(std::get<NonspecialLong>(c.model)));
    return PicardCurve::from_special_short(
        long_to_short_special(std::get<SpecialLong>(c.model)));
}

}  // namespace

std::string serialize_model(const PicardCurve& c) {
    std::ostringstream os;
    if (std::holds_alternative<NonspecialShort>(c.model)) {
        const auto& m = std::get<NonspecialShort>(c.model);
        os << "ns:" << rat_str(m.b) << "|" << poly_csv(m.f);
    } else if (std::holds_alternative<SpecialShort>(c.model)) {
        const auto& m = std::get<SpecialShort>(c.model);
        os << "ss:" << rat_str(m.b) << "|" << poly_csv(m.f);
    } else if (std::holds_alternative<NonspecialLong>(c.model)) {
        const auto& m = std::get<NonspecialLong>(c.model);
        os << "nl:" << rat_str(m.a0) << "|" << poly_csv(m.a1) << "|" << poly_csv(m.a2) << "|"
           << poly_csv(m.a4);
    } else {
        const auto& m = std::get<SpecialLong>(c.model);
        os << "sl:" << rat_str(m.a0) << "|" << rat_str(m.a1) << "|" << rat_str(m.a2) << "|"
           << rat_str(m.a3) << "|" << poly_csv(m.a4);
    }
    return os.str();
}

PicardCurve parse_model_string(const std::string& s) {
    size_t colon = s.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("parse_model: missing tag");
    std::string tag = s.substr(0, colon);
    std::vector<std::string> parts = split(s.substr(colon + 1), '|');
    if (tag == "ns" && parts.size() == 2)
        return PicardCurve::from_nonspecial_short(
            {parse_rat(parts[0]), parse_poly_csv(parts[1])});
    if (tag == "ss" && parts.size() == 2)
        return PicardCurve::from_special_short({parse_rat(parts[0]), parse_poly_csv(parts[1])});
    if (tag == "nl" && parts.size() == 4)
        return PicardCurve::from_nonspecial_long({parse_rat(parts[0]), parse_poly_csv(parts[1]),
                                                  parse_poly_csv(parts[2]),
                                                  parse_poly_csv(parts[3])});
    if (tag == "sl" && parts.size() == 5)
        return PicardCurve::from_special_long({parse_rat(parts[0]), parse_rat(parts[1]),
                                               parse_rat(parts[2]), parse_rat(parts[3]),
                                               parse_poly_csv(parts[4])});
    throw std::invalid_argument("parse_model: malformed model '" + s + "'");
}

namespace {

std::string factorization_str(const Rat& disc, const std::vector<std::pair<Int, long>>& fs) {
    std::string out = disc < 0 ? "-" : "";
    if (fs.empty()) return out + "1";
    for (size_t i = 0; i < fs.size(); ++i) {
        if (i) out += "_";
        out += fs[i].first.get_str() + "e" + std::to_string(fs[i].second);
    }
    return out;
}

std::string twist_group_key_nonspecial(const QbarClass& q) {
    return "qb:" + rat_str(q.t[0]) + "," + rat_str(q.t[1]) + "," + rat_str(q.t[2]);
}

// Family polynomial of a special record (monic part of the reduced model).
Poly family_poly(const CurveRecord& rec) {
    const auto& r = std::get<ReducedSpecial>(rec.reduced);
    return {-3 * r.b * r.b, r.c, 6 * r.b, Rat(0), Rat(1)};
}

void build_indexes(Database& db) {
    db.q_index.clear();
    db.twist_index.clear();
    for (size_t i = 0; i < db.records.size(); ++i)
        db.q_index[q_class_key(db.records[i])] = i;
    // Twist grouping: nonspecial by branch tuple; special by equivalence of
    // the family polynomial, keyed by the first member's label.
    std::vector<std::pair<Poly, std::string>> special_groups;
    for (size_t i = 0; i < db.records.size(); ++i) {
        const CurveRecord& rec = db.records[i];
        if (rec.kind == CurveKind::nonspecial) {
            db.twist_index[twist_group_key_nonspecial(rec.qbar)].push_back(i);
            continue;
        }
        Poly g = family_poly(rec);
        std::string key;
        for (auto& [gp, label] : special_groups)
            if (are_equivalent(gp, g)) {
                key = "tg:" + label;
                break;
            }
        if (key.empty()) {
            key = "tg:" + rec.label;
            special_groups.emplace_back(g, rec.label);
        }
        db.twist_index[key].push_back(i);
    }
}

bool conductor_bound_ok(const CurveRecord& rec) {
    for (auto& [p, e] : rec.conductor) {
        if (!e) continue;
        long v = 0;
        for (auto& [q, ve] : rec.disc_factors)
            if (q == p) v = ve;
        if (*e > v) return false;
    }
    return true;
}

}  // namespace

std::string q_class_key(const CurveRecord& rec) {
    if (rec.kind == CurveKind::nonspecial)
        return "wp:" + rat_str(rec.wp.c2) + "," + rat_str(rec.wp.c3) + "," + rat_str(rec.wp.c4);
    const auto& r = std::get<ReducedSpecial>(rec.reduced);
    return "sp:" + rat_str(r.a) + "|" + rat_str(r.b) + "|" + rat_str(r.c);
}

CurveRecord make_record(const PicardCurve& c, const std::string& provenance) {
    CurveRecord rec;
    rec.kind = c.kind;
    rec.provenance = provenance;
    if (c.kind == CurveKind::special) {
        rec.reduced = reduce_special(as_special_short(c));
        rec.wp = WeightedPoint{Rat(0), Rat(0), Rat(1)};
        rec.qbar = QbarClass{{Rat(0), Rat(0), Rat(1)}};
    }
    MinimalModelReport rep = global_minimal_model(c);
    rec.minimal_short = to_short_presentation(rep.curve);
    rec.minimal_long = to_long_presentation(rep.curve);
    rec.disc = rep.disc;
    for (auto& [p, e] : factor_rat(rec.disc))
        if (e != 0) rec.disc_factors.emplace_back(p, e);
    rec.bad = bad_primes(rep.curve);
    if (c.kind == CurveKind::nonspecial) {
        NonspecialShort ns = as_nonspecial_short(rec.minimal_short);
        rec.wp = weighted_point(ns);
        rec.qbar = qbar_class(ns);
        rec.reduced =
            ReducedNonspecial{Rat(1), {rec.wp.c4, rec.wp.c3, rec.wp.c2, Rat(0), Rat(1)}};
    }
    rec.conductor_checked = conductor_bound_ok(rec);
    return rec;
}

Database db_build(const std::vector<PicardCurve>& curves) {
    std::vector<CurveRecord> recs;
    for (const PicardCurve& c : curves) recs.push_back(make_record(c));
    // Deterministic order before deduplication and labeling.
    auto abs_disc = [](const CurveRecord& r) { return r.disc < 0 ? -r.disc : r.disc; };
    std::stable_sort(recs.begin(), recs.end(), [&](const CurveRecord& x, const CurveRecord& y) {
        if (abs_disc(x) != abs_disc(y)) return abs_disc(x) < abs_disc(y);
        return serialize_record(x) < serialize_record(y);
    });
    Database db;
    for (CurveRecord& rec : recs) {
        bool dup = false;
        if (rec.kind == CurveKind::nonspecial) {
            for (const CurveRecord& kept : db.records)
                if (kept.kind == CurveKind::nonspecial && kept.wp == rec.wp) dup = true;
        } else {
            SpecialShort m = expand_reduced(std::get<ReducedSpecial>(rec.reduced));
            for (const CurveRecord& kept : db.records)
                if (kept.kind == CurveKind::special &&
                    is_isomorphic_special(m, expand_reduced(std::get<ReducedSpecial>(kept.reduced))))
                    dup = true;
        }
        if (!dup) db.records.push_back(std::move(rec));
    }
    // Labels: |disc| . factorization . counter-within-|disc|.
    std::map<std::string, int> counters;
    for (CurveRecord& rec : db.records) {
        Rat mag = rec.disc < 0 ? -rec.disc : rec.disc;
        std::string head = rat_str(mag);
        rec.label = head + "." + factorization_str(Rat(1), rec.disc_factors) + "." +
                    std::to_string(counters[head]++);
    }
    build_indexes(db);
    return db;
}

std::optional<size_t> db_find(const Database& db, const PicardCurve& c) {
    if (c.kind == CurveKind::nonspecial) {
        WeightedPoint w = weighted_point(as_nonspecial_short(to_short_presentation(c)));
        CurveRecord probe;
        probe.kind = CurveKind::nonspecial;
        probe.wp = w;
        auto it = db.q_index.find(q_class_key(probe));
        if (it == db.q_index.end()) return std::nullopt;
        return it->second;
    }
    SpecialShort m = as_special_short(to_short_presentation(c));
    ReducedSpecial r = reduce_special(m);
    CurveRecord probe;
    probe.kind = CurveKind::special;
    probe.reduced = r;
    auto it = db.q_index.find(q_class_key(probe));
    if (it != db.q_index.end()) return it->second;
    for (size_t i = 0; i < db.records.size(); ++i)
        if (db.records[i].kind == CurveKind::special &&
            is_isomorphic_special(m, expand_reduced(std::get<ReducedSpecial>(
                                         db.records[i].reduced))))
            return i;
    return std::nullopt;
}

std::vector<size_t> db_query_twists(const Database& db, const PicardCurve& c) {
    std::optional<size_t> hit = db_find(db, c);
    if (hit) {
        for (auto& [key, members] : db.twist_index)
            if (std::find(members.begin(), members.end(), *hit) != members.end())
                return members;
        return {*hit};
    }
    // Not stored: match the class directly.
    if (c.kind == CurveKind::nonspecial) {
        QbarClass q = qbar_class(as_nonspecial_short(to_short_presentation(c)));
        auto it = db.twist_index.find(twist_group_key_nonspecial(q));
        if (it == db.twist_index.end()) return {};
        return it->second;
    }
    Poly g = poly_monic(trim(as_special_short(to_short_presentation(c)).f));
    for (auto& [key, members] : db.twist_index) {
        if (key.rfind("tg:", 0) != 0 || members.empty()) continue;
        if (are_equivalent(g, family_poly(db.records[members.front()]))) return members;
    }
    return {};
}

std::vector<size_t> db_query_weighted_point(const Database& db, const WeightedPoint& w) {
    std::vector<size_t> out;
    for (size_t i = 0; i < db.records.size(); ++i)
        if (db.records[i].wp == w) out.push_back(i);
    return out;
}

std::vector<size_t> db_query_bad_primes(const Database& db, std::vector<Int> S) {
    std::sort(S.begin(), S.end());
    std::vector<size_t> out;
    for (size_t i = 0; i < db.records.size(); ++i) {
        bool inside = std::all_of(
            db.records[i].bad.begin(), db.records[i].bad.end(),
            [&](const Int& p) { return std::binary_search(S.begin(), S.end(), p); });
        if (inside) out.push_back(i);
    }
    return out;
}

std::vector<ConductorViolation> validate_conductor_exponents(const CurveRecord& rec) {
    std::map<Int, long> present;
    for (auto& [p, e] : rec.conductor)
        if (e) present[p] = *e;
    std::vector<ConductorViolation> out = validate_conductor_bounds(rec.kind, present);
    for (auto& [p, e] : present) {
        long v = 0;
        for (auto& [q, ve] : rec.disc_factors)
            if (q == p) v = ve;
        if (e > v)
            out.push_back({p, "conductor exponent exceeds the minimal discriminant exponent"});
    }
    return out;
}

std::vector<std::string> db_validate(const Database& db) {
    std::vector<std::string> out;
    std::set<std::string> labels;
    for (const CurveRecord& rec : db.records) {
        if (!labels.insert(rec.label).second)
            out.push_back(rec.label + ": duplicate label");
        for (const ConductorViolation& v : validate_conductor_exponents(rec))
            out.push_back(rec.label + ": " + v.message +
                          (v.p == 0 ? "" : " (p = " + v.p.get_str() + ")"));
        if (!conductor_bound_ok(rec) && rec.conductor_checked)
            out.push_back(rec.label + ": checked flag inconsistent with stored exponents");
        // Factorization consistent with the stored minimal model.
        Rat prod = rec.disc < 0 ? Rat(-1) : Rat(1);
        for (auto& [p, e] : rec.disc_factors) prod *= pow_rat(Rat(p), e);
        if (prod != rec.disc)
            out.push_back(rec.label + ": discriminant factorization mismatch");
        if (rec.minimal_short.plane_disc() != rec.disc)
            out.push_back(rec.label + ": minimal model discriminant mismatch");
    }
    Database fresh;
    fresh.records = db.records;
    build_indexes(fresh);
    if (fresh.q_index != db.q_index) out.push_back("Q-class index inconsistent with records");
    if (fresh.twist_index != db.twist_index)
        out.push_back("twist index inconsistent with records");
    if (fresh.q_index.size() != db.records.size())
        out.push_back("records sharing a Q-isomorphism key");
    return out;
}

std::string serialize_record(const CurveRecord& rec) {
    std::ostringstream os;
    os << "label=" << rec.label;
    os << ";kind=" << (rec.kind == CurveKind::special ? "special" : "nonspecial");
    os << ";reduced=";
    if (rec.kind == CurveKind::nonspecial) {
        const auto& r = std::get<ReducedNonspecial>(rec.reduced);
        os << rat_str(r.c) << "|" << poly_csv(r.f);
    } else {
        const auto& r = std::get<ReducedSpecial>(rec.reduced);
        os << rat_str(r.a) << "|" << rat_str(r.b) << "|" << rat_str(r.c);
    }
    os << ";minshort=" << serialize_model(rec.minimal_short);
    os << ";minlong=" << serialize_model(rec.minimal_long);
    os << ";wp=" << rat_str(rec.wp.c2) << "," << rat_str(rec.wp.c3) << ","
       << rat_str(rec.wp.c4);
    os << ";qb=" << rat_str(rec.qbar.t[0]) << "," << rat_str(rec.qbar.t[1]) << ","
       << rat_str(rec.qbar.t[2]);
    os << ";disc=" << rat_str(rec.disc);
    os << ";discfact=" << factorization_str(rec.disc, rec.disc_factors);
    os << ";bad=";
    for (size_t i = 0; i < rec.bad.size(); ++i) os << (i ? "," : "") << rec.bad[i].get_str();
    os << ";cond=";
    bool first = true;
    for (auto& [p, e] : rec.conductor) {
        if (!first) os << ",";
        first = false;
        os << p.get_str() << ":" << (e ? std::to_string(*e) : "?");
    }
    os << ";condchecked=" << (rec.conductor_checked ? 1 : 0);
    os << ";prov=" << rec.provenance;
    return os.str();
}

CurveRecord parse_record(const std::string& line) {
    static const std::vector<std::string> order{"label", "kind",     "reduced", "minshort",
                                               "minlong", "wp",      "qb",      "disc",
                                               "discfact", "bad",    "cond",    "condchecked",
                                               "prov"};
    std::vector<std::string> fields = split(line, ';');
    if (fields.size() != order.size())
        throw std::invalid_argument("parse_record: wrong field count");
    std::vector<std::string> values;
    for (size_t i = 0; i < fields.size(); ++i) {
        std::string prefix = order[i] + "=";
        if (fields[i].rfind(prefix, 0) != 0)
            throw std::invalid_argument("parse_record: expected field '" + order[i] + "'");
        values.push_back(fields[i].substr(prefix.size()));
    }
    CurveRecord rec;
    rec.label = values[0];
    if (values[1] == "special")
        rec.kind = CurveKind::special;
    else if (values[1] == "nonspecial")
        rec.kind = CurveKind::nonspecial;
    else
        throw std::invalid_argument("parse_record: bad kind");
    std::vector<std::string> red = split(values[2], '|');
    if (rec.kind == CurveKind::nonspecial) {
        if (red.size() != 2) throw std::invalid_argument("parse_record: bad reduced model");
        rec.reduced = ReducedNonspecial{parse_rat(red[0]), parse_poly_csv(red[1])};
    } else {
        if (red.size() != 3) throw std::invalid_argument("parse_record: bad reduced model");
        rec.reduced = ReducedSpecial{parse_rat(red[0]), parse_rat(red[1]), parse_rat(red[2])};
    }
    rec.minimal_short = parse_model_string(values[3]);
    rec.minimal_long = parse_model_string(values[4]);
    std::vector<std::string> wp = split(values[5], ',');
    if (wp.size() != 3) throw std::invalid_argument("parse_record: bad weighted point");
    rec.wp = WeightedPoint{parse_rat(wp[0]), parse_rat(wp[1]), parse_rat(wp[2])};
    std::vector<std::string> qb = split(values[6], ',');
    if (qb.size() != 3) throw std::invalid_argument("parse_record: bad branch tuple");
    rec.qbar = QbarClass{{parse_rat(qb[0]), parse_rat(qb[1]), parse_rat(qb[2])}};
    rec.disc = parse_rat(values[7]);
    std::string fact = values[8];
    if (!fact.empty() && fact[0] == '-') fact = fact.substr(1);
    if (fact != "1")
        for (auto& piece : split(fact, '_')) {
            size_t e = piece.find('e');
            if (e == std::string::npos)
                throw std::invalid_argument("parse_record: bad factorization");
            rec.disc_factors.emplace_back(Int(piece.substr(0, e)),
                                          std::stol(piece.substr(e + 1)));
        }
    if (!values[9].empty())
        for (auto& piece : split(values[9], ',')) rec.bad.push_back(Int(piece));
    if (!values[10].empty())
        for (auto& piece : split(values[10], ',')) {
            size_t colon = piece.find(':');
            if (colon == std::string::npos)
                throw std::invalid_argument("parse_record: bad conductor entry");
            Int p(piece.substr(0, colon));
            std::string ev = piece.substr(colon + 1);
            rec.conductor[p] =
                ev == "?" ? std::optional<long>{} : std::optional<long>{std::stol(ev)};
        }
    if (values[11] != "0" && values[11] != "1")
        throw std::invalid_argument("parse_record: bad checked flag");
    rec.conductor_checked = values[11] == "1";
    rec.provenance = values[12];
    return rec;
}

std::string serialize_database(const Database& db) {
    std::string out;
    for (const CurveRecord& rec : db.records) out += serialize_record(rec) + "\n";
    return out;
}

Database parse_database(const std::string& text) {
    Database db;
    for (const std::string& line : split(text, '\n')) {
        if (line.empty()) continue;
        db.records.push_back(parse_record(line));
    }
    build_indexes(db);
    return db;
}

std::vector<NonspecialShort> enumerate_rational_branch_curves(const std::vector<Int>& S,
                                                              long bound) {
    if (std::find(S.begin(), S.end(), Int(3)) == S.end())
        throw std::invalid_argument("enumerate_rational_branch_curves: S must contain 3");
    // Full solution set of the S-unit equation: close the canonical
    // representatives under the six-element symmetry group.
    std::set<Rat> pool;
    for (const Rat& l : solve_sunit_equation(S, bound)) {
        pool.insert(l);
        pool.insert(1 - l);
        pool.insert(Rat(1) / l);
        pool.insert(1 - Rat(1) / l);
        pool.insert(Rat(1) / (1 - l));
        pool.insert(l / (l - 1));
    }
    std::map<WeightedPoint, NonspecialShort> found;
    std::vector<Rat> ls(pool.begin(), pool.end());
    for (size_t i = 0; i < ls.size(); ++i)
        for (size_t j = i + 1; j < ls.size(); ++j) {
            if (!is_s_unit(ls[i] - ls[j], S)) continue;
            // Roots {0, 1, l3, l4}.
            Poly f = poly_mul(poly_mul(Poly{Rat(0), Rat(1)}, Poly{Rat(-1), Rat(1)}),
                              poly_mul(Poly{-ls[i], Rat(1)}, Poly{-ls[j], Rat(1)}));
            NonspecialShort m{Rat(1), f};
            std::array<Rat, 3> t = tschirnhausen_normal_form(m);
            if (t[0] == 0 && t[1] == 0) continue;  // special configuration
            for (const NonspecialShort& tw : twists_with_good_reduction_outside(m, S))
                found.emplace(weighted_point(tw), tw);
        }
    std::vector<NonspecialShort> out;
    for (auto& [k, v] : found) out.push_back(v);
    return out;
}

}  // namespace picard
