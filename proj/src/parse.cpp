#include "picard/parse.hpp"

#include <cctype>
#include <stdexcept>

namespace picard {

namespace {

constexpr int kMaxDegree = 16;

SparsePoly constant(const Rat& v) {
    SparsePoly p;
    if (v != 0) p[{0, 0, 0}] = v;
    return p;
}

SparsePoly add(const SparsePoly& a, const SparsePoly& b) {
    SparsePoly out = a;
    for (auto& [e, v] : b) {
        Rat s = (out.count(e) ? out[e] : Rat(0)) + v;
        if (s == 0)
            out.erase(e);
        else
            out[e] = s;
    }
    return out;
}

SparsePoly neg(SparsePoly a) {
    for (auto& [e, v] : a) v = -v;
    return a;
}

SparsePoly mul(const SparsePoly& a, const SparsePoly& b) {
    SparsePoly out;
    for (auto& [ea, va] : a)
        for (auto& [eb, vb] : b) {
            std::array<int, 3> e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]};
            if (e[0] + e[1] + e[2] > kMaxDegree)
                throw std::invalid_argument("polynomial literal: degree too large");
            Rat s = (out.count(e) ? out[e] : Rat(0)) + va * vb;
            if (s == 0)
                out.erase(e);
            else
                out[e] = s;
        }
    return out;
}

struct Parser {
    const std::string& s;
    size_t pos = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip() {
        while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
    }
    bool peek(char c) {
        skip();
        return pos < s.size() && s[pos] == c;
    }
    bool eat(char c) {
        if (!peek(c)) return false;
        ++pos;
        return true;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("polynomial literal: " + what + " at position " +
                                    std::to_string(pos) + " of '" + s + "'");
    }

    SparsePoly expr() {
        SparsePoly out =
            eat('-') ? neg(term()) : ((void)eat('+'), term());
        for (;;) {
            if (eat('+'))
                out = add(out, term());
            else if (eat('-'))
                out = add(out, neg(term()));
            else
                return out;
        }
    }

    SparsePoly term() {
        SparsePoly out = factor();
        for (;;) {
            if (eat('*')) {
                out = mul(out, factor());
            } else if (eat('/')) {
                SparsePoly d = factor();
                if (d.size() != 1 || d.count({0, 0, 0}) == 0)
                    fail("division by a non-constant");
                Rat v = d.begin()->second;
                SparsePoly inv = constant(Rat(1) / v);
                out = mul(out, inv);
            } else {
                return out;
            }
        }
    }

    SparsePoly factor() {
        SparsePoly base = atom();
        if (!eat('^')) return base;
        skip();
        if (pos >= s.size() || !std::isdigit((unsigned char)s[pos])) fail("expected exponent");
        long e = 0;
        while (pos < s.size() && std::isdigit((unsigned char)s[pos])) {
            e = e * 10 + (s[pos] - '0');
            if (e > kMaxDegree) fail("exponent too large");
            ++pos;
        }
        SparsePoly out = constant(Rat(1));
        for (long i = 0; i < e; ++i) out = mul(out, base);
        return out;
    }

    SparsePoly atom() {
        skip();
        if (pos >= s.size()) fail("unexpected end of input");
        char c = s[pos];
        if (c == '(') {
            ++pos;
            SparsePoly out = expr();
            if (!eat(')')) fail("expected ')'");
            return out;
        }
        if (c == '-') {
            ++pos;
            return neg(atom());
        }
        if (std::isdigit((unsigned char)c)) {
            std::string digits;
            while (pos < s.size() && std::isdigit((unsigned char)s[pos])) digits += s[pos++];
            return constant(Rat(Int(digits)));
        }
        if (c == 'x' || c == 'y' || c == 'z') {
            ++pos;
            SparsePoly out;
            std::array<int, 3> e{0, 0, 0};
            e[c == 'y' ? 0 : (c == 'x' ? 1 : 2)] = 1;
            out[e] = 1;
            return out;
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

SparsePoly parse_checked(const std::string& s) {
    Parser p(s);
    SparsePoly out = p.expr();
    p.skip();
    if (p.pos != s.size()) p.fail("trailing input");
    return out;
}

}  // namespace

SparsePoly parse_poly_literal(const std::string& s) { return parse_checked(s); }

TernaryQuartic parse_ternary_quartic(const std::string& s) {
    SparsePoly p = parse_checked(s);
    TernaryQuartic F;
    F.degree = 4;
    for (auto& [e, v] : p) {
        if (e[0] + e[1] + e[2] != 4)
            throw std::invalid_argument("expected a homogeneous quartic: '" + s + "'");
        F.set(e[0], e[1], e[2], v);
    }
    if (F.is_zero()) throw std::invalid_argument("expected a nonzero quartic");
    return F;
}

Poly parse_poly_in(const std::string& s, char var) {
    SparsePoly p = parse_checked(s);
    int idx = var == 'y' ? 0 : (var == 'x' ? 1 : 2);
    Poly out;
    for (auto& [e, v] : p) {
        for (int i = 0; i < 3; ++i)
            if (i != idx && e[i] != 0)
                throw std::invalid_argument("expected a univariate polynomial in '" +
                                            std::string(1, var) + "': '" + s + "'");
        if (out.size() <= size_t(e[idx])) out.resize(e[idx] + 1, Rat(0));
        out[e[idx]] = v;
    }
    return trim(out);
}

PicardCurve parse_curve_literal(const std::string& s) {
    size_t eq = s.find('=');
    if (eq == std::string::npos || s.find('=', eq + 1) != std::string::npos)
        throw std::invalid_argument("curve literal must contain exactly one '=': '" + s + "'");
    SparsePoly diff =
        add(parse_checked(s.substr(0, eq)), neg(parse_checked(s.substr(eq + 1))));
    TernaryQuartic F;
    F.degree = 4;
    for (auto& [e, v] : diff) {
        int d = e[0] + e[1] + e[2];
        if (d > 4) throw std::invalid_argument("curve literal has degree above 4: '" + s + "'");
        F.set(e[0], e[1], e[2] + (4 - d), F.get(e[0], e[1], e[2] + (4 - d)) + v);
    }
    std::optional<PicardCurve> c = curve_from_plane(F);
    if (!c)
        throw std::invalid_argument("curve literal does not match a Weierstrass shape: '" + s +
                                    "'");
    return *c;
}

}  // namespace picard
