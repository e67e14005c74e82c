#include "picard/arith.hpp"

#include <algorithm>
#include <set>

namespace picard {

namespace {

// Legendre symbol of a rational p-unit, odd p.
int legendre_unit(const Rat& u, const Int& p) {
    Int m = (num(u) % p) * (den(u) % p) % p;
    int l = mpz_legendre(m.get_mpz_t(), p.get_mpz_t());
    if (l == 0) throw std::logic_error("legendre_unit: not a unit");
    return l;
}

// Residue of an odd rational mod 2^k.
long odd_unit_mod(const Rat& u, long mod) {
    Int m(mod);
    Int n = ((num(u) % m) + m) % m;
    Int d = ((den(u) % m) + m) % m;
    Int dinv;
    mpz_invert(dinv.get_mpz_t(), d.get_mpz_t(), m.get_mpz_t());
    return mpz_get_si(Int(n * dinv % m).get_mpz_t());
}

}  // namespace

int hilbert_symbol(const Rat& a, const Rat& b, const Place& place) {
    if (a == 0 || b == 0) throw std::invalid_argument("hilbert_symbol: zero argument");
    if (!place) return (a < 0 && b < 0) ? -1 : 1;
    const Int& p = *place;
    long alpha = val_rat(a, p), beta = val_rat(b, p);
    Rat u = a / pow_rat(Rat(p), alpha);
    Rat v = b / pow_rat(Rat(p), beta);
    if (p != 2) {
        long e = 0;
        if (((p - 1) / 2) % 2 != 0) e = alpha * beta;  // (-1)^{ab(p-1)/2}
        int s = (e % 2 != 0) ? -1 : 1;
        if (beta % 2 != 0) s *= legendre_unit(u, p);
        if (alpha % 2 != 0) s *= legendre_unit(v, p);
        return s;
    }
    long u8 = odd_unit_mod(u, 8), v8 = odd_unit_mod(v, 8);
    long eps_u = (u8 % 4 == 3) ? 1 : 0, eps_v = (v8 % 4 == 3) ? 1 : 0;
    long om_u = (u8 == 3 || u8 == 5) ? 1 : 0, om_v = (v8 == 3 || v8 == 5) ? 1 : 0;
    long e = eps_u * eps_v + alpha * om_v + beta * om_u;
    return (e % 2 != 0) ? -1 : 1;
}

SUnitClassSet s_unit_classes(std::vector<Int> S, long n) {
    if (S.empty()) throw std::invalid_argument("s_unit_classes: empty prime set");
    if (n <= 0) throw std::invalid_argument("s_unit_classes: exponent must be positive");
    std::sort(S.begin(), S.end());
    for (size_t i = 0; i + 1 < S.size(); ++i)
        if (S[i] == S[i + 1]) throw std::invalid_argument("s_unit_classes: repeated prime");
    for (auto& p : S)
        if (!is_prime(p)) throw std::invalid_argument("s_unit_classes: non-prime entry");
    SUnitClassSet out;
    out.primes = S;
    out.exponent = n;
    std::vector<long> e(S.size(), 0);
    for (;;) {
        Rat v = 1;
        for (size_t i = 0; i < S.size(); ++i) v *= pow_rat(Rat(S[i]), e[i]);
        out.representatives.push_back(v);
        out.representatives.push_back(-v);
        size_t i = 0;
        while (i < e.size() && ++e[i] == n) e[i++] = 0;
        if (i == e.size()) break;
    }
    return out;
}

bool is_s_unit(const Rat& q, const std::vector<Int>& S) {
    if (q == 0) return false;
    Int n = abs(num(q)) * den(q);
    for (const Int& p : S)
        while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t()))
            mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
    return n == 1;
}

namespace {

bool s_unit_within_bound(const Rat& q, const std::vector<Int>& S, long bound) {
    if (q == 0 || !is_s_unit(q, S)) return false;
    for (const Int& p : S)
        if (std::abs(val_rat(q, p)) > bound) return false;
    return true;
}

// Height-then-value order used to pick canonical orbit representatives.
bool canon_less(const Rat& a, const Rat& b) {
    Int ha = std::max<Int>(abs(num(a)), den(a));
    Int hb = std::max<Int>(abs(num(b)), den(b));
    if (ha != hb) return ha < hb;
    return a < b;
}

}  // namespace

std::vector<Rat> solve_sunit_equation(const std::vector<Int>& S, long bound) {
    if (bound < 1) throw std::invalid_argument("solve_sunit_equation: bound must be >= 1");
    std::set<Rat> seen, reps;
    std::vector<long> e(S.size(), -bound);
    for (;;) {
        for (int sign = 0; sign < 2; ++sign) {
            Rat lam = sign ? Rat(-1) : Rat(1);
            for (size_t i = 0; i < S.size(); ++i) lam *= pow_rat(Rat(S[i]), e[i]);
            if (lam != 0 && lam != 1 && s_unit_within_bound(1 - lam, S, bound)) {
                if (!seen.count(lam)) {
                    // Collect the full symmetry orbit and keep its least element.
                    std::vector<Rat> orbit = {lam,       1 - lam,       1 / lam,
                                              1 - 1 / lam, 1 / (1 - lam), lam / (lam - 1)};
                    Rat best = lam;
                    for (const Rat& o : orbit) {
                        seen.insert(o);
                        if (canon_less(o, best)) best = o;
                    }
                    reps.insert(best);
                }
            }
        }
        size_t i = 0;
        while (i < e.size() && ++e[i] > bound) e[i++] = -bound;
        if (i == e.size()) break;
    }
    std::vector<Rat> out(reps.begin(), reps.end());
    std::sort(out.begin(), out.end(), canon_less);
    return out;
}

}  // namespace picard
