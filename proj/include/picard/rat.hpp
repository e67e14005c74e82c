#pragma once

// Exact integers and rationals (GMP-backed) plus p-adic valuations,
// integer factorization and n-th-power-free decomposition.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace picard {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Int num(const Rat& q) { return q.get_num(); }
inline Int den(const Rat& q) { return q.get_den(); }

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline Int pow_int(const Int& b, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

inline Rat pow_rat(const Rat& b, long e) {
    if (e >= 0) {
        Rat r;
        mpz_pow_ui(r.get_num_mpz_t(), b.get_num_mpz_t(), (unsigned long)e);
        mpz_pow_ui(r.get_den_mpz_t(), b.get_den_mpz_t(), (unsigned long)e);
        r.canonicalize();
        return r;
    }
    if (b == 0) throw std::domain_error("pow_rat: 0^negative");
    return pow_rat(Rat(1) / b, -e);
}

// Value of a discrete valuation: finite integer or +infinity (for 0).
struct Valuation {
    bool infinite = false;
    long v = 0;

    static Valuation inf() { return Valuation{true, 0}; }
    static Valuation fin(long x) { return Valuation{false, x}; }

    bool operator==(const Valuation& o) const {
        return infinite == o.infinite && (infinite || v == o.v);
    }
    bool operator<(const Valuation& o) const {
        if (infinite) return false;
        if (o.infinite) return true;
        return v < o.v;
    }
};

inline long val_int(Int n, const Int& p) {
    if (n == 0) throw std::domain_error("val_int: zero");
    long v = 0;
    Int q, r;
    for (;;) {
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
        if (r != 0) return v;
        n = q;
        ++v;
    }
}

inline Valuation valuation(const Rat& q, const Int& p) {
    if (q == 0) return Valuation::inf();
    long v = val_int(num(q), p) - val_int(den(q), p);
    return Valuation::fin(v);
}

// Finite valuation of a nonzero rational; throws on zero.
inline long val_rat(const Rat& q, const Int& p) {
    Valuation v = valuation(q, p);
    if (v.infinite) throw std::domain_error("val_rat: zero input");
    return v.v;
}

inline bool is_prime(const Int& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

// Full factorization of |n| (n != 0): trial division, perfect-power splitting
// and Pollard rho with primality certification.  Map prime -> exponent.
std::map<Int, long> factor(const Int& n);

inline std::map<Int, long> factor_rat(const Rat& q) {
    if (q == 0) throw std::domain_error("factor_rat: zero");
    std::map<Int, long> f = factor(num(q));
    for (auto& [p, e] : factor(den(q))) f[p] -= e;
    for (auto it = f.begin(); it != f.end();)
        it = (it->second == 0) ? f.erase(it) : std::next(it);
    return f;
}

// q = core * root^n with 0 <= v_p(core) < n for every prime p.
// sign(core) = sign(q); root > 0.
std::pair<Rat, Rat> nth_power_free_part(const Rat& q, long n);

// Exact rational n-th root if it exists.
std::optional<Rat> exact_nth_root(const Rat& q, long n);

inline std::optional<Rat> exact_sqrt(const Rat& q) { return exact_nth_root(q, 2); }

// Primes dividing the numerator or denominator, ascending.
inline std::vector<Int> support(const Rat& q) {
    std::vector<Int> out;
    for (auto& [p, e] : factor_rat(q)) out.push_back(p);
    return out;
}

}  // namespace picard
