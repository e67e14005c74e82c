#include "picard/rat.hpp"

#include <algorithm>

namespace picard {

namespace {

const unsigned long kTrialBound = 100000;

const std::vector<unsigned long>& small_primes() {
    static std::vector<unsigned long> ps = [] {
        std::vector<bool> sieve(kTrialBound, true);
        std::vector<unsigned long> out;
        for (unsigned long i = 2; i < kTrialBound; ++i) {
            if (!sieve[i]) continue;
            out.push_back(i);
            for (unsigned long j = i * i; j < kTrialBound; j += i) sieve[j] = false;
        }
        return out;
    }();
    return ps;
}

Int pollard_rho(const Int& n) {
    // Brent's cycle-finding variant; n odd composite, no small factors.
    for (Int c = 1;; ++c) {
        Int x = 2, y = 2, d = 1, diff;
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            diff = x - y;
            if (diff == 0) break;  // cycle without factor; retry with new c
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != 1 && d != n) return d;
    }
}

void factor_rec(Int n, std::map<Int, long>& out, long mult) {
    if (n == 1) return;
    if (is_prime(n)) {
        out[n] += mult;
        return;
    }
    // Perfect power first: keeps rho inputs small and handles p^k semiprimes.
    if (mpz_perfect_power_p(n.get_mpz_t())) {
        for (unsigned long k = 2; k <= mpz_sizeinbase(n.get_mpz_t(), 2); ++k) {
            Int r;
            if (mpz_root(r.get_mpz_t(), n.get_mpz_t(), k)) {
                factor_rec(r, out, mult * (long)k);
                return;
            }
        }
    }
    Int d = pollard_rho(n);
    factor_rec(d, out, mult);
    factor_rec(n / d, out, mult);
}

}  // namespace

std::map<Int, long> factor(const Int& n_in) {
    if (n_in == 0) throw std::domain_error("factor: zero");
    Int n = abs(n_in);
    std::map<Int, long> out;
    for (unsigned long p : small_primes()) {
        if (n == 1) break;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            long e = 0;
            while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
                mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
                ++e;
            }
            out[Int(p)] = e;
        }
    }
    factor_rec(n, out, 1);
    return out;
}

std::pair<Rat, Rat> nth_power_free_part(const Rat& q, long n) {
    if (q == 0) throw std::domain_error("nth_power_free_part: zero");
    if (n <= 0) throw std::invalid_argument("nth_power_free_part: n must be positive");
    Rat core = q < 0 ? Rat(-1) : Rat(1);
    Rat root = 1;
    for (auto& [p, e] : factor_rat(q)) {
        long r = ((e % n) + n) % n;  // representative in [0, n)
        long k = (e - r) / n;
        core *= pow_rat(Rat(p), r);
        root *= pow_rat(Rat(p), k);
    }
    return {core, root};
}

std::optional<Rat> exact_nth_root(const Rat& q, long n) {
    if (n <= 0) throw std::invalid_argument("exact_nth_root: n must be positive");
    if (q == 0) return Rat(0);
    if (q < 0 && n % 2 == 0) return std::nullopt;
    Int an, ad;
    Int qn = abs(num(q)), qd = den(q);
    if (!mpz_root(an.get_mpz_t(), qn.get_mpz_t(), (unsigned long)n)) return std::nullopt;
    if (!mpz_root(ad.get_mpz_t(), qd.get_mpz_t(), (unsigned long)n)) return std::nullopt;
    Rat r = make_rat(an, ad);
    if (q < 0) r = -r;
    return r;
}

}  // namespace picard
