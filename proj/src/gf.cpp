#include "picard/gf.hpp"

#include <map>
#include <mutex>

namespace picard {

namespace {

Int mod_p(const Int& a, const Int& p) {
    Int r = a % p;
    if (r < 0) r += p;
    return r;
}

}  // namespace

FqCtx::FqCtx(Int p, int k) : p_(std::move(p)), k_(k) {}

Int FqCtx::q() const { return pow_int(p_, (unsigned long)k_); }

FqEl FqCtx::one() const {
    FqEl e = zero();
    e[0] = mod_p(1, p_);
    return e;
}

FqEl FqCtx::from_int(const Int& n) const {
    FqEl e = zero();
    e[0] = mod_p(n, p_);
    return e;
}

FqEl FqCtx::gen() const {
    FqEl e = zero();
    if (k_ > 1)
        e[1] = 1;
    else
        throw std::logic_error("FqCtx::gen: prime field has no generator element t");
    return e;
}

bool FqCtx::is_zero(const FqEl& a) const {
    for (auto& c : a)
        if (c != 0) return false;
    return true;
}

bool FqCtx::eq(const FqEl& a, const FqEl& b) const {
    for (int i = 0; i < k_; ++i)
        if (a[i] != b[i]) return false;
    return true;
}

FqEl FqCtx::add(const FqEl& a, const FqEl& b) const {
    FqEl r(k_);
    for (int i = 0; i < k_; ++i) r[i] = mod_p(a[i] + b[i], p_);
    return r;
}

FqEl FqCtx::sub(const FqEl& a, const FqEl& b) const {
    FqEl r(k_);
    for (int i = 0; i < k_; ++i) r[i] = mod_p(a[i] - b[i], p_);
    return r;
}

FqEl FqCtx::neg(const FqEl& a) const {
    FqEl r(k_);
    for (int i = 0; i < k_; ++i) r[i] = mod_p(-a[i], p_);
    return r;
}

FqEl FqCtx::mul(const FqEl& a, const FqEl& b) const {
    std::vector<Int> prod(2 * k_ - 1, Int(0));
    for (int i = 0; i < k_; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < k_; ++j) prod[i + j] += a[i] * b[j];
    }
    // Reduce by the monic modulus.
    for (int i = 2 * k_ - 2; i >= k_; --i) {
        if (prod[i] == 0) continue;
        Int c = prod[i];
        for (int j = 0; j < k_; ++j) prod[i - k_ + j] -= c * mod_[j];
        prod[i] = 0;
    }
    FqEl r(k_);
    for (int i = 0; i < k_; ++i) r[i] = mod_p(prod[i], p_);
    return r;
}

FqEl FqCtx::pow(FqEl a, Int e) const {
    if (e < 0) {
        a = inv(a);
        e = -e;
    }
    FqEl r = one();
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

FqEl FqCtx::inv(const FqEl& a) const {
    if (is_zero(a)) throw std::domain_error("FqCtx::inv: zero");
    // a^(q-2)
    return pow(a, q() - 2);
}

namespace {

bool modulus_irreducible(const FqCtx& F, const FqPoly& m) {
    int k = fqp_deg(F, m);
    FqPoly x = {F.zero(), F.one()};
    FqPoly xq = fqp_xpow_mod(F, pow_int(F.p(), (unsigned long)k), m);
    if (fqp_deg(F, fqp_trim(F, fqp_sub(F, xq, x))) != -1) return false;
    for (int l : {2, 3, 5, 7, 11}) {
        if (k % l != 0) continue;
        FqPoly xe = fqp_xpow_mod(F, pow_int(F.p(), (unsigned long)(k / l)), m);
        FqPoly g = fqp_gcd(F, m, fqp_sub(F, xe, x));
        if (fqp_deg(F, g) != 0) return false;
    }
    return true;
}

}  // namespace

std::shared_ptr<const FqCtx> FqCtx::get(const Int& p, int k) {
    static std::mutex mu;
    static std::map<std::pair<Int, int>, std::shared_ptr<const FqCtx>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({p, k});
    if (it != cache.end()) return it->second;

    auto ctx = std::shared_ptr<FqCtx>(new FqCtx(p, k));
    if (k == 1) {
        ctx->mod_ = {Int(0), Int(1)};  // t (unused)
        cache[{p, k}] = ctx;
        return ctx;
    }
    // Prime-field helper for irreducibility testing of candidate moduli.
    auto base = std::shared_ptr<FqCtx>(new FqCtx(p, 1));
    base->mod_ = {Int(0), Int(1)};
    // Counter order on the k lower coefficients, least significant first.
    std::vector<Int> c(k, Int(0));
    for (;;) {
        FqPoly cand(k + 1);
        for (int i = 0; i < k; ++i) cand[i] = FqEl{mod_p(c[i], p)};
        cand[k] = FqEl{Int(1)};
        if (modulus_irreducible(*base, cand)) {
            ctx->mod_.resize(k + 1);
            for (int i = 0; i <= k; ++i) ctx->mod_[i] = cand[i][0];
            break;
        }
        int i = 0;
        while (i < k && ++c[i] == p) c[i++] = 0;
        if (i == k) throw std::logic_error("FqCtx: no irreducible modulus found");
    }
    cache[{p, k}] = ctx;
    return ctx;
}

FqPoly fqp_trim(const FqCtx& F, FqPoly a) {
    while (!a.empty() && F.is_zero(a.back())) a.pop_back();
    return a;
}

int fqp_deg(const FqCtx& F, const FqPoly& a) {
    for (int i = (int)a.size() - 1; i >= 0; --i)
        if (!F.is_zero(a[i])) return i;
    return -1;
}

FqPoly fqp_add(const FqCtx& F, const FqPoly& a, const FqPoly& b) {
    FqPoly r(std::max(a.size(), b.size()), F.zero());
    for (size_t i = 0; i < a.size(); ++i) r[i] = F.add(r[i], a[i]);
    for (size_t i = 0; i < b.size(); ++i) r[i] = F.add(r[i], b[i]);
    return fqp_trim(F, r);
}

FqPoly fqp_sub(const FqCtx& F, const FqPoly& a, const FqPoly& b) {
    FqPoly r(std::max(a.size(), b.size()), F.zero());
    for (size_t i = 0; i < a.size(); ++i) r[i] = F.add(r[i], a[i]);
    for (size_t i = 0; i < b.size(); ++i) r[i] = F.sub(r[i], b[i]);
    return fqp_trim(F, r);
}

FqPoly fqp_mul(const FqCtx& F, const FqPoly& a, const FqPoly& b) {
    if (fqp_deg(F, a) < 0 || fqp_deg(F, b) < 0) return {};
    FqPoly r(a.size() + b.size() - 1, F.zero());
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
    return fqp_trim(F, r);
}

FqPoly fqp_mod(const FqCtx& F, FqPoly a, const FqPoly& b_in) {
    FqPoly b = fqp_trim(F, b_in);
    int db = fqp_deg(F, b);
    if (db < 0) throw std::domain_error("fqp_mod: zero modulus");
    FqEl linv = F.inv(b[db]);
    a = fqp_trim(F, a);
    while (fqp_deg(F, a) >= db) {
        int da = fqp_deg(F, a);
        FqEl c = F.mul(a[da], linv);
        for (int i = 0; i <= db; ++i) a[da - db + i] = F.sub(a[da - db + i], F.mul(c, b[i]));
        a = fqp_trim(F, a);
    }
    return a;
}

FqPoly fqp_monic(const FqCtx& F, const FqPoly& a_in) {
    FqPoly a = fqp_trim(F, a_in);
    int d = fqp_deg(F, a);
    if (d < 0) return a;
    FqEl linv = F.inv(a[d]);
    for (auto& c : a) c = F.mul(c, linv);
    return a;
}

FqPoly fqp_gcd(const FqCtx& F, FqPoly a, FqPoly b) {
    a = fqp_trim(F, a);
    b = fqp_trim(F, b);
    while (fqp_deg(F, b) >= 0) {
        FqPoly r = fqp_mod(F, a, b);
        a = b;
        b = r;
    }
    return fqp_monic(F, a);
}

FqEl fqp_eval(const FqCtx& F, const FqPoly& a, const FqEl& x) {
    FqEl r = F.zero();
    for (int i = (int)a.size() - 1; i >= 0; --i) r = F.add(F.mul(r, x), a[i]);
    return r;
}

FqPoly fqp_derivative(const FqCtx& F, const FqPoly& a) {
    if (a.size() <= 1) return {};
    FqPoly r(a.size() - 1, F.zero());
    for (size_t i = 1; i < a.size(); ++i) {
        FqEl mult = F.from_int(Int((long)i));
        r[i - 1] = F.mul(a[i], mult);
    }
    return fqp_trim(F, r);
}

FqPoly fqp_pow_mod(const FqCtx& F, FqPoly base, Int e, const FqPoly& m) {
    FqPoly r = {F.one()};
    base = fqp_mod(F, base, m);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = fqp_mod(F, fqp_mul(F, r, base), m);
        base = fqp_mod(F, fqp_mul(F, base, base), m);
        e >>= 1;
    }
    return r;
}

FqPoly fqp_xpow_mod(const FqCtx& F, const Int& e, const FqPoly& m) {
    return fqp_pow_mod(F, FqPoly{F.zero(), F.one()}, e, m);
}

namespace {

// Deterministic sequence of field elements used for splitting attempts.
FqEl split_element(const FqCtx& F, int idx) {
    // Base-p digits of idx+1 as coefficients: enumerates every field element.
    FqEl a = F.zero();
    Int n(idx + 1);
    long pl = mpz_get_si(F.p().get_mpz_t());
    for (int i = 0; i < F.k() && n != 0; ++i) {
        a[i] = n % pl;
        n /= pl;
    }
    return a;
}

void split_linear_product(const FqCtx& F, const FqPoly& h, std::vector<FqEl>& out) {
    int d = fqp_deg(F, h);
    if (d <= 0) return;
    if (d == 1) {
        out.push_back(F.neg(F.mul(h[0], F.inv(h[1]))));
        return;
    }
    Int q = F.q();
    for (int idx = 0;; ++idx) {
        FqEl a = split_element(F, idx);
        if (F.is_zero(a)) continue;
        FqPoly shifted = {a, F.one()};  // x + a
        FqPoly g;
        if (F.p() == 2) {
            // Trace polynomial of a*x: roots r1, r2 evaluate differently as
            // soon as Tr(a*(r1-r2)) = 1, which some a in the sequence attains.
            FqPoly tr = {F.zero()};
            FqPoly cur = {F.zero(), a};
            long bits = (long)mpz_sizeinbase(q.get_mpz_t(), 2) - 1;  // log2(q)
            for (long i = 0; i < bits; ++i) {
                tr = fqp_add(F, tr, cur);
                cur = fqp_mod(F, fqp_mul(F, cur, cur), h);
            }
            g = fqp_gcd(F, h, tr);
        } else {
            FqPoly w = fqp_pow_mod(F, shifted, (q - 1) / 2, h);
            if (!w.empty()) w[0] = F.sub(w[0], F.one());
            g = fqp_gcd(F, h, w);
        }
        int dg = fqp_deg(F, g);
        if (dg > 0 && dg < d) {
            split_linear_product(F, g, out);
            FqPoly rest = h;
            // h / g by repeated subtraction (exact division).
            FqPoly quot;
            {
                FqPoly r = fqp_trim(F, h);
                int dgm = fqp_deg(F, g);
                FqEl linv = F.inv(g[dgm]);
                quot.assign(d - dgm + 1, F.zero());
                while (fqp_deg(F, r) >= dgm) {
                    int dr = fqp_deg(F, r);
                    FqEl c = F.mul(r[dr], linv);
                    quot[dr - dgm] = c;
                    for (int i = 0; i <= dgm; ++i)
                        r[dr - dgm + i] = F.sub(r[dr - dgm + i], F.mul(c, g[i]));
                    r = fqp_trim(F, r);
                }
            }
            split_linear_product(F, quot, out);
            return;
        }
    }
}

}  // namespace

std::vector<FqEl> fqp_roots(const FqCtx& F, const FqPoly& a_in) {
    FqPoly a = fqp_trim(F, a_in);
    int d = fqp_deg(F, a);
    std::vector<FqEl> out;
    if (d <= 0) return out;
    // Product of distinct linear factors: gcd(a, x^q - x).
    FqPoly xq = fqp_xpow_mod(F, F.q(), a);
    FqPoly diff = fqp_sub(F, xq, FqPoly{F.zero(), F.one()});
    FqPoly lin = fqp_gcd(F, a, diff);
    split_linear_product(F, lin, out);
    return out;
}

}  // namespace picard
