#include "numeric.hpp"

namespace picard::numeric {

std::vector<Cplx> complex_roots(const Poly& p_in, unsigned prec) {
    Poly p = trim(p_in);
    int d = deg(p);
    if (d < 1) return {};
    std::vector<Cplx> a(d + 1);
    for (int i = 0; i <= d; ++i) {
        mpf_class n(0, prec), de(0, prec);
        n = mpf_class(p[i].get_num(), prec);
        de = mpf_class(p[i].get_den(), prec);
        a[i] = Cplx(n / de, mpf_class(0, prec));
    }
    // Monicize numerically.
    for (int i = 0; i < d; ++i) a[i] = a[i] / a[d];
    a[d] = Cplx(mpf_class(1, prec), mpf_class(0, prec));

    auto eval = [&](const Cplx& x) {
        Cplx r = a[d];
        for (int i = d - 1; i >= 0; --i) r = r * x + a[i];
        return r;
    };

    // Durand-Kerner with standard staggered seeds.
    std::vector<Cplx> z(d);
    mpf_class sr(0.4, prec), si(0.9, prec);
    Cplx seed(sr, si), cur(mpf_class(1, prec), mpf_class(0, prec));
    for (int i = 0; i < d; ++i) {
        cur = cur * seed;
        z[i] = cur;
    }
    mpf_class tol(1, prec);
    mpf_div_2exp(tol.get_mpf_t(), tol.get_mpf_t(), prec - 16);
    for (int iter = 0; iter < 2000; ++iter) {
        mpf_class worst(0, prec);
        for (int i = 0; i < d; ++i) {
            Cplx denom(mpf_class(1, prec), mpf_class(0, prec));
            for (int j = 0; j < d; ++j)
                if (j != i) denom = denom * (z[i] - z[j]);
            Cplx delta = eval(z[i]) / denom;
            z[i] = z[i] - delta;
            mpf_class m = delta.norm2();
            if (m > worst) worst = m;
        }
        if (worst < tol * tol) break;
    }
    return z;
}

std::optional<Rat> reconstruct_rational(const mpf_class& x, const Int& den_bound) {
    // Continued fraction expansion with denominator cutoff.
    mpf_class v = x;
    Int p0 = 0, p1 = 1, q0 = 1, q1 = 0;
    for (int i = 0; i < 256; ++i) {
        mpf_class fl;
        mpf_floor(fl.get_mpf_t(), v.get_mpf_t());
        Int a(0);
        mpz_set_f(a.get_mpz_t(), fl.get_mpf_t());
        Int p2 = a * p1 + p0, q2 = a * q1 + q0;
        if (q2 > den_bound) break;
        p0 = p1;
        p1 = p2;
        q0 = q1;
        q1 = q2;
        mpf_class frac = v - fl;
        if (frac < 1e-40 && frac > -1e-40) break;
        v = 1 / frac;
    }
    if (q1 == 0) return std::nullopt;
    Rat r = make_rat(p1, q1);
    // Consistency: the reconstruction must be extremely close to x.
    mpf_class rx(r.get_num(), mpf_get_prec(x.get_mpf_t()));
    rx /= mpf_class(r.get_den(), mpf_get_prec(x.get_mpf_t()));
    mpf_class err = rx - x;
    mpf_class scale = abs(x) + 1;
    mpf_class tol(1, mpf_get_prec(x.get_mpf_t()));
    mpf_div_2exp(tol.get_mpf_t(), tol.get_mpf_t(), mpf_get_prec(x.get_mpf_t()) / 3);
    if (abs(err) > scale * tol) return std::nullopt;
    return r;
}

std::vector<Cplx> solve4(std::vector<std::vector<Cplx>> M, std::vector<Cplx> rhs) {
    int n = (int)M.size();
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int r = col + 1; r < n; ++r)
            if (M[r][col].norm2() > M[piv][col].norm2()) piv = r;
        std::swap(M[piv], M[col]);
        std::swap(rhs[piv], rhs[col]);
        for (int r = col + 1; r < n; ++r) {
            Cplx f = M[r][col] / M[col][col];
            for (int c = col; c < n; ++c) M[r][c] = M[r][c] - f * M[col][c];
            rhs[r] = rhs[r] - f * rhs[col];
        }
    }
    std::vector<Cplx> x(n);
    for (int r = n - 1; r >= 0; --r) {
        Cplx s = rhs[r];
        for (int c = r + 1; c < n; ++c) s = s - M[r][c] * x[c];
        x[r] = s / M[r][r];
    }
    return x;
}

}  // namespace picard::numeric
