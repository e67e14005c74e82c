#include "picard/poly.hpp"

#include <algorithm>

namespace picard {

Poly trim(Poly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

int deg(const Poly& p) {
    for (int i = (int)p.size() - 1; i >= 0; --i)
        if (p[i] != 0) return i;
    return -1;
}

Rat lead(const Poly& p) {
    int d = deg(p);
    if (d < 0) return 0;
    return p[d];
}

Poly poly_add(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), Rat(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return trim(r);
}

Poly poly_neg(const Poly& a) {
    Poly r = a;
    for (auto& c : r) c = -c;
    return r;
}

Poly poly_sub(const Poly& a, const Poly& b) { return poly_add(a, poly_neg(b)); }

Poly poly_mul(const Poly& a, const Poly& b) {
    if (deg(a) < 0 || deg(b) < 0) return {};
    Poly r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return trim(r);
}

Poly poly_scale(const Poly& a, const Rat& s) {
    Poly r = a;
    for (auto& c : r) c *= s;
    return trim(r);
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
    int db = deg(b);
    if (db < 0) throw std::domain_error("poly_divmod: division by zero polynomial");
    Poly r = trim(a);
    Poly q(std::max<int>(deg(r) - db + 1, 0), Rat(0));
    while (deg(r) >= db) {
        int dr = deg(r);
        Rat c = r[dr] / b[db];
        q[dr - db] = c;
        for (int i = 0; i <= db; ++i) r[dr - db + i] -= c * b[i];
        r = trim(r);
    }
    return {trim(q), r};
}

Rat poly_eval(const Poly& p, const Rat& x) {
    Rat r = 0;
    for (int i = (int)p.size() - 1; i >= 0; --i) r = r * x + p[i];
    return r;
}

Poly poly_derivative(const Poly& p) {
    if (p.size() <= 1) return {};
    Poly r(p.size() - 1);
    for (size_t i = 1; i < p.size(); ++i) r[i - 1] = p[i] * Rat((long)i);
    return trim(r);
}

Poly poly_compose_linear(const Poly& p, const Rat& a, const Rat& b) {
    // Horner on the linear substitution.
    Poly r;
    Poly lin = {b, a};
    for (int i = (int)p.size() - 1; i >= 0; --i) {
        r = poly_mul(r, lin);
        if (r.empty()) r = {Rat(0)};
        r[0] += p[i];
        r = trim(r);
    }
    return r;
}

Poly poly_reverse(const Poly& p, int degree) {
    Poly r(degree + 1, Rat(0));
    for (int i = 0; i <= degree && i < (int)p.size(); ++i) r[degree - i] = p[i];
    return trim(r);
}

Poly poly_monic(const Poly& p) {
    Rat l = lead(p);
    if (l == 0) throw std::domain_error("poly_monic: zero polynomial");
    return poly_scale(p, 1 / l);
}

Rat poly_content(const Poly& p) {
    if (deg(p) < 0) return 0;
    Int g = 0, l = 1;
    for (auto& c : p) {
        if (c == 0) continue;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    }
    Rat cont = make_rat(g, l);
    if (lead(p) < 0) cont = -cont;
    return cont;
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    Poly x = trim(a), y = trim(b);
    while (deg(y) >= 0) {
        Poly r = poly_divmod(x, y).second;
        x = y;
        y = r;
    }
    if (deg(x) < 0) return x;
    return poly_monic(x);
}

bool poly_squarefree(const Poly& p) {
    if (deg(p) <= 0) return deg(p) == 0;
    return deg(poly_gcd(p, poly_derivative(p))) == 0;
}

Rat poly_resultant(const Poly& a_in, const Poly& b_in) {
    Poly a = trim(a_in), b = trim(b_in);
    int m = deg(a), n = deg(b);
    if (m < 0 || n < 0) return 0;
    if (m == 0) return pow_rat(a[0], n);
    if (n == 0) return pow_rat(b[0], m);
    // Sylvester determinant via rational Gaussian elimination; sizes <= ~12.
    int sz = m + n;
    std::vector<std::vector<Rat>> M(sz, std::vector<Rat>(sz, Rat(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) M[i][i + j] = a[m - j];
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) M[n + i][i + j] = b[n - j];
    Rat det = 1;
    for (int col = 0; col < sz; ++col) {
        int piv = -1;
        for (int r = col; r < sz; ++r)
            if (M[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return 0;
        if (piv != col) {
            std::swap(M[piv], M[col]);
            det = -det;
        }
        det *= M[col][col];
        Rat inv = 1 / M[col][col];
        for (int r = col + 1; r < sz; ++r) {
            if (M[r][col] == 0) continue;
            Rat f = M[r][col] * inv;
            for (int c2 = col; c2 < sz; ++c2) M[r][c2] -= f * M[col][c2];
        }
    }
    return det;
}

Rat poly_discriminant(const Poly& p) {
    int n = deg(p);
    if (n <= 0) throw std::domain_error("poly_discriminant: degree < 1");
    Rat res = poly_resultant(p, poly_derivative(p));
    Rat d = res / lead(p);
    if ((n * (n - 1) / 2) % 2 != 0) d = -d;
    return d;
}

namespace {

std::vector<Int> divisors(const Int& n) {
    std::vector<Int> out{1};
    for (auto& [p, e] : factor(n)) {
        size_t base = out.size();
        Int pk = 1;
        for (long i = 1; i <= e; ++i) {
            pk *= p;
            for (size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
        }
    }
    return out;
}

}  // namespace

std::vector<Rat> rational_roots(const Poly& p_in) {
    Poly p = trim(p_in);
    if (deg(p) <= 0) return {};
    std::vector<Rat> roots;
    // Strip x = 0 roots.
    size_t z = 0;
    while (z < p.size() && p[z] == 0) ++z;
    for (size_t i = 0; i < z; ++i) roots.push_back(0);
    p.erase(p.begin(), p.begin() + z);
    if (deg(p) >= 1) {
        Poly ip = poly_scale(p, 1 / poly_content(p));  // primitive integer coefficients
        Int a0 = num(ip[0]), an = num(lead(ip));
        std::vector<Rat> cands;
        for (const Int& d0 : divisors(a0))
            for (const Int& dn : divisors(an)) {
                Rat r = make_rat(d0, dn);
                cands.push_back(r);
                cands.push_back(-r);
            }
        std::sort(cands.begin(), cands.end());
        cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
        for (const Rat& r : cands) {
            while (poly_eval(p, r) == 0) {
                roots.push_back(r);
                p = poly_divmod(p, Poly{-r, Rat(1)}).first;
                if (deg(p) < 1) break;
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::pair<Rat, std::vector<Poly>> factor_poly(const Poly& p_in) {
    Poly p = trim(p_in);
    int d = deg(p);
    if (d < 0) throw std::domain_error("factor_poly: zero polynomial");
    Rat content = lead(p);
    p = poly_monic(p);
    std::vector<Poly> factors;
    for (const Rat& r : rational_roots(p)) {
        factors.push_back(Poly{-r, Rat(1)});
        p = poly_divmod(p, factors.back()).first;
    }
    int rd = deg(p);
    if (rd == 2 || rd == 3) {
        factors.push_back(p);  // no rational root => irreducible at degree 2,3
    } else if (rd == 4) {
        // Quartic with no rational roots: test splits into two quadratics.
        // Depress: x -> x - p[3]/4 gives x^4 + P x^2 + Q x + R.
        Rat shift = -p[3] / 4;
        Poly dep = poly_compose_linear(p, 1, shift);
        Rat P = dep[2], Q = dep[1], R = dep[0];
        // (x^2+ux+v)(x^2-ux+w): u^2 is a root of U^3 + 2P U^2 + (P^2-4R) U - Q^2.
        Poly resolvent = {-Q * Q, P * P - 4 * R, 2 * P, Rat(1)};
        bool split = false;
        for (const Rat& U : rational_roots(resolvent)) {
            auto u = exact_sqrt(U);
            if (!u) continue;
            Rat v, w;
            if (*u != 0) {
                v = (P + U - Q / *u) / 2;
                w = (P + U + Q / *u) / 2;
            } else {
                if (Q != 0) continue;
                auto s = exact_sqrt(P * P - 4 * R);
                if (!s) continue;
                v = (P - *s) / 2;
                w = (P + *s) / 2;
            }
            Poly q1 = {v, *u, Rat(1)}, q2 = {w, -*u, Rat(1)};
            // Undo the depression: p(x) = dep(x - shift), so substitute back.
            q1 = poly_compose_linear(q1, 1, -shift);
            q2 = poly_compose_linear(q2, 1, -shift);
            factors.push_back(q1);
            factors.push_back(q2);
            split = true;
            break;
        }
        if (!split) factors.push_back(p);
    } else if (rd > 4) {
        throw std::domain_error("factor_poly: degree > 4 residual factor unsupported");
    }
    return {content, factors};
}

}  // namespace picard
