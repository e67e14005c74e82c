#include "detmod.hpp"

#include <cstdint>

namespace picard::detail {

namespace {

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
    return (uint64_t)((unsigned __int128)a * b % m);
}

uint64_t powmod(uint64_t a, uint64_t e, uint64_t m) {
    uint64_t r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

const std::vector<uint64_t>& prime_pool(size_t need) {
    static std::vector<uint64_t> primes;
    static Int next = (Int(1) << 62) + 1;
    while (primes.size() < need) {
        Int p;
        mpz_nextprime(p.get_mpz_t(), next.get_mpz_t());
        next = p;
        primes.push_back(mpz_get_ui(p.get_mpz_t()));
    }
    return primes;
}

uint64_t det_mod(const std::vector<std::vector<Int>>& M, uint64_t p) {
    int n = (int)M.size();
    std::vector<std::vector<uint64_t>> A(n, std::vector<uint64_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Int r = M[i][j] % (long)p;  // note: p < 2^62 fits signed long
            if (r < 0) r += (long)p;
            A[i][j] = mpz_get_ui(r.get_mpz_t());
        }
    uint64_t det = 1;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (A[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return 0;
        if (piv != col) {
            std::swap(A[piv], A[col]);
            det = p - det;
            if (det == p) det = 0;
        }
        det = mulmod(det, A[col][col], p);
        uint64_t inv = powmod(A[col][col], p - 2, p);
        for (int r = col + 1; r < n; ++r) {
            if (A[r][col] == 0) continue;
            uint64_t f = mulmod(A[r][col], inv, p);
            for (int c = col; c < n; ++c) {
                uint64_t sub = mulmod(f, A[col][c], p);
                A[r][c] = A[r][c] >= sub ? A[r][c] - sub : A[r][c] + p - sub;
            }
        }
    }
    return det;
}

}  // namespace

Int det_integer_matrix(const std::vector<std::vector<Int>>& M) {
    int n = (int)M.size();
    if (n == 0) return 1;
    // Hadamard bound: product of row Euclidean norms.
    Int bound = 1;
    for (int i = 0; i < n; ++i) {
        Int s = 0;
        for (int j = 0; j < n; ++j) s += M[i][j] * M[i][j];
        Int r;
        mpz_sqrt(r.get_mpz_t(), s.get_mpz_t());
        bound *= (r + 1);
    }
    bound = 2 * bound + 1;

    Int modulus = 1, x = 0;
    for (size_t k = 0; modulus < bound; ++k) {
        uint64_t p = prime_pool(k + 1)[k];
        uint64_t r = det_mod(M, p);
        // CRT step: x' = x + modulus * t, t = (r - x) / modulus mod p.
        Int pm(p);
        Int xr = x % pm;
        if (xr < 0) xr += pm;
        Int minv;
        Int mm = modulus % pm;
        mpz_invert(minv.get_mpz_t(), mm.get_mpz_t(), pm.get_mpz_t());
        Int t = ((Int(r) - xr) * minv) % pm;
        if (t < 0) t += pm;
        x += modulus * t;
        modulus *= pm;
    }
    if (2 * x > modulus) x -= modulus;
    return x;
}

}  // namespace picard::detail
