/// Primality and factorization for the sizes this library meets
/// (values stay well under ~2^200 at desk scale).
///
/// Primality: deterministic Miller-Rabin witness set for anything that fits
/// in 64 bits, trial-division-assisted Miller-Rabin rounds plus a final
/// certificate-free fallback for larger inputs. Factorization: trial
/// division, then Pollard rho with Brent cycling.

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "glnq/numeric.hpp"

namespace glnq {

namespace detail {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

inline bool miller_rabin_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // deterministic for all n < 2^64 with these witnesses
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a % n, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

} // namespace detail

inline bool is_prime(const BigInt& n) {
    if (n < 2) return false;
    if (n.fits_ulong_p() || (n.fits_slong_p() && n.get_si() > 0))
        return detail::miller_rabin_u64(n.get_ui());
    // big input: trial division by small primes, then GMP's Miller-Rabin rounds
    for (unsigned long p = 2; p < 10000; p = (p == 2 ? 3 : p + 2)) {
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return n == p;
    }
    return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

inline bool is_prime(long n) { return n >= 2 && detail::miller_rabin_u64(static_cast<std::uint64_t>(n)); }

namespace detail {

inline BigInt pollard_rho(const BigInt& n) {
    if (n % 2 == 0) return 2;
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(0x5eedf00dUL);
    while (true) {
        BigInt x = rng.get_z_range(n - 2) + 2;
        BigInt c = rng.get_z_range(n - 1) + 1;
        BigInt y = x, d = 1;
        // Brent's variant
        BigInt ys = y, q = 1;
        unsigned long r = 1, m = 128;
        while (d == 1) {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
            unsigned long k = 0;
            while (k < r && d == 1) {
                ys = y;
                unsigned long lim = std::min(m, r - k);
                for (unsigned long i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    q = q * ((x > y) ? x - y : y - x) % n;
                }
                d = big_gcd(q, n);
                k += m;
            }
            r <<= 1;
        }
        if (d == n) {
            d = 1;
            while (d == 1) {
                ys = (ys * ys + c) % n;
                d = big_gcd((x > ys) ? x - ys : ys - x, n);
            }
        }
        if (d != n) return d;
    }
}

inline void factor_rec(BigInt n, std::map<BigInt, unsigned>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    BigInt d = pollard_rho(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

} // namespace detail

/// Prime factorization as {prime -> exponent}, ascending.
inline std::map<BigInt, unsigned> factorize(BigInt n) {
    if (n <= 0) throw std::invalid_argument("factorize: need n >= 1");
    std::map<BigInt, unsigned> out;
    for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul}) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            ++out[BigInt(static_cast<long>(p))];
            n /= static_cast<long>(p);
        }
    }
    detail::factor_rec(n, out);
    return out;
}

inline std::vector<BigInt> prime_divisors(const BigInt& n) {
    std::vector<BigInt> ps;
    for (auto& [p, e] : factorize(n)) ps.push_back(p);
    return ps;
}

inline std::vector<long> prime_divisors(long n) {
    std::vector<long> ps;
    for (auto& [p, e] : factorize(BigInt(n))) ps.push_back(to_long(p));
    return ps;
}

/// Moebius function of n >= 1.
inline int moebius(long n) {
    if (n < 1) throw std::invalid_argument("moebius: need n >= 1");
    int sign = 1;
    for (auto& [p, e] : factorize(BigInt(n))) {
        if (e > 1) return 0;
        sign = -sign;
    }
    return sign;
}

inline std::vector<long> divisors(long n) {
    std::vector<long> ds;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            ds.push_back(d);
            if (d != n / d) ds.push_back(n / d);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

} // namespace glnq
