/// Exact integer arithmetic behind the dimension and branching formulas:
/// q-factorial products, Gaussian binomials, ell-parts, primitive prime
/// divisors, and the mixed-radix partition expansions used by the quantum
/// weight combinatorics.

#pragma once

#include <optional>
#include <vector>

#include "glnq/numeric.hpp"
#include "glnq/partition.hpp"
#include "glnq/primes.hpp"

namespace glnq {

/// Ambient parameters: q = p^f with ell prime-or-zero not dividing q.
struct NatParams {
    long q = 2;
    long p = 2;
    long f = 1;
    long ell = 0;

    NatParams(long q_, long ell_) : q(q_), ell(ell_) {
        if (q < 2) throw std::invalid_argument("NatParams: q >= 2");
        auto fac = factorize(BigInt(q));
        if (fac.size() != 1) throw std::invalid_argument("NatParams: q must be a prime power");
        p = to_long(fac.begin()->first);
        f = static_cast<long>(fac.begin()->second);
        if (ell < 0 || (ell > 0 && !is_prime(ell)))
            throw std::invalid_argument("NatParams: ell must be prime or 0");
        if (ell > 0 && q % ell == 0) throw std::invalid_argument("NatParams: ell divides q");
    }
};

/// N(m,t) = prod_{i=1..m} (t^i - 1); empty product for m = 0.
inline BigInt n_prod(long m, const BigInt& t) {
    if (m < 0) throw std::invalid_argument("n_prod: m >= 0");
    if (t < 2) throw std::invalid_argument("n_prod: t >= 2");
    BigInt acc = 1, tp = 1;
    for (long i = 1; i <= m; ++i) {
        tp *= t;
        acc *= tp - 1;
    }
    return acc;
}

inline BigInt n_prod(long m, long t) { return n_prod(m, BigInt(t)); }

/// Gaussian binomial N(n,q) / (N(k,q) N(n-k,q)); exact.
inline BigInt gauss_binom(long n, long k, const BigInt& q) {
    if (k < 0 || k > n) throw std::invalid_argument("gauss_binom: need 0 <= k <= n");
    return div_exact(n_prod(n, q), n_prod(k, q) * n_prod(n - k, q));
}

inline BigInt gauss_binom(long n, long k, long q) { return gauss_binom(n, k, BigInt(q)); }

/// Largest power of ell dividing x; 1 when ell = 0.
inline BigInt ell_part(BigInt x, long ell) {
    if (x <= 0) throw std::invalid_argument("ell_part: x >= 1");
    if (ell == 0) return 1;
    BigInt r = 1;
    while (x % ell == 0) {
        x /= ell;
        r *= ell;
    }
    return r;
}

inline long ell_part(long x, long ell) { return to_long(ell_part(BigInt(x), ell)); }

/// Complementary factor: x / ell_part(x, ell).
inline BigInt ell_prime_part_of(const BigInt& x, long ell) { return x / ell_part(x, ell); }

/// Value of the n-th cyclotomic polynomial at m, by Moebius inversion over
/// the factorization of m^n - 1.
inline BigInt cyclotomic_value(long n, const BigInt& m) {
    BigInt num = 1, den = 1;
    for (long d : divisors(n)) {
        int mu = moebius(n / d);
        BigInt f = big_pow(m, static_cast<unsigned long>(d)) - 1;
        if (mu == 1) num *= f;
        if (mu == -1) den *= f;
    }
    return div_exact(num, den);
}

/// Smallest prime r whose multiplicative order mod m is exactly n (then
/// automatically r > n and r | m^n - 1 but r does not divide m^i - 1 for
/// i < n). Returns nullopt when no such prime exists, which happens exactly
/// for (m,n) = (2,6) and for m a Mersenne prime with n = 2.
inline std::optional<BigInt> ppd(const BigInt& m, long n) {
    if (m < 2 || n < 2) throw std::invalid_argument("ppd: need m, n >= 2");
    std::optional<BigInt> best;
    for (const BigInt& r : prime_divisors(cyclotomic_value(n, m))) {
        bool full_order = true;
        for (long pn : prime_divisors(n)) {
            BigInt sub = big_pow(m, static_cast<unsigned long>(n / pn)) - 1;
            if (sub % r == 0) { full_order = false; break; }
        }
        if (!full_order) continue;
        if (!best || r < *best) best = r;
    }
    return best;
}

inline std::optional<BigInt> ppd(long m, long n) { return ppd(BigInt(m), n); }

/// Is every part of la' divisible by e? For e = infinity only the zero
/// partition qualifies.
inline bool is_e_divisible(const Partition& la, const ExtNat& e) {
    if (e.is_infinite()) return la.is_zero();
    if (e.value() < 1) throw std::invalid_argument("is_e_divisible: e >= 1");
    for (long part : la.transpose().parts())
        if (part % e.value() != 0) return false;
    return true;
}

/// Greedy (s,ell)-adic expansion la = la[-1] + s la[0] + s ell la[1] + ...
/// with la[-1] s-restricted and each la[i] ell-restricted. The expansion is
/// not unique in general; this routine fixes the mixed-radix digit expansion
/// of every column multiplicity (first digit base s, remaining digits base
/// ell), which makes all downstream results deterministic.
///
/// Returned list starts with la[-1]. For s = infinity the list is {la}.
/// For ell = 0 with finite s the quotient past the s-digit is a single
/// unconstrained layer, matching characteristic zero at a root of unity.
inline std::vector<Partition> sl_adic_expansion(const Partition& la, const ExtNat& s, long ell) {
    if (s.is_finite() && s.value() < 1) throw std::invalid_argument("sl_adic_expansion: s >= 1");
    if (ell < 0 || (ell > 0 && !is_prime(ell)))
        throw std::invalid_argument("sl_adic_expansion: ell prime or 0");
    if (s.is_infinite()) return {la};

    long height = static_cast<long>(la.num_parts());
    // digit_mults[j][h] = multiplicity of columns of height h in layer j
    std::vector<std::vector<long>> digit_mults;
    auto mult_at = [&](std::size_t j, long h) -> long& {
        while (digit_mults.size() <= j) digit_mults.emplace_back(height + 1, 0L);
        return digit_mults[j][h];
    };

    for (long h = 1; h <= height; ++h) {
        long m = la.column_multiplicity(static_cast<std::size_t>(h));
        mult_at(0, h) = m % s.value();
        m /= s.value();
        if (ell == 0) {
            if (m > 0) mult_at(1, h) = m;
        } else {
            for (std::size_t j = 1; m > 0; ++j) {
                mult_at(j, h) = m % ell;
                m /= ell;
            }
        }
    }
    if (digit_mults.empty()) digit_mults.emplace_back(height + 1, 0L);

    std::vector<Partition> layers;
    for (auto& mults : digit_mults) {
        // row i of the layer = number of its columns of height >= i
        std::vector<long> parts;
        for (long i = 1; i <= height; ++i) {
            long row = 0;
            for (long h = i; h <= height; ++h) row += mults[h];
            if (row == 0) break;
            parts.push_back(row);
        }
        layers.emplace_back(parts);
    }
    while (layers.size() > 1 && layers.back().is_zero()) layers.pop_back();
    return layers;
}

/// r-restrictedness of a partition viewed in Lambda^+(N) with N exceeding the
/// number of parts: all column multiplicities are < r.
inline bool is_restricted(const Partition& la, const ExtNat& r) {
    if (r.is_infinite()) return true;
    if (r.value() == 0) return true; // characteristic-zero layer: unconstrained
    for (std::size_t h = 1; h <= la.num_parts(); ++h)
        if (la.column_multiplicity(h) >= r.value()) return false;
    return true;
}

/// Lower bound (q^n - q)/(q-1) - 1 for the smallest nontrivial projective
/// representation degree of SL_n(q). Not applicable for the four listed
/// exceptional pairs.
inline BigInt dl_lower_bound(long n, long q) {
    if (n < 2 || q < 2) throw std::invalid_argument("dl_lower_bound: n, q >= 2");
    if ((n == 3 && q == 2) || (n == 3 && q == 4) || (n == 4 && q == 2) || (n == 4 && q == 3))
        throw std::domain_error("dl_lower_bound: bound not applicable for this (n,q)");
    BigInt qn = big_pow(q, static_cast<unsigned long>(n));
    return div_exact(qn - q, BigInt(q - 1)) - 1;
}

} // namespace glnq
