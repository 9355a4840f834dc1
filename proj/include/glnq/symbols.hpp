/// Admissible symbols labeling irreducible FGL_n(q)-modules in non-defining
/// characteristic, their dimension engine, and the branching numbers that
/// count constituents over determinant subgroups.

#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <vector>

#include "glnq/fqbar.hpp"
#include "glnq/partition.hpp"
#include "glnq/qarith.hpp"

namespace glnq {

struct SymbolPair {
    FqBarClass cls;
    Partition la;

    auto operator<=>(const SymbolPair& o) const = default;
};

/// Equivalence class of pairs ([sigma_i], lambda^(i)) with pairwise
/// non-conjugate classes and sum deg(sigma_i)*|lambda^(i)| = n. Pairs are
/// kept sorted by (degree, canonical exponent, partition) so equal symbols
/// compare equal.
class AdmissibleSymbol {
  public:
    AdmissibleSymbol(long n, long q, std::vector<SymbolPair> pairs)
        : n_(n), q_(q), pairs_(std::move(pairs)) {
        if (pairs_.empty()) throw std::invalid_argument("symbol: needs at least one pair");
        long total = 0;
        for (auto& pr : pairs_) {
            if (pr.cls.q() != q_) throw std::invalid_argument("symbol: class over wrong field");
            if (pr.la.is_zero()) throw std::invalid_argument("symbol: zero partition in pair");
            total += pr.cls.deg() * pr.la.size();
        }
        if (total != n_) throw std::invalid_argument("symbol: degrees and partition sizes do not sum to n");
        std::sort(pairs_.begin(), pairs_.end(), [](const SymbolPair& a, const SymbolPair& b) {
            if (a.cls.deg() != b.cls.deg()) return a.cls.deg() < b.cls.deg();
            if (a.cls.exp() != b.cls.exp()) return a.cls.exp() < b.cls.exp();
            return a.la.parts() < b.la.parts();
        });
        for (std::size_t i = 1; i < pairs_.size(); ++i)
            if (pairs_[i].cls == pairs_[i - 1].cls)
                throw std::invalid_argument("symbol: conjugate classes collide");
    }

    long n() const { return n_; }
    long q() const { return q_; }
    const std::vector<SymbolPair>& pairs() const { return pairs_; }

    /// all classes ell'-elements (vacuous at ell = 0)
    bool admissible_for(long ell) const {
        for (auto& pr : pairs_)
            if (!pr.cls.is_ell_prime(ell)) return false;
        return true;
    }

    bool operator==(const AdmissibleSymbol& o) const {
        return n_ == o.n_ && q_ == o.q_ && pairs_ == o.pairs_;
    }

    std::string str() const {
        std::ostringstream os;
        for (std::size_t i = 0; i < pairs_.size(); ++i) {
            if (i) os << " * ";
            os << "L(" << pairs_[i].cls.str() << "," << pairs_[i].la.str() << ")";
        }
        return os.str();
    }

  private:
    long n_, q_;
    std::vector<SymbolPair> pairs_;
};

inline AdmissibleSymbol symbol_new(long n, long q, std::vector<SymbolPair> pairs) {
    return AdmissibleSymbol(n, q, std::move(pairs));
}

/// Harish-Chandra product: union of the pair lists at rank n1 + n2. The
/// product of symbols sharing a class is not irreducible and has no symbol.
inline AdmissibleSymbol hc_product(const AdmissibleSymbol& a, const AdmissibleSymbol& b) {
    if (a.q() != b.q()) throw std::invalid_argument("hc_product: mismatched q");
    for (auto& pa : a.pairs())
        for (auto& pb : b.pairs())
            if (pa.cls == pb.cls)
                throw std::invalid_argument("hc_product: overlapping classes, product not irreducible");
    std::vector<SymbolPair> pairs = a.pairs();
    pairs.insert(pairs.end(), b.pairs().begin(), b.pairs().end());
    return AdmissibleSymbol(a.n() + b.n(), a.q(), std::move(pairs));
}

/// Rewrites a possibly ell-singular label L(sigma, mu) as L(sigma', la) with
/// sigma' the ell'-part of sigma and la' = a * mu' where a is the degree
/// ratio. Valid labels have a = 1 or a = s * ell^r for s = s(deg sigma').
inline std::pair<FqBarClass, Partition> normalize_singular(const FqBarClass& sigma,
                                                           const Partition& mu, long ell) {
    if (sigma.is_ell_prime(ell)) return {sigma, mu};
    FqBarClass reg = ell_prime_part(sigma, ell);
    if (sigma.deg() % reg.deg() != 0) throw std::logic_error("normalize_singular: degree ratio");
    long a = sigma.deg() / reg.deg();
    if (a > 1) {
        long rest = a;
        while (rest % ell == 0) rest /= ell;
        ExtNat s = ell_params(sigma.q(), reg.deg(), ell).s;
        if (!(s == rest)) throw std::invalid_argument("normalize_singular: not a valid singular label");
    }
    std::vector<long> scaled;
    for (long part : mu.transpose().parts()) scaled.push_back(a * part);
    return {reg, Partition(scaled).transpose()};
}

/// Exact complex (and ell-generic) dimension when every partition is a
/// single row: N(n,q) / prod_i N(k_i, q^{d_i}). Multi-row components have no
/// closed form here and yield nullopt.
inline std::optional<BigInt> dim_complex(const AdmissibleSymbol& s) {
    for (auto& pr : s.pairs())
        if (!pr.la.is_single_row()) return std::nullopt;
    BigInt denom = 1;
    for (auto& pr : s.pairs())
        denom *= n_prod(pr.la.size(), big_pow(s.q(), static_cast<unsigned long>(pr.cls.deg())));
    return div_exact(n_prod(s.n(), s.q()), denom);
}

/// Guaranteed divisor of the dimension: the product over components of
/// N(k_i d_i, q)/N(k_i, q^{d_i}) times the Gaussian multinomial over block
/// sizes, which collapses to the same closed form independent of the
/// partition shapes.
inline BigInt dim_divisor(const AdmissibleSymbol& s) {
    BigInt denom = 1;
    for (auto& pr : s.pairs())
        denom *= n_prod(pr.la.size(), big_pow(s.q(), static_cast<unsigned long>(pr.cls.deg())));
    return div_exact(n_prod(s.n(), s.q()), denom);
}

namespace detail {

// floor( (q-1) q^(num/den) / 2 )
inline BigInt floor_half_qpow(long q, long num, unsigned long den) {
    BigInt val = big_pow(BigInt(q - 1), den) * big_pow(q, static_cast<unsigned long>(num));
    return floor_scaled_root(val, big_pow(BigInt(2), den), den);
}

// floor( (q-1) q^(num/den) )
inline BigInt floor_qpow(long q, long num, unsigned long den) {
    BigInt val = big_pow(BigInt(q - 1), den) * big_pow(q, static_cast<unsigned long>(num));
    return floor_scaled_root(val, 1, den);
}

} // namespace detail

/// Strongest published lower bound applicable to dim L(s) at characteristic
/// ell, as an exact integer floor (the true dimension strictly exceeds it).
/// Throws domain_error when no clause applies.
inline BigInt dim_lower_bound(const AdmissibleSymbol& s, long ell) {
    long n = s.n(), q = s.q();
    std::optional<BigInt> best;
    auto consider = [&](const BigInt& b) {
        if (!best || b > *best) best = b;
    };

    if (s.pairs().size() == 1) {
        const auto& pr = s.pairs()[0];
        long d = pr.cls.deg();
        if (d >= 2) consider(detail::floor_half_qpow(q, n * n - 4, 4));
        if (d >= 3) consider(detail::floor_half_qpow(q, n * n - 3, 3));
        if (d == 1) {
            ExtNat e = ell_params(q, 1, ell).e;
            if (is_e_divisible(pr.la, e) && e.is_finite()) {
                if (e.value() >= 2) consider(detail::floor_half_qpow(q, n * n - 4, 4));
                if (e.value() >= 3) consider(detail::floor_half_qpow(q, n * n - 3, 3));
            }
        }
    } else {
        bool zero_u_invariants = true;
        for (auto& pr : s.pairs()) {
            if (pr.cls.deg() > 1) continue;
            ExtNat e = ell_params(q, pr.cls.deg(), ell).e;
            if (!is_e_divisible(pr.la, e)) { zero_u_invariants = false; break; }
        }
        if (zero_u_invariants) {
            if (n >= 5) consider(detail::floor_qpow(q, n * n + 8, 4));
            else if (n == 4) consider(big_pow(q, 5) * (q - 1));
        }
    }
    if (!best) throw std::domain_error("dim_lower_bound: no clause applies");
    return *best;
}

/// tau . s : every class multiplied by the degree-1 class tau.
inline AdmissibleSymbol act_scalar(const AdmissibleSymbol& s, const FqBarClass& tau) {
    std::vector<SymbolPair> pairs;
    pairs.reserve(s.pairs().size());
    for (auto& pr : s.pairs()) pairs.push_back({scalar_mult(tau, pr.cls), pr.la});
    return AdmissibleSymbol(s.n(), s.q(), std::move(pairs));
}

namespace detail {

/// The subgroup of F_q^x of order u, as degree-1 classes.
inline std::vector<FqBarClass> cyclic_subgroup(long q, long u) {
    if (u <= 0 || (q - 1) % u != 0) throw std::invalid_argument("cyclic_subgroup: order must divide q-1");
    std::vector<FqBarClass> out;
    long step = (q - 1) / u;
    for (long j = 0; j < u; ++j) out.emplace_back(q, 1, j * step);
    return out;
}

} // namespace detail

/// Order of the stabilizer of s under the scalar action of the ell'-part of
/// F_q^x, by orbit enumeration.
inline long kappa_lprime(const AdmissibleSymbol& s, long ell) {
    if (!s.admissible_for(ell)) throw std::invalid_argument("kappa: symbol not admissible for ell");
    long u = ell_part(s.q() - 1, ell);
    long count = 0;
    for (auto& tau : detail::cyclic_subgroup(s.q(), (s.q() - 1) / u))
        if (act_scalar(s, tau) == s) ++count;
    return count;
}

/// ell-part of gcd(q - 1, Delta of the transposed multipartition).
inline long kappa_l(const AdmissibleSymbol& s, long ell) {
    if (!s.admissible_for(ell)) throw std::invalid_argument("kappa: symbol not admissible for ell");
    if (ell == 0) return 1;
    std::vector<Partition> comps;
    for (auto& pr : s.pairs()) comps.push_back(pr.la);
    long delta = Multipartition(std::move(comps)).transpose().delta();
    return ell_part(std::gcd(s.q() - 1, delta), ell);
}

/// Number of irreducible summands of L(s) restricted to SL_n(q).
inline long kappa_sl(const AdmissibleSymbol& s, long ell) {
    return kappa_lprime(s, ell) * kappa_l(s, ell);
}

struct BranchingReport {
    long kappa_lprime;
    long kappa_l;
    long kappa_sl;
};

inline BranchingReport branching_report(const AdmissibleSymbol& s, long ell) {
    long kp = kappa_lprime(s, ell);
    long kl = kappa_l(s, ell);
    return {kp, kl, kp * kl};
}

/// Number of composition factors of L(s) restricted to the unique subgroup H
/// with SL_n <= H <= GL_n and |det(H)| = m: the count of symbol-stabilizing
/// scalars whose order divides ((q-1)/m)_{ell'}, times
/// min{ kappa_l, ((q-1)/m)_ell }.
inline long kappa_gl_over_h(const AdmissibleSymbol& s, long m, long ell) {
    long q = s.q();
    if (m <= 0 || (q - 1) % m != 0) throw std::invalid_argument("kappa_gl_over_h: m must divide q-1");
    if (!s.admissible_for(ell)) throw std::invalid_argument("kappa: symbol not admissible for ell");
    long idx = (q - 1) / m; // |GL_n : H|
    long idx_ell = ell_part(idx, ell);
    long count = 0;
    for (auto& tau : detail::cyclic_subgroup(q, idx / idx_ell))
        if (act_scalar(s, tau) == s) ++count;
    return count * std::min(kappa_l(s, ell), idx_ell);
}

/// kappa^G_H via the quotient identity for SL_n <= H <= G <= GL_n with
/// det orders m_H | m_G. Non-integrality would contradict the identity and
/// is treated as an internal error.
inline long kappa_between(const AdmissibleSymbol& s, long m_G, long m_H, long ell) {
    if (m_G % m_H != 0 || (s.q() - 1) % m_G != 0)
        throw std::invalid_argument("kappa_between: need m_H | m_G | q-1");
    long over_h = kappa_gl_over_h(s, m_H, ell);
    long over_g = kappa_gl_over_h(s, m_G, ell);
    if (over_h % over_g != 0) throw std::logic_error("kappa_between: quotient not integral");
    return over_h / over_g;
}

/// Recognizes the Weil shape: exactly two degree-1 classes with partitions
/// (1) and (n-1). Returns (sigma, tau) with sigma carrying the (1).
inline std::optional<std::pair<FqBarClass, FqBarClass>> weil_recognize(const AdmissibleSymbol& s) {
    if (s.pairs().size() != 2) return std::nullopt;
    const auto& a = s.pairs()[0];
    const auto& b = s.pairs()[1];
    if (a.cls.deg() != 1 || b.cls.deg() != 1) return std::nullopt;
    if (!a.la.is_single_row() || !b.la.is_single_row()) return std::nullopt;
    long n = s.n();
    if (a.la.size() == 1 && b.la.size() == n - 1) return std::make_pair(a.cls, b.cls);
    if (b.la.size() == 1 && a.la.size() == n - 1) return std::make_pair(b.cls, a.cls);
    return std::nullopt;
}

/// one-dimensional modules are exactly L(tau,(n)) with deg(tau) = 1
inline bool is_one_dimensional(const AdmissibleSymbol& s) {
    return s.pairs().size() == 1 && s.pairs()[0].cls.deg() == 1 && s.pairs()[0].la.is_single_row();
}

/// Tensor products of two SL_n(q)-constituents of dimension > 1 are always
/// reducible; this is the statement-level predicate with the dimension-1
/// precondition enforced.
inline bool tensor_reducible(const AdmissibleSymbol& s1, const AdmissibleSymbol& s2, long ell) {
    if (s1.n() != s2.n() || s1.q() != s2.q())
        throw std::invalid_argument("tensor_reducible: mismatched groups");
    if (is_one_dimensional(s1) || is_one_dimensional(s2))
        throw std::invalid_argument("tensor_reducible: one-dimensional factor");
    if (!s1.admissible_for(ell) || !s2.admissible_for(ell))
        throw std::invalid_argument("tensor_reducible: symbol not admissible for ell");
    return true;
}

} // namespace glnq
