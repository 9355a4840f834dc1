/// Conjugacy classes of elements of the multiplicative group of the
/// algebraic closure of F_q.
///
/// A class is stored as a Frobenius orbit of exponents relative to one fixed
/// abstract generator of F_{q^d}^x per (q,d); every operation in scope
/// (degree, order, conjugacy, scalar action, inversion, ell-parts) is
/// exponent arithmetic, so no field elements are ever materialized.

#pragma once

#include <numeric>
#include <optional>
#include <sstream>
#include <vector>

#include "glnq/numeric.hpp"
#include "glnq/primes.hpp"
#include "glnq/qarith.hpp"

namespace glnq {

namespace detail {

/// q^d - 1 with the 2^40 overflow guard.
inline long field_card_minus_one(long q, long d) {
    if (q < 2 || d < 1) throw std::invalid_argument("field params: q >= 2, d >= 1");
    BigInt m = big_pow(q, static_cast<unsigned long>(d));
    if (m > (BigInt(1) << 40)) throw std::overflow_error("field size exceeds 2^40 guard");
    return to_long(m) - 1;
}

inline long mulmod(long a, long b, long m) {
    return static_cast<long>((static_cast<__int128>(a) * b) % m);
}

/// Frobenius orbit of e under multiplication by q mod m; returns (min, size).
inline std::pair<long, long> frobenius_orbit(long e, long q, long m) {
    long cur = e, mn = e, size = 0;
    do {
        if (cur < mn) mn = cur;
        cur = mulmod(cur, q, m);
        ++size;
    } while (cur != e);
    return {mn, size};
}

inline long modinv(long a, long m) {
    long g = m, x = 0, x1 = 1, a1 = ((a % m) + m) % m;
    while (a1 != 0) {
        long qq = g / a1;
        g -= qq * a1;
        std::swap(g, a1);
        x -= qq * x1;
        std::swap(x, x1);
    }
    if (g != 1) throw std::invalid_argument("modinv: not invertible");
    return ((x % m) + m) % m;
}

} // namespace detail

/// Thrown by class_new when the exponent's Frobenius orbit is smaller than
/// the requested degree; carries the degree the element actually has.
class DegreeNotMinimal : public std::invalid_argument {
  public:
    DegreeNotMinimal(long true_degree)
        : std::invalid_argument("degree not minimal: element has degree " +
                                std::to_string(true_degree)),
          true_degree_(true_degree) {}
    long true_degree() const { return true_degree_; }

  private:
    long true_degree_;
};

class FqBarClass {
  public:
    /// Canonicalizes raw_exp to the minimum of its Frobenius orbit. Rejects
    /// exponents whose orbit has size < d: the element lives in a proper
    /// subfield and must be re-created at its true degree.
    FqBarClass(long q, long d, long raw_exp) : q_(q), d_(d) {
        long m = detail::field_card_minus_one(q, d);
        long e = ((raw_exp % m) + m) % m;
        auto [mn, size] = detail::frobenius_orbit(e, q, m);
        if (size != d) throw DegreeNotMinimal(size);
        exp_ = mn;
    }

    long q() const { return q_; }
    long deg() const { return d_; }
    long exp() const { return exp_; }
    long modulus() const { return detail::field_card_minus_one(q_, d_); }

    long order() const {
        long m = modulus();
        return m / std::gcd(exp_, m);
    }

    bool is_identity() const { return exp_ == 0; }

    /// order coprime to ell (every element when ell = 0)
    bool is_ell_prime(long ell) const { return ell == 0 || order() % ell != 0; }

    bool operator==(const FqBarClass& o) const {
        return q_ == o.q_ && d_ == o.d_ && exp_ == o.exp_;
    }
    auto operator<=>(const FqBarClass& o) const = default;

    std::string str() const {
        std::ostringstream os;
        os << "sigma(q=" << q_ << ",d=" << d_ << ",exp=" << exp_ << ")";
        return os.str();
    }

  private:
    long q_, d_;
    long exp_;
};

inline FqBarClass class_new(long q, long d, long raw_exp) { return FqBarClass(q, d, raw_exp); }

inline FqBarClass identity_class(long q) { return FqBarClass(q, 1, 0); }

namespace detail {

/// Re-express an exponent of F_{q^d}^x at its true degree d0: the subfield
/// subgroup is generated by g^{(q^d-1)/(q^{d0}-1)}.
inline FqBarClass at_true_degree(long q, long d, long e) {
    long m = field_card_minus_one(q, d);
    e = ((e % m) + m) % m;
    auto [mn, d0] = frobenius_orbit(e, q, m);
    if (d0 == d) return FqBarClass(q, d, e);
    long step = m / field_card_minus_one(q, d0);
    return FqBarClass(q, d0, mn / step);
}

} // namespace detail

/// The ell'-part of the class: the unique ell'-element t with s = s_ell * t
/// in the cyclic group, returned at its true (possibly smaller) degree.
/// Identity map when ell = 0.
inline FqBarClass ell_prime_part(const FqBarClass& c, long ell) {
    if (ell == 0) return c;
    long o = c.order();
    long o_ell = ell_part(o, ell);
    long o_rest = o / o_ell;
    // a = 0 mod o_ell, a = 1 mod o_rest
    long a = (o_rest == 1) ? 0 : detail::mulmod(o_ell, detail::modinv(o_ell % o_rest, o_rest), o);
    long m = c.modulus();
    long new_exp = detail::mulmod(c.exp(), a % m, m);
    return detail::at_true_degree(c.q(), c.deg(), new_exp);
}

/// Class of tau * sigma for a degree-1 class tau; the degree of sigma is
/// preserved.
inline FqBarClass scalar_mult(const FqBarClass& tau, const FqBarClass& c) {
    if (tau.q() != c.q()) throw std::invalid_argument("scalar_mult: mismatched q");
    if (tau.deg() != 1) throw std::invalid_argument("scalar_mult: tau must have degree 1");
    long m = c.modulus();
    long embedded = detail::mulmod(tau.exp(), m / (c.q() - 1), m);
    long e = (c.exp() + embedded) % m;
    auto [mn, size] = detail::frobenius_orbit(e, c.q(), m);
    if (size != c.deg()) throw std::logic_error("scalar_mult: degree changed");
    return FqBarClass(c.q(), c.deg(), mn);
}

inline FqBarClass inverse_class(const FqBarClass& c) {
    long m = c.modulus();
    return FqBarClass(c.q(), c.deg(), (m - c.exp()) % m);
}

/// Quantum parameters attached to a degree: s(d) = multiplicative order of
/// q^d mod ell, and e(d) = s(d) unless q^d = 1 mod ell, when it is ell.
/// Both are infinite in characteristic zero.
struct EllParams {
    long d;
    ExtNat s;
    ExtNat e;
};

inline ExtNat mult_order_mod(long base, long mod) {
    long b = ((base % mod) + mod) % mod;
    if (std::gcd(b, mod) != 1) throw std::invalid_argument("mult_order_mod: not invertible");
    long cur = b % mod, o = 1;
    while (cur != 1 % mod) {
        cur = detail::mulmod(cur, b, mod);
        ++o;
    }
    return ExtNat(o);
}

inline EllParams ell_params(long q, long d, long ell) {
    if (ell == 0) return {d, ExtNat::infinity(), ExtNat::infinity()};
    if (!is_prime(ell) || q % ell == 0) throw std::invalid_argument("ell_params: bad ell");
    BigInt qd = big_pow(q, static_cast<unsigned long>(d));
    long base = to_long(qd % ell);
    ExtNat s = mult_order_mod(base, ell);
    ExtNat e = (s == 1) ? ExtNat(ell) : s;
    return {d, s, e};
}

/// e derived from an abstract (s, ell) pair, for grid tests that fix s and
/// ell directly instead of deriving them from (q, d).
inline ExtNat e_from(const ExtNat& s, long ell) {
    if (s.is_infinite()) return ExtNat::infinity();
    if (s.value() == 1) {
        if (ell == 0) throw std::invalid_argument("e_from: s = 1 requires positive ell");
        return ExtNat(ell);
    }
    return s;
}

/// All classes of degree exactly d, by canonical exponent. The count matches
/// (1/d) sum_{e | d} moebius(d/e) (q^e - 1).
inline std::vector<FqBarClass> enumerate_classes(long q, long d) {
    long m = detail::field_card_minus_one(q, d);
    std::vector<FqBarClass> out;
    for (long e = 0; e < m; ++e) {
        auto [mn, size] = detail::frobenius_orbit(e, q, m);
        if (size == d && mn == e) out.emplace_back(q, d, e);
    }
    return out;
}

} // namespace glnq
