/// Arbitrary-precision integer helpers shared by all modules.
///
/// All formula arithmetic in this library is exact; BigInt is GMP's
/// mpz_class and nothing here may silently truncate.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace glnq {

using BigInt = mpz_class;

inline BigInt big_pow(const BigInt& base, unsigned long exp) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

inline BigInt big_pow(long base, unsigned long exp) { return big_pow(BigInt(base), exp); }

inline BigInt big_gcd(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline BigInt big_lcm(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

/// Exact quotient; throws if b does not divide a.
inline BigInt div_exact(const BigInt& a, const BigInt& b) {
    if (b == 0) throw std::invalid_argument("div_exact: zero divisor");
    if (a % b != 0) throw std::invalid_argument("div_exact: not divisible");
    return a / b;
}

inline long to_long(const BigInt& x) {
    if (!x.fits_slong_p()) throw std::overflow_error("to_long: value out of range");
    return x.get_si();
}

/// Largest m >= 0 with num_scale * m^root <= value (value >= 0, num_scale >= 1).
/// Used for exact integer floors of expressions c * q^(a/b).
inline BigInt floor_scaled_root(const BigInt& value, const BigInt& num_scale, unsigned long root) {
    if (value < 0) throw std::invalid_argument("floor_scaled_root: negative value");
    BigInt lo = 0, hi = 1;
    while (num_scale * big_pow(hi, root) <= value) hi <<= 1;
    // invariant: f(lo) <= value < f(hi)
    while (hi - lo > 1) {
        BigInt mid = (lo + hi) / 2;
        if (num_scale * big_pow(mid, root) <= value)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

/// A natural number extended with infinity. The quantum parameters s(d) and
/// e(d) take the value infinity in characteristic zero, and that case must
/// stay distinguishable from every finite value.
class ExtNat {
  public:
    ExtNat() : finite_(0), inf_(true) {}
    explicit ExtNat(long v) : finite_(v), inf_(false) {
        if (v < 0) throw std::invalid_argument("ExtNat: negative");
    }
    static ExtNat infinity() { return ExtNat(); }

    bool is_infinite() const { return inf_; }
    bool is_finite() const { return !inf_; }
    long value() const {
        if (inf_) throw std::logic_error("ExtNat: value() on infinity");
        return finite_;
    }
    bool operator==(const ExtNat& o) const {
        return inf_ == o.inf_ && (inf_ || finite_ == o.finite_);
    }
    bool operator==(long v) const { return !inf_ && finite_ == v; }

    std::string str() const { return inf_ ? "inf" : std::to_string(finite_); }

  private:
    long finite_;
    bool inf_;
};

} // namespace glnq
