#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ramsey {

using bigint = boost::multiprecision::cpp_int;
using rational = boost::multiprecision::cpp_rational;

inline int floor_log2(std::int64_t x) {
    if (x <= 0) throw std::domain_error("floor_log2: argument must be positive");
    int r = 0;
    while (x > 1) { x >>= 1; ++r; }
    return r;
}

inline bigint binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    bigint r = 1;
    for (std::int64_t i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;
    }
    return r;
}

inline bigint pow_bigint(bigint base, bigint exp) {
    if (exp < 0) throw std::domain_error("pow_bigint: negative exponent");
    bigint r = 1;
    while (exp > 0) {
        if ((exp & 1) != 0) r *= base;
        base *= base;
        exp >>= 1;
    }
    return r;
}

inline rational pow_rational(const rational& base, std::int64_t exp) {
    if (exp == 0) return rational(1);
    if (base == 0) {
        if (exp < 0) throw std::domain_error("pow_rational: zero to negative power");
        return rational(0);
    }
    rational b = exp < 0 ? rational(1) / base : base;
    std::int64_t e = exp < 0 ? -exp : exp;
    rational r = 1;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

// floor(log2(num/den)) for positive rationals, exact.
inline std::int64_t floor_log2_rational(const rational& x) {
    if (x <= 0) throw std::domain_error("floor_log2_rational: argument must be positive");
    bigint num = boost::multiprecision::numerator(x);
    bigint den = boost::multiprecision::denominator(x);
    std::int64_t e = static_cast<std::int64_t>(boost::multiprecision::msb(num)) -
                     static_cast<std::int64_t>(boost::multiprecision::msb(den));
    // candidate e or e-1: x >= 2^e iff num >= den << e
    auto ge_pow = [&](std::int64_t p) {
        if (p >= 0) return num >= (den << static_cast<unsigned>(p));
        return (num << static_cast<unsigned>(-p)) >= den;
    };
    if (!ge_pow(e)) --e;
    return e;
}

// Directed fixed-point bound on log2(x) for rational x > 0.  Returns a rational
// that is <= log2(x) when round_up is false and >= log2(x) when true, within
// about 2^-frac_bits of the truth.  Used for sound log-space comparisons.
inline rational log2_bound(const rational& x, unsigned frac_bits, bool round_up) {
    if (x <= 0) throw std::domain_error("log2_bound: argument must be positive");
    const std::int64_t ilog = floor_log2_rational(x);
    const unsigned P = frac_bits + 64;
    bigint num = boost::multiprecision::numerator(x);
    bigint den = boost::multiprecision::denominator(x);
    // mantissa M ~ (x / 2^ilog) * 2^P, directed
    if (ilog >= 0) den <<= static_cast<unsigned>(ilog);
    else num <<= static_cast<unsigned>(-ilog);
    num <<= P;
    bigint M = round_up ? bigint((num + den - 1) / den) : bigint(num / den);

    bigint frac = 0; // accumulated fractional bits, frac_bits wide
    const bigint two_p1 = bigint(1) << (P + 1);
    for (unsigned i = 0; i < frac_bits; ++i) {
        frac <<= 1;
        bigint sq = M * M;
        M = round_up ? bigint((sq + (bigint(1) << P) - 1) >> P) : bigint(sq >> P);
        if (M >= two_p1) {
            frac += 1;
            if (round_up) M = (M + 1) >> 1;
            else M >>= 1;
        }
    }
    rational r = rational(frac, bigint(1) << frac_bits) + ilog;
    if (round_up) r += rational(1, bigint(1) << frac_bits);
    return r;
}

// FNV-1a 64-bit, used for manifest digests (identity, not security).
inline std::uint64_t fnv1a64(const void* data, std::size_t len, std::uint64_t h = 0xcbf29ce484222325ull) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ull;
    }
    return h;
}

// Kahan compensated summation; keeps certificate weights stable.
struct kahan_sum {
    double s = 0.0, c = 0.0;
    void add(double x) {
        double y = x - c;
        double t = s + y;
        c = (t - s) - y;
        s = t;
    }
    double value() const { return s; }
};

} // namespace ramsey
