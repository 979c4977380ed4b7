#pragma once

// Canonical exact arithmetic in Q/Z.
//
// Every element of Q/Z is stored as the unique reduced fraction num/den with
// 0 <= num < den and gcd(num, den) = 1; the zero class is 0/1.  All operations
// keep values canonical, so equality, hashing and additive order are O(1).
// Intermediate products are evaluated in 128-bit arithmetic and narrowed back
// with an explicit range check; overflow is impossible for any group that fits
// in memory, but a failed narrowing throws instead of wrapping.

#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace delsarte {

using int64 = std::int64_t;
using int128 = __int128;

inline int128 gcd128(int128 a, int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline int64 narrow128(int128 v, const char* what) {
    if (v > INT64_MAX || v < INT64_MIN)
        throw std::overflow_error(std::string("64-bit overflow in ") + what);
    return static_cast<int64>(v);
}

struct RationalMod1 {
    int64 num = 0;
    int64 den = 1;

    RationalMod1() = default;

    // Canonical representative of p/q mod 1.  q must be nonzero.
    static RationalMod1 reduce(int64 p, int64 q) {
        if (q == 0) throw std::invalid_argument("reduce_mod1: zero denominator");
        if (q < 0) { p = -p; q = -q; }
        int64 r = p % q;
        if (r < 0) r += q;
        int64 g = std::gcd(r, q);
        RationalMod1 x;
        x.num = r / g;
        x.den = q / g;
        return x;
    }

    static RationalMod1 reduce(const mpz_class& p, const mpz_class& q) {
        if (q == 0) throw std::invalid_argument("reduce_mod1: zero denominator");
        mpz_class qq = abs(q);
        mpz_class r;
        mpz_fdiv_r(r.get_mpz_t(), (q < 0 ? mpz_class(-p) : p).get_mpz_t(), qq.get_mpz_t());
        mpz_class g = gcd(r, qq);
        r /= g;
        qq /= g;
        if (!r.fits_slong_p() || !qq.fits_slong_p())
            throw std::overflow_error("reduce_mod1: reduced fraction exceeds 64 bits");
        RationalMod1 x;
        x.num = mpz_get_si(r.get_mpz_t());
        x.den = mpz_get_si(qq.get_mpz_t());
        return x;
    }

    static RationalMod1 reduce(const mpq_class& q) {
        return reduce(q.get_num(), q.get_den());
    }

    bool is_zero() const { return num == 0; }

    // Additive order in Q/Z; equals the canonical denominator.
    int64 order() const { return den; }

    friend RationalMod1 operator+(const RationalMod1& a, const RationalMod1& b) {
        int64 g = std::gcd(a.den, b.den);
        int128 l = int128(a.den / g) * b.den;
        int128 n = int128(a.num) * (b.den / g) + int128(b.num) * (a.den / g);
        n %= l;
        int128 gg = gcd128(n, l);
        if (gg == 0) gg = 1;
        RationalMod1 x;
        x.num = narrow128(n / gg, "RationalMod1::operator+");
        x.den = narrow128(l / gg, "RationalMod1::operator+");
        return x;
    }

    RationalMod1 operator-() const {
        if (num == 0) return {};
        RationalMod1 x;
        x.num = den - num;
        x.den = den;
        return x;
    }

    friend RationalMod1 operator-(const RationalMod1& a, const RationalMod1& b) {
        return a + (-b);
    }

    // t * (num/den) mod 1
    RationalMod1 times(int64 t) const {
        int64 tm = t % den;
        if (tm < 0) tm += den;
        int128 n = int128(tm) * num % den;
        int128 g = gcd128(n, den);
        if (g == 0) g = 1;
        RationalMod1 x;
        x.num = narrow128(n / g, "RationalMod1::times");
        x.den = den / static_cast<int64>(g);
        return x;
    }

    friend bool operator==(const RationalMod1&, const RationalMod1&) = default;

    // Order by value in [0,1).
    friend bool operator<(const RationalMod1& a, const RationalMod1& b) {
        return int128(a.num) * b.den < int128(b.num) * a.den;
    }

    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

// p/q mod 1 as a canonical fraction.
inline RationalMod1 reduce_mod1(int64 p, int64 q) { return RationalMod1::reduce(p, q); }

// The natural bijection from Q/Z onto [0,1) as an exact rational.
inline mpq_class fr(const RationalMod1& x) {
    return mpq_class(static_cast<long>(x.num), static_cast<long>(x.den));
}

// Additive order in Q/Z.
inline int64 ord_plus(const RationalMod1& x) { return x.den; }

inline std::size_t hash_value(const RationalMod1& x) {
    std::uint64_t h = static_cast<std::uint64_t>(x.num) * 0x9e3779b97f4a7c15ull;
    h ^= static_cast<std::uint64_t>(x.den) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
}

}  // namespace delsarte
