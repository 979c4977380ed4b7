#pragma once

// Elements of V = { (a1,a2,a3,a4) in (Q/Z)^4 : a1+a2+a3+a4 = 0 } and the
// membership test for the set Lambda of order-preserving multiplier witnesses.

#include <array>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "delsarte/rational.hpp"

namespace delsarte {

struct CharacterVector {
    std::array<RationalMod1, 4> c{};

    CharacterVector() = default;

    explicit CharacterVector(std::array<RationalMod1, 4> coords) : c(coords) {
        RationalMod1 s = c[0] + c[1] + c[2] + c[3];
        if (!s.is_zero())
            throw std::invalid_argument("CharacterVector: coordinate sum is nonzero in Q/Z");
    }

    static CharacterVector of(int64 n1, int64 d1, int64 n2, int64 d2,
                              int64 n3, int64 d3, int64 n4, int64 d4) {
        return CharacterVector({reduce_mod1(n1, d1), reduce_mod1(n2, d2),
                                reduce_mod1(n3, d3), reduce_mod1(n4, d4)});
    }

    const RationalMod1& operator[](std::size_t i) const { return c[i]; }

    bool has_zero_coordinate() const {
        return c[0].is_zero() || c[1].is_zero() || c[2].is_zero() || c[3].is_zero();
    }

    // lcm of the four coordinate orders
    int64 order() const {
        int64 m = 1;
        for (const auto& x : c) {
            int64 g = std::gcd(m, x.den);
            m = narrow128(int128(m / g) * x.den, "CharacterVector::order");
        }
        return m;
    }

    // Numerators over the common denominator m = order().
    std::array<int64, 4> scaled_numerators(int64 m) const {
        return {c[0].num * (m / c[0].den), c[1].num * (m / c[1].den),
                c[2].num * (m / c[2].den), c[3].num * (m / c[3].den)};
    }

    CharacterVector times(int64 t) const {
        CharacterVector r;
        for (std::size_t i = 0; i < 4; ++i) r.c[i] = c[i].times(t);
        return r;
    }

    CharacterVector negated() const {
        CharacterVector r;
        for (std::size_t i = 0; i < 4; ++i) r.c[i] = -c[i];
        return r;
    }

    friend CharacterVector operator+(const CharacterVector& a, const CharacterVector& b) {
        CharacterVector r;
        for (std::size_t i = 0; i < 4; ++i) r.c[i] = a.c[i] + b.c[i];
        return r;
    }

    CharacterVector permuted(const std::array<int, 4>& p) const {
        CharacterVector r;
        for (std::size_t i = 0; i < 4; ++i) r.c[i] = c[p[i]];
        return r;
    }

    friend bool operator==(const CharacterVector&, const CharacterVector&) = default;

    friend bool operator<(const CharacterVector& a, const CharacterVector& b) {
        for (std::size_t i = 0; i < 4; ++i) {
            if (a.c[i] == b.c[i]) continue;
            return a.c[i] < b.c[i];
        }
        return false;
    }

    std::string str() const {
        return c[0].str() + "," + c[1].str() + "," + c[2].str() + "," + c[3].str();
    }
};

struct CharacterVectorHash {
    std::size_t operator()(const CharacterVector& v) const {
        std::size_t h = 0;
        for (const auto& x : v.c) h = h * 0x100000001b3ull ^ hash_value(x);
        return h;
    }
};

// Memoized unit lists: units(m) = { t in [1,m) : gcd(t,m) = 1 }.
class UnitsCache {
public:
    const std::vector<int64>& units(int64 m) {
        auto it = cache_.find(m);
        if (it != cache_.end()) return it->second;
        std::vector<int64> u;
        for (int64 t = 1; t < m; ++t)
            if (std::gcd(t, m) == 1) u.push_back(t);
        return cache_.emplace(m, std::move(u)).first->second;
    }

private:
    std::unordered_map<int64, std::vector<int64>> cache_;
};

// Sum of the fractional parts of t*x_i, in units of 1/m (m = ord(x)).
inline int64 scaled_fr_sum(const std::array<int64, 4>& a, int64 m, int64 t) {
    return (a[0] * t) % m + (a[1] * t) % m + (a[2] * t) % m + (a[3] * t) % m;
}

// Whether some t coprime to ord(x) gives fractional-part sum different from 2.
// A multiplier coprime to the lcm of the coordinate orders preserves every
// coordinate order and conversely, so this is exactly membership in Lambda.
// Precondition: x has no zero coordinate.
inline bool in_lambda(const CharacterVector& x, UnitsCache* cache = nullptr) {
    if (x.has_zero_coordinate())
        throw std::invalid_argument("in_lambda: element has a zero coordinate (not in L1)");
    const int64 m = x.order();
    const auto a = x.scaled_numerators(m);
    if (cache != nullptr) {
        for (int64 t : cache->units(m))
            if (scaled_fr_sum(a, m, t) != 2 * m) return true;
        return false;
    }
    for (int64 t = 1; t < m; ++t) {
        if (std::gcd(t, m) != 1) continue;
        if (scaled_fr_sum(a, m, t) != 2 * m) return true;
    }
    // m == 1 cannot occur here: every coordinate would be zero.
    return false;
}

// Whether at least one coordinate is the zero class (membership in L0).
inline bool in_L0(const CharacterVector& x) { return x.has_zero_coordinate(); }

}  // namespace delsarte
