#pragma once

// Classification of character-module elements: elements with a zero
// coordinate, elements of Lambda, and the three-way split of the remainder
// into decomposable, regular indecomposable and exceptional elements.  The
// exceptional set is reconstructed by exhaustive search over all candidate
// orders and is pinned to its known cardinality 22080.

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <numeric>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <thread>
#include <vector>

#include "delsarte/character.hpp"
#include "delsarte/group.hpp"
#include "delsarte/surface.hpp"

namespace delsarte {

enum class HodgeClassLabel { in_lambda, in_l0, decomposable, regular, exceptional };

inline const char* label_name(HodgeClassLabel l) {
    switch (l) {
        case HodgeClassLabel::in_lambda: return "lambda";
        case HodgeClassLabel::in_l0: return "l0";
        case HodgeClassLabel::decomposable: return "decomposable";
        case HodgeClassLabel::regular: return "regular";
        case HodgeClassLabel::exceptional: return "exceptional";
    }
    return "?";
}

// x1 + xj = 0 for some j; the other pair then also sums to zero.
inline bool is_decomposable(const CharacterVector& x) {
    return (x[0] + x[1]).is_zero() || (x[0] + x[2]).is_zero() || (x[0] + x[3]).is_zero();
}

inline const std::array<std::array<int, 4>, 24>& all_permutations4() {
    static const std::array<std::array<int, 4>, 24> perms = [] {
        std::array<std::array<int, 4>, 24> p{};
        std::array<int, 4> idx = {0, 1, 2, 3};
        int k = 0;
        do {
            p[k++] = idx;
        } while (std::next_permutation(idx.begin(), idx.end()));
        return p;
    }();
    return perms;
}

struct RegularFamily {
    int family;               // 1, 2 or 3
    std::array<int, 4> perm;  // slot i of the template holds x[perm[i]]
    RationalMod1 a;
};

// Match against the three template shapes
//   F1 = (a, 1/2, 1/2+a, -2a)
//   F2 = (a, 1/2+a, 1/2+2a, -4a)
//   F3 = (a, 1/3+a, 2/3+a, -3a)
// under all coordinate permutations.  Callers guarantee x has no zero
// coordinate and is not decomposable.
inline std::optional<RegularFamily> is_regular(const CharacterVector& x) {
    const RationalMod1 half = reduce_mod1(1, 2);
    const RationalMod1 third = reduce_mod1(1, 3);
    const RationalMod1 two_thirds = reduce_mod1(2, 3);
    for (const auto& p : all_permutations4()) {
        const RationalMod1& y0 = x[p[0]];
        const RationalMod1& y1 = x[p[1]];
        const RationalMod1& y2 = x[p[2]];
        const RationalMod1& y3 = x[p[3]];
        RationalMod1 a = y0;
        if (y1 == half && y2 == half + a && y3 == -(a + a))
            return RegularFamily{1, p, a};
        if (y1 == half + a && y2 == half + a + a && y3 == -(a.times(4)))
            return RegularFamily{2, p, a};
        if (y1 == third + a && y2 == two_thirds + a && y3 == -(a.times(3)))
            return RegularFamily{3, p, a};
    }
    return std::nullopt;
}

// The finite residual set: elements of V with no zero coordinate that are not
// decomposable, not regular and admit no Lambda witness.  One packed key per
// vector: numerators over the common denominator d = ord(x), 12 bits each.
class ExceptionalSet {
public:
    static constexpr int64 default_max_order = 180;
    static constexpr int64 expected_default_count = 22080;

    int64 max_order = 0;

    static ExceptionalSet build(int64 max_order = default_max_order, int threads = 1);

    std::size_t size() const { return keys_.size(); }

    bool contains(const CharacterVector& x) const {
        if (x.has_zero_coordinate()) return false;
        int64 d = x.order();
        if (d < 2 || d > max_order) return false;
        auto a = x.scaled_numerators(d);
        std::uint64_t key = pack(d, a);
        return std::binary_search(keys_.begin(), keys_.end(), key);
    }

    CharacterVector vector_at(std::size_t i) const {
        std::uint64_t k = keys_[i];
        int64 d = static_cast<int64>(k >> 48);
        return CharacterVector::of(static_cast<int64>((k >> 36) & 0xfff), d,
                                   static_cast<int64>((k >> 24) & 0xfff), d,
                                   static_cast<int64>((k >> 12) & 0xfff), d,
                                   static_cast<int64>(k & 0xfff), d);
    }

    // One vector per line, coordinates as reduced fractions; ascending by
    // (order, numerators), byte-stable across runs and thread counts.
    void emit(std::ostream& os) const {
        for (std::size_t i = 0; i < keys_.size(); ++i) os << vector_at(i).str() << "\n";
    }

private:
    std::vector<std::uint64_t> keys_;  // sorted

    static std::uint64_t pack(int64 d, const std::array<int64, 4>& a) {
        return (static_cast<std::uint64_t>(d) << 48) |
               (static_cast<std::uint64_t>(a[0]) << 36) |
               (static_cast<std::uint64_t>(a[1]) << 24) |
               (static_cast<std::uint64_t>(a[2]) << 12) |
               static_cast<std::uint64_t>(a[3]);
    }

    static void scan_order(int64 d, const std::vector<int64>& units,
                           std::vector<std::uint64_t>& out);
};

inline void ExceptionalSet::scan_order(int64 d, const std::vector<int64>& units,
                                       std::vector<std::uint64_t>& out) {
    // Candidates with exact lcm-order d: numerators (a1,a2,a3,a4) over d with
    // gcd(a1,a2,a3,d) = 1 (which forces gcd with a4 as well) and
    // a1+a2+a3+a4 = 2d, i.e. fractional-part sum 2 at t = 1.  Sums d and 3d
    // belong to Lambda with witness t = 1 and are skipped by construction.
    for (int64 a1 = 1; a1 < d; ++a1) {
        const int64 g1 = std::gcd(a1, d);
        for (int64 a2 = 1; a2 < d; ++a2) {
            const int64 g12 = std::gcd(g1, a2);
            const int64 lo = std::max<int64>(1, d - a1 - a2 + 1);
            const int64 hi = std::min<int64>(d - 1, 2 * d - a1 - a2 - 1);
            for (int64 a3 = lo; a3 <= hi; ++a3) {
                if (g12 != 1 && std::gcd(g12, a3) != 1) continue;
                const int64 a4 = 2 * d - a1 - a2 - a3;
                // decomposable: some pair of numerators sums to d
                if (a1 + a2 == d || a1 + a3 == d || a2 + a3 == d) continue;
                bool witness = false;
                for (int64 t : units) {
                    if (t == 1) continue;
                    int64 s = (a1 * t) % d + (a2 * t) % d + (a3 * t) % d + (a4 * t) % d;
                    if (s != 2 * d) {
                        witness = true;
                        break;
                    }
                }
                if (witness) continue;
                CharacterVector x = CharacterVector::of(a1, d, a2, d, a3, d, a4, d);
                if (is_regular(x)) continue;
                out.push_back(pack(d, {a1, a2, a3, a4}));
            }
        }
    }
}

inline ExceptionalSet ExceptionalSet::build(int64 max_order, int threads) {
    if (max_order < 2 || max_order > 4095)
        throw std::invalid_argument("ExceptionalSet: order bound must lie in [2, 4095]");
    ExceptionalSet set;
    set.max_order = max_order;

    std::vector<std::vector<int64>> units(max_order + 1);
    for (int64 d = 2; d <= max_order; ++d)
        for (int64 t = 1; t < d; ++t)
            if (std::gcd(t, d) == 1) units[d].push_back(t);

    if (threads <= 1) {
        for (int64 d = 2; d <= max_order; ++d) scan_order(d, units[d], set.keys_);
    } else {
        std::vector<std::vector<std::uint64_t>> parts(max_order + 1);
        std::atomic<int64> next{2};
        auto worker = [&] {
            for (;;) {
                int64 d = next.fetch_add(1);
                if (d > max_order) return;
                scan_order(d, units[d], parts[d]);
            }
        };
        std::vector<std::thread> pool;
        for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
        for (int64 d = 2; d <= max_order; ++d)
            set.keys_.insert(set.keys_.end(), parts[d].begin(), parts[d].end());
    }
    std::sort(set.keys_.begin(), set.keys_.end());

    if (max_order == default_max_order &&
        static_cast<int64>(set.keys_.size()) != expected_default_count)
        throw std::logic_error("ExceptionalSet: search returned " +
                               std::to_string(set.keys_.size()) + " elements, expected " +
                               std::to_string(expected_default_count));
    return set;
}

// Label one element.  The cascade is total on every module element
// encountered in practice; anything else violates the known completeness of
// the trichotomy and is reported as a hard error.
inline HodgeClassLabel classify(const CharacterVector& x, const ExceptionalSet& exc) {
    if (x.has_zero_coordinate()) return HodgeClassLabel::in_l0;
    if (in_lambda(x)) return HodgeClassLabel::in_lambda;
    if (is_decomposable(x)) return HodgeClassLabel::decomposable;
    if (is_regular(x)) return HodgeClassLabel::regular;
    if (exc.contains(x)) return HodgeClassLabel::exceptional;
    throw std::logic_error("classify: unclassifiable element " + x.str());
}

struct ClassCensus {
    int64 total = 0;
    int64 l0 = 0;
    int64 decomposable = 0;
    int64 regular = 0;
    int64 exceptional = 0;
    int64 lambda = 0;  // remainder
};

// Census over L that never consults the Lambda witness test: elements fall to
// L0 / D / R / I by their own predicates and everything left is counted as
// Lambda.  This is the counting path independent of lefschetz().
inline ClassCensus structural_census(const std::vector<CharacterVector>& elements,
                                     const ExceptionalSet& exc) {
    ClassCensus c;
    c.total = static_cast<int64>(elements.size());
    for (const CharacterVector& x : elements) {
        if (x.has_zero_coordinate())
            ++c.l0;
        else if (is_decomposable(x))
            ++c.decomposable;
        else if (is_regular(x))
            ++c.regular;
        else if (exc.contains(x))
            ++c.exceptional;
    }
    c.lambda = c.total - c.l0 - c.decomposable - c.regular - c.exceptional;
    return c;
}

// #Lambda = #L - #(L0 u D) - #I - #R computed from structural labels only.
inline int64 structural_lefschetz(const DelsarteMatrix& a, const ExceptionalSet& exc) {
    CharacterGroup g = CharacterGroup::build(a);
    ClassCensus c;
    c.total = g.cardinality;
    g.for_each_element([&](const CharacterVector& x) {
        if (x.has_zero_coordinate())
            ++c.l0;
        else if (is_decomposable(x))
            ++c.decomposable;
        else if (is_regular(x))
            ++c.regular;
        else if (exc.contains(x))
            ++c.exceptional;
    });
    return c.total - c.l0 - c.decomposable - c.regular - c.exceptional;
}

// #L0 by inclusion-exclusion over the four coordinate-vanishing subgroups
// N_i = { x in L : x_i = 0 }, counted through lattice indices alone.
inline int64 count_L0_inclusion_exclusion(const DelsarteMatrix& a) {
    Int full_index = lattice_index(kernel_lattice(a));
    int64 total = 0;
    for (int mask = 1; mask < 16; ++mask) {
        std::vector<int> cols;
        for (int i = 0; i < 4; ++i)
            if (mask & (1 << i)) cols.push_back(i);
        Int sub_index = lattice_index(kernel_lattice_for_columns(a, cols));
        Int count = full_index / sub_index;
        if (count * sub_index != full_index)
            throw std::logic_error("count_L0: subgroup index does not divide #L");
        int64 c = mpz_get_si(count.get_mpz_t());
        total += (cols.size() % 2 == 1) ? c : -c;
    }
    return total;
}

}  // namespace delsarte
