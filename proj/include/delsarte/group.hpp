#pragma once

// The finite character module L of a Delsarte surface.
//
// From the exponent matrix A we take the rows v = e1 A^-1, w = e2 A^-1,
// u = e3 A^-1 reduced mod 1.  They generate the finite module
// L = { i v + j w + k u } inside (Q/Z)^4.  The kernel of (i,j,k) -> iv+jw+ku
// is a full-rank sublattice K of Z^3; a Hermite basis of K gives coset
// representatives [0,d1) x [0,d2) x [0,d3) that enumerate L without repeats.
// The Lefschetz number is the count of elements with no zero coordinate that
// admit an order-preserving multiplier with fractional-part sum different
// from 2, and the Picard number is b2 minus that count.

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "delsarte/character.hpp"
#include "delsarte/matrix.hpp"
#include "delsarte/surface.hpp"

namespace delsarte {

struct Generators {
    CharacterVector v, w, u;
};

namespace detail {

// Integer matrix M (3x4) and modulus D with generator r = M[r] / D exactly.
struct ScaledGenerators {
    std::array<std::array<Int, 4>, 3> m;
    Int d;  // |det A|
};

inline ScaledGenerators scaled_generators(const DelsarteMatrix& a) {
    static const int64 e[3][4] = {{1, 0, 0, -1}, {0, 1, 0, -1}, {0, 0, 1, -1}};
    IntMatrix4 adj = adjugate4(a.matrix());
    int sign = sgn(a.det);
    ScaledGenerators sg;
    sg.d = abs(a.det);
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 4; ++c) {
            Int s = 0;
            for (int k = 0; k < 4; ++k) s += e[r][k] * adj.a[k][c];
            sg.m[r][c] = sign * s;
        }
    return sg;
}

}  // namespace detail

// The three generators of L as elements of V.
inline Generators generators(const DelsarteMatrix& a) {
    RatMatrix4 inv = inverse_rational(a.matrix());
    static const int64 e[3][4] = {{1, 0, 0, -1}, {0, 1, 0, -1}, {0, 0, 1, -1}};
    std::array<CharacterVector, 3> g;
    for (int r = 0; r < 3; ++r) {
        std::array<RationalMod1, 4> coords;
        for (int c = 0; c < 4; ++c) {
            Rat x = 0;
            for (int k = 0; k < 4; ++k) x += e[r][k] * inv[k][c];
            coords[c] = RationalMod1::reduce(x);
        }
        g[r] = CharacterVector(coords);  // validates membership in V
    }
    return {g[0], g[1], g[2]};
}

// Solution lattice of m * M = 0 mod D restricted to the given coordinate
// columns; for all four columns this is the kernel of (i,j,k) -> iv+jw+ku.
inline IntLattice3 kernel_lattice_for_columns(const DelsarteMatrix& a,
                                              const std::vector<int>& cols) {
    detail::ScaledGenerators sg = detail::scaled_generators(a);
    const int nc = static_cast<int>(cols.size());
    std::vector<std::vector<Int>> n(3 + nc, std::vector<Int>(nc, 0));
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < nc; ++c) n[r][c] = sg.m[r][cols[c]];
    for (int c = 0; c < nc; ++c) n[3 + c][c] = sg.d;
    auto kernel = integer_left_kernel(n);
    if (kernel.size() != 3)
        throw std::logic_error("kernel_lattice: congruence kernel has unexpected rank");
    IntLattice3 lat;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) lat.b[i][j] = kernel[i][j];
    return hnf(lat);
}

inline IntLattice3 kernel_lattice(const DelsarteMatrix& a) {
    return kernel_lattice_for_columns(a, {0, 1, 2, 3});
}

class CharacterGroup {
public:
    CharacterVector v, w, u;
    IntLattice3 kernel;             // Hermite basis
    std::array<int64, 3> diag{};    // coset box bounds
    int64 cardinality = 0;

    static CharacterGroup build(const DelsarteMatrix& a) {
        CharacterGroup g;
        Generators gen = generators(a);
        g.v = gen.v;
        g.w = gen.w;
        g.u = gen.u;
        g.kernel = kernel_lattice(a);
        Int index = lattice_index(g.kernel);
        // #L = |det A| / n whenever every monomial has total degree n.
        if (index * a.degree != abs(a.det))
            throw std::logic_error("CharacterGroup: kernel index differs from |det|/n");
        for (int i = 0; i < 3; ++i) {
            if (!g.kernel.b[i][i].fits_slong_p())
                throw std::overflow_error("CharacterGroup: coset box exceeds 64 bits");
            g.diag[i] = mpz_get_si(g.kernel.b[i][i].get_mpz_t());
        }
        g.cardinality = g.diag[0] * g.diag[1] * g.diag[2];
        return g;
    }

    // Visit all elements of L in lexicographic coset order (i outermost)
    // without materializing them.
    template <class Fn>
    void for_each_element(Fn&& fn) const {
        CharacterVector xi;  // i*v
        for (int64 i = 0; i < diag[0]; ++i) {
            CharacterVector xij = xi;  // i*v + j*w
            for (int64 j = 0; j < diag[1]; ++j) {
                CharacterVector x = xij;
                for (int64 k = 0; k < diag[2]; ++k) {
                    fn(static_cast<const CharacterVector&>(x));
                    x = x + u;
                }
                xij = xij + w;
            }
            xi = xi + v;
        }
    }

    // All elements of L in enumeration order, verified pairwise distinct.
    std::vector<CharacterVector> enumerate() const {
        std::vector<CharacterVector> out;
        out.reserve(cardinality);
        for_each_element([&](const CharacterVector& x) { out.push_back(x); });
        std::vector<CharacterVector> sorted = out;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::logic_error("CharacterGroup::enumerate: duplicate element");
        return out;
    }
};

// Number of elements of L with no zero coordinate and a Lambda witness.
inline int64 lefschetz(const DelsarteMatrix& a) {
    CharacterGroup g = CharacterGroup::build(a);
    UnitsCache cache;
    int64 count = 0;
    g.for_each_element([&](const CharacterVector& x) {
        if (!x.has_zero_coordinate() && in_lambda(x, &cache)) ++count;
    });
    return count;
}

inline int64 picard(const DelsarteMatrix& a) { return betti2(a.degree) - lefschetz(a); }

inline bool is_maximal(const DelsarteMatrix& a) { return picard(a) == hodge11(a.degree); }

}  // namespace delsarte
