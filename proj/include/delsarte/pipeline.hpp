#pragma once

// Classification pipeline for surfaces of the shape
//   F = X^{n-2} Mx + Y^{n-2} My + Z^{n-2} Mz + U^{n-2} Mu
// with quadratic monomials Mv: candidate generation, pruning of reducible
// polynomials, deduplication under coordinate permutations, removal of
// surfaces with a non-ADE corner point, and the singular-point analysis that
// reproduces the catalog's singular-locus column.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "delsarte/symbolic.hpp"

namespace delsarte {

// Exponent vectors of the quadratic monomial choices for one term slot.
// Squares of the other three variables are excluded: those corners cannot be
// of ADE type for n >= 6.
inline std::vector<std::array<int, 4>> admissible_quadratics(int slot) {
    std::vector<std::array<int, 4>> out;
    for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j) {
            std::array<int, 4> q{};
            q[i] += 1;
            q[j] += 1;
            if (i == j && i != slot) continue;
            out.push_back(q);
        }
    return out;
}

inline SymbolicSurface candidate_surface(const std::array<std::array<int, 4>, 4>& quads) {
    SymbolicSurface s;
    for (int v = 0; v < 4; ++v)
        for (int c = 0; c < 4; ++c) {
            s.rows[v][c].a = (v == c) ? 1 : 0;
            s.rows[v][c].b = quads[v][c] - (v == c ? 2 : 0);
        }
    return s;
}

// Quadratic part of each term: quad[v][c] = exponent of variable c in Mv.
inline std::array<std::array<int, 4>, 4> quadratic_parts(const SymbolicSurface& s) {
    std::array<std::array<int, 4>, 4> q{};
    for (int v = 0; v < 4; ++v) {
        int sum = 0;
        for (int c = 0; c < 4; ++c) {
            if (s.rows[v][c].a != (v == c ? 1 : 0))
                throw std::invalid_argument("surface is not of the X^{n-2}M shape");
            q[v][c] = s.rows[v][c].b + (v == c ? 2 : 0);
            if (q[v][c] < 0 || q[v][c] > 2)
                throw std::invalid_argument("surface is not of the X^{n-2}M shape");
            sum += q[v][c];
        }
        if (sum != 2) throw std::invalid_argument("surface is not of the X^{n-2}M shape");
    }
    return q;
}

// All 7^4 = 2401 candidates, in a fixed deterministic order.
inline std::vector<SymbolicSurface> generate_candidates() {
    std::array<std::vector<std::array<int, 4>>, 4> choices;
    for (int v = 0; v < 4; ++v) choices[v] = admissible_quadratics(v);
    std::vector<SymbolicSurface> out;
    out.reserve(2401);
    for (const auto& mx : choices[0])
        for (const auto& my : choices[1])
            for (const auto& mz : choices[2])
                for (const auto& mu : choices[3])
                    out.push_back(candidate_surface({mx, my, mz, mu}));
    return out;
}

// Drop polynomials divisible by a coordinate, then keep one representative
// per orbit under the 24 coordinate permutations.  Output sorted by
// canonical key.
inline std::vector<SymbolicSurface> dedupe_and_prune(const std::vector<SymbolicSurface>& in) {
    std::map<std::array<int, 32>, SymbolicSurface> reps;
    for (const auto& s : in) {
        if (s.divisible_by_variable()) continue;
        reps.emplace(s.canonical_key(), s);
    }
    std::vector<SymbolicSurface> out;
    out.reserve(reps.size());
    for (auto& [k, s] : reps) out.push_back(s);
    return out;
}

// A corner (all coordinates but one zero) is a singular point exactly when
// the matching quadratic is a product of two other variables; it is of ADE
// type unless the remaining variable's quadratic is that same product.
inline bool has_non_ade_corner(const SymbolicSurface& s) {
    auto q = quadratic_parts(s);
    for (int w = 0; w < 4; ++w) {
        if (q[w][w] != 0) continue;  // corner off the surface or smooth
        int p = -1, c2 = -1;
        for (int c = 0; c < 4; ++c)
            if (c != w && q[w][c] > 0) (p < 0 ? p : c2) = c;
        int r = 0;
        while (r == w || r == p || r == c2) ++r;
        if (q[r] == q[w]) return true;
    }
    return false;
}

inline std::vector<SymbolicSurface> corner_ade_filter(const std::vector<SymbolicSurface>& in) {
    std::vector<SymbolicSurface> out;
    for (const auto& s : in)
        if (!has_non_ade_corner(s)) out.push_back(s);
    return out;
}

// Singular points of a pipeline-shape surface, uniform in n.
//
// Corners: the corner at variable w lies on S unless Mw = w^2, is smooth when
// w divides Mw, and is singular when Mw is a product of two other variables
// (ADE by the corner filter).  Edge families: on the edge where only x_i, x_j
// are nonzero, a singular point needs every monomial to vanish, and the two
// partials along the vanishing pair reduce to eta^a + eta^b with
// a - b = n - 1 - q[i][j] - q[j][i]; the family eta^{a-b} = -1 is singular of
// ADE type.  Everything else on the edge is smooth or off the surface.
inline std::vector<SingularPoint> singular_points_symbolic(const SymbolicSurface& s) {
    auto q = quadratic_parts(s);
    std::vector<SingularPoint> out;

    for (int w = 0; w < 4; ++w) {
        if (q[w][w] != 0) continue;
        // singular corner; confirm ADE
        int p = -1, c2 = -1;
        for (int c = 0; c < 4; ++c) {
            if (c == w || q[w][c] == 0) continue;
            if (q[w][c] != 1)
                throw std::invalid_argument("singular_points: corner quadratic is a square");
            (p < 0 ? p : c2) = c;
        }
        int r = 0;
        while (r == w || r == p || r == c2) ++r;
        if (q[r] == q[w])
            throw std::invalid_argument("singular_points: non-ADE corner at variable " +
                                        std::to_string(w));
        SingularPoint sp;
        sp.kind = SingularPoint::Kind::corner;
        sp.i = w;
        out.push_back(sp);
    }

    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            int qq = -1, rr = -1;  // the vanishing pair
            for (int c = 0; c < 4; ++c)
                if (c != i && c != j) (qq < 0 ? qq : rr) = c;
            // terms i and j survive on the edge iff built from i, j alone
            bool survivor = (q[i][qq] == 0 && q[i][rr] == 0) ||
                            (q[j][qq] == 0 && q[j][rr] == 0);
            if (survivor) continue;
            auto contributes = [&](int term, int var, int other) {
                return q[term][var] == 1 && q[term][other] == 0;
            };
            int cq = contributes(i, qq, rr) + contributes(j, qq, rr);
            int cr = contributes(i, rr, qq) + contributes(j, rr, qq);
            if (cq == 2 && cr == 2)
                throw std::logic_error("singular_points: impossible edge configuration");
            if (cq == 0 && cr == 0)
                throw std::invalid_argument(
                    "singular_points: one-dimensional singular locus on an edge");
            if ((cq == 2 && cr == 0) || (cq == 0 && cr == 2)) {
                SingularPoint sp;
                sp.kind = SingularPoint::Kind::edge;
                sp.i = i;
                sp.j = j;
                sp.k = Affine{1, -1 - q[i][j] - q[j][i]};
                out.push_back(sp);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// The same list with the root exponent evaluated at a concrete degree.
inline std::vector<SingularPoint> singular_points(const SymbolicSurface& s, int64 n) {
    if (n < 6) throw std::invalid_argument("singular_points: n must be at least 6");
    auto pts = singular_points_symbolic(s);
    for (auto& p : pts)
        if (p.kind == SingularPoint::Kind::edge) p.k = Affine{0, static_cast<int>(p.k.at(n))};
    return pts;
}

}  // namespace delsarte
