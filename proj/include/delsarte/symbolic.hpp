#pragma once

// Degree-parametric surfaces: each monomial exponent is an affine form in the
// degree n, so the classification pipeline and the singular-point analysis are
// decided once, uniformly for all n >= 6.

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "delsarte/surface.hpp"

namespace delsarte {

// a*n + b with a in {0,1} for exponents; wider coefficients appear only in
// determinant polynomials.
struct Affine {
    int a = 0;
    int b = 0;

    int64 at(int64 n) const { return int64(a) * n + b; }

    friend bool operator==(const Affine&, const Affine&) = default;
    friend auto operator<=>(const Affine&, const Affine&) = default;

    std::string str() const {
        if (a == 0) return std::to_string(b);
        std::string s = a == 1 ? "n" : std::to_string(a) + "n";
        if (b > 0) s += "+" + std::to_string(b);
        if (b < 0) s += std::to_string(b);
        return s;
    }

    static Affine parse(const std::string& s);
};

inline Affine Affine::parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("Affine::parse: empty token");
    std::size_t npos = s.find('n');
    Affine f;
    if (npos == std::string::npos) {
        f.b = std::stoi(s);
        return f;
    }
    std::string head = s.substr(0, npos);
    f.a = head.empty() ? 1 : std::stoi(head);
    std::string tail = s.substr(npos + 1);
    f.b = tail.empty() ? 0 : std::stoi(tail);
    return f;
}

using SymbolicRow = std::array<Affine, 4>;

struct SymbolicSurface {
    std::array<SymbolicRow, 4> rows{};

    friend bool operator==(const SymbolicSurface&, const SymbolicSurface&) = default;

    DelsarteMatrix instantiate(int64 n) const {
        std::array<std::array<int64, 4>, 4> e{};
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) e[i][j] = rows[i][j].at(n);
        return DelsarteMatrix(e, n);
    }

    // Canonical orbit representative under the 24 coordinate permutations:
    // permute columns, sort the four rows, take the lexicographic minimum.
    std::array<int, 32> canonical_key() const;

    // Some variable appears in all four monomials (for every n >= 6).
    bool divisible_by_variable() const {
        for (int c = 0; c < 4; ++c) {
            bool all = true;
            for (int r = 0; r < 4; ++r) {
                const Affine& e = rows[r][c];
                if (!(e.a >= 1 || e.b >= 1)) {
                    all = false;
                    break;
                }
            }
            if (all) return true;
        }
        return false;
    }

    // Determinant as a polynomial in n (degree <= 4).
    std::array<int64, 5> det_polynomial() const;

    // det(n) != 0 for every integer n >= from.
    bool det_nonzero_for_all(int64 from) const;

    std::string str() const {
        std::string s;
        for (int i = 0; i < 4; ++i) {
            if (i) s += " / ";
            for (int j = 0; j < 4; ++j) {
                if (j) s += ",";
                s += rows[i][j].str();
            }
        }
        return s;
    }

    static SymbolicSurface parse(const std::string& text);
};

inline std::array<int, 32> SymbolicSurface::canonical_key() const {
    auto key_of = [](const std::array<SymbolicRow, 4>& rows) {
        std::array<int, 32> k{};
        int i = 0;
        for (const auto& row : rows)
            for (const auto& e : row) {
                k[i++] = e.a;
                k[i++] = e.b;
            }
        return k;
    };
    std::optional<std::array<int, 32>> best;
    std::array<int, 4> perm = {0, 1, 2, 3};
    do {
        std::array<SymbolicRow, 4> p{};
        for (int r = 0; r < 4; ++r)
            for (std::size_t c = 0; c < 4; ++c) p[r][c] = rows[r][perm[c]];
        std::sort(p.begin(), p.end());
        auto k = key_of(p);
        if (!best || k < *best) best = k;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return *best;
}

namespace detail {

using Poly = std::array<int64, 5>;  // coefficients, constant first

inline Poly poly_mul(const Poly& p, const Poly& q) {
    Poly r{};
    for (int i = 0; i < 5; ++i)
        for (int j = 0; i + j < 5; ++j) r[i + j] += p[i] * q[j];
    return r;
}

inline Poly poly_sub(const Poly& p, const Poly& q) {
    Poly r{};
    for (int i = 0; i < 5; ++i) r[i] = p[i] - q[i];
    return r;
}

inline Poly poly_add(const Poly& p, const Poly& q) {
    Poly r{};
    for (int i = 0; i < 5; ++i) r[i] = p[i] + q[i];
    return r;
}

}  // namespace detail

inline std::array<int64, 5> SymbolicSurface::det_polynomial() const {
    using detail::Poly;
    auto entry = [&](int i, int j) {
        Poly p{};
        p[0] = rows[i][j].b;
        p[1] = rows[i][j].a;
        return p;
    };
    // Leibniz expansion over the 24 permutations; sizes are tiny.
    Poly det{};
    std::array<int, 4> perm = {0, 1, 2, 3};
    do {
        int inversions = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (perm[i] > perm[j]) ++inversions;
        Poly term{};
        term[0] = 1;
        for (int i = 0; i < 4; ++i) term = detail::poly_mul(term, entry(i, perm[i]));
        det = (inversions % 2 == 0) ? detail::poly_add(det, term)
                                    : detail::poly_sub(det, term);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

inline bool SymbolicSurface::det_nonzero_for_all(int64 from) const {
    auto p = det_polynomial();
    bool zero = true;
    for (int64 c : p) zero &= (c == 0);
    if (zero) return false;
    // Strip the power of n dividing p; remaining integer roots divide the
    // constant term.
    int shift = 0;
    while (p[shift] == 0) ++shift;
    const int64 c0 = p[shift] < 0 ? -p[shift] : p[shift];
    auto eval = [&](int64 n) {
        int64 v = 0;
        for (int i = 4; i >= shift; --i) v = v * n + p[i];
        return v;
    };
    for (int64 r = 1; r * r <= c0; ++r) {
        if (c0 % r != 0) continue;
        if (r >= from && eval(r) == 0) return false;
        int64 other = c0 / r;
        if (other >= from && eval(other) == 0) return false;
    }
    return true;
}

inline SymbolicSurface SymbolicSurface::parse(const std::string& text) {
    SymbolicSurface s;
    std::size_t pos = 0;
    for (int r = 0; r < 4; ++r) {
        std::size_t end = text.find('/', pos);
        std::string row = text.substr(pos, end == std::string::npos ? end : end - pos);
        std::size_t p = 0;
        for (int c = 0; c < 4; ++c) {
            std::size_t comma = row.find(',', p);
            std::string tok = row.substr(p, comma == std::string::npos ? comma : comma - p);
            // trim
            while (!tok.empty() && tok.front() == ' ') tok.erase(tok.begin());
            while (!tok.empty() && tok.back() == ' ') tok.pop_back();
            s.rows[r][c] = Affine::parse(tok);
            p = comma == std::string::npos ? row.size() : comma + 1;
        }
        pos = end == std::string::npos ? text.size() : end + 1;
    }
    return s;
}

// A singular point of a catalog surface: a coordinate point, or a family
// (eta : ... : 1 : ...) on a coordinate edge with eta^k = -1.
struct SingularPoint {
    enum class Kind { corner, edge };
    Kind kind = Kind::corner;
    int i = 0;          // corner: index of the coordinate equal to 1
    int j = 0;          // edge: eta sits at index i, 1 at index j (i < j)
    Affine k{};         // edge: exponent in eta^k = -1

    friend bool operator==(const SingularPoint&, const SingularPoint&) = default;
    friend auto operator<=>(const SingularPoint&, const SingularPoint&) = default;

    std::string str() const {
        std::array<std::string, 4> slot = {"0", "0", "0", "0"};
        if (kind == Kind::corner) {
            slot[i] = "1";
        } else {
            slot[i] = "r{" + k.str() + "}";
            slot[j] = "1";
        }
        return "(" + slot[0] + ":" + slot[1] + ":" + slot[2] + ":" + slot[3] + ")";
    }

    static SingularPoint parse(const std::string& text);
};

inline SingularPoint SingularPoint::parse(const std::string& text) {
    std::string t = text;
    if (t.size() < 2 || t.front() != '(' || t.back() != ')')
        throw std::invalid_argument("SingularPoint::parse: expected (a:b:c:d)");
    t = t.substr(1, t.size() - 2);
    std::array<std::string, 4> tok;
    std::size_t p = 0;
    for (int i = 0; i < 4; ++i) {
        std::size_t colon = t.find(':', p);
        tok[i] = t.substr(p, colon == std::string::npos ? colon : colon - p);
        p = colon == std::string::npos ? t.size() : colon + 1;
    }
    SingularPoint sp;
    int ones = -1, etas = -1;
    for (int i = 0; i < 4; ++i) {
        if (tok[i] == "0") continue;
        if (tok[i] == "1") {
            ones = i;
        } else if (tok[i].rfind("r{", 0) == 0 && tok[i].back() == '}') {
            etas = i;
            sp.k = Affine::parse(tok[i].substr(2, tok[i].size() - 3));
        } else {
            throw std::invalid_argument("SingularPoint::parse: bad slot " + tok[i]);
        }
    }
    if (etas < 0) {
        sp.kind = Kind::corner;
        sp.i = ones;
    } else {
        sp.kind = Kind::edge;
        sp.i = std::min(etas, ones);
        sp.j = std::max(etas, ones);
    }
    return sp;
}

}  // namespace delsarte
