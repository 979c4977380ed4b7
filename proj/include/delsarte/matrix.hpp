#pragma once

// Exact integer linear algebra for 4x4 exponent matrices and rank-3 integer
// lattices: determinants, adjugates, rational inverses, Hermite normal form
// and solution lattices of linear congruence systems.  All entries are
// arbitrary-precision integers.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

#include "delsarte/rational.hpp"

namespace delsarte {

using Int = mpz_class;
using Rat = mpq_class;

inline int cmp_abs(const Int& a, const Int& b) {
    return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t());
}

struct IntMatrix4 {
    std::array<std::array<Int, 4>, 4> a{};

    IntMatrix4() = default;

    static IntMatrix4 from(const std::array<std::array<int64, 4>, 4>& m) {
        IntMatrix4 r;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) r.a[i][j] = static_cast<long>(m[i][j]);
        return r;
    }

    static IntMatrix4 identity() {
        IntMatrix4 r;
        for (int i = 0; i < 4; ++i) r.a[i][i] = 1;
        return r;
    }

    static IntMatrix4 diagonal(int64 d) {
        IntMatrix4 r;
        for (int i = 0; i < 4; ++i) r.a[i][i] = static_cast<long>(d);
        return r;
    }

    friend bool operator==(const IntMatrix4&, const IntMatrix4&) = default;
};

using RatMatrix4 = std::array<std::array<Rat, 4>, 4>;

inline Int det3(const Int& a, const Int& b, const Int& c,
                const Int& d, const Int& e, const Int& f,
                const Int& g, const Int& h, const Int& i) {
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g);
}

// Exact determinant by cofactor expansion along the first row.
inline Int det4(const IntMatrix4& m) {
    Int det = 0;
    for (int c = 0; c < 4; ++c) {
        std::array<Int, 9> s;
        int k = 0;
        for (int i = 1; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                if (j != c) s[k++] = m.a[i][j];
        Int minor = det3(s[0], s[1], s[2], s[3], s[4], s[5], s[6], s[7], s[8]);
        if (c % 2 == 0)
            det += m.a[0][c] * minor;
        else
            det -= m.a[0][c] * minor;
    }
    return det;
}

// Transposed cofactor matrix, so that m * adjugate4(m) = det4(m) * I.
inline IntMatrix4 adjugate4(const IntMatrix4& m) {
    IntMatrix4 adj;
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            std::array<Int, 9> s;
            int k = 0;
            for (int i = 0; i < 4; ++i) {
                if (i == r) continue;
                for (int j = 0; j < 4; ++j)
                    if (j != c) s[k++] = m.a[i][j];
            }
            Int minor = det3(s[0], s[1], s[2], s[3], s[4], s[5], s[6], s[7], s[8]);
            adj.a[c][r] = ((r + c) % 2 == 0) ? minor : -minor;
        }
    }
    return adj;
}

// Exact inverse; throws on a singular matrix.
inline RatMatrix4 inverse_rational(const IntMatrix4& m) {
    Int det = det4(m);
    if (det == 0) throw std::invalid_argument("inverse_rational: singular matrix");
    IntMatrix4 adj = adjugate4(m);
    RatMatrix4 inv;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            inv[i][j] = Rat(adj.a[i][j], det);
            inv[i][j].canonicalize();
        }
    return inv;
}

struct IntLattice3 {
    std::array<std::array<Int, 3>, 3> b{};

    static IntLattice3 from(const std::array<std::array<int64, 3>, 3>& m) {
        IntLattice3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r.b[i][j] = static_cast<long>(m[i][j]);
        return r;
    }

    friend bool operator==(const IntLattice3&, const IntLattice3&) = default;
};

inline Int det3_of(const IntLattice3& l) {
    return det3(l.b[0][0], l.b[0][1], l.b[0][2],
                l.b[1][0], l.b[1][1], l.b[1][2],
                l.b[2][0], l.b[2][1], l.b[2][2]);
}

// Absolute index of the lattice in Z^3.
inline Int lattice_index(const IntLattice3& l) {
    Int d = det3_of(l);
    if (d == 0) throw std::logic_error("lattice_index: dependent basis rows");
    return abs(d);
}

// Lower-triangular Hermite normal form: positive diagonal, and every entry
// below the diagonal reduced into [0, diagonal of its column).  Canonical for
// the lattice, so equal lattices yield equal bases.
inline IntLattice3 hnf(const IntLattice3& lat) {
    std::array<std::array<Int, 3>, 3> r = lat.b;
    // Clear columns right to left; after column c only row c touches it.
    for (int c = 2; c >= 0; --c) {
        // rows 0..c may still use column c
        while (true) {
            int pivot = -1;
            int nonzero = 0;
            for (int i = 0; i <= c; ++i) {
                if (r[i][c] != 0) {
                    ++nonzero;
                    if (pivot < 0 || cmp_abs(r[i][c], r[pivot][c]) < 0) pivot = i;
                }
            }
            if (nonzero == 0) throw std::logic_error("hnf: dependent basis rows");
            if (pivot != c) std::swap(r[pivot], r[c]);
            if (nonzero == 1) break;
            for (int i = 0; i < c; ++i) {
                if (r[i][c] == 0) continue;
                Int q;
                mpz_tdiv_q(q.get_mpz_t(), r[i][c].get_mpz_t(), r[c][c].get_mpz_t());
                for (int j = 0; j < 3; ++j) r[i][j] -= q * r[c][j];
            }
        }
        if (r[c][c] < 0)
            for (int j = 0; j < 3; ++j) r[c][j] = -r[c][j];
    }
    // Reduce entries below each diagonal into [0, diag).
    for (int i = 1; i < 3; ++i) {
        for (int j = i - 1; j >= 0; --j) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), r[i][j].get_mpz_t(), r[j][j].get_mpz_t());
            if (q != 0)
                for (int k = 0; k < 3; ++k) r[i][k] -= q * r[j][k];
        }
    }
    IntLattice3 out;
    out.b = r;
    return out;
}

// Basis of { x in Z^rows : x * N = 0 } for an integer matrix given by rows.
// Row reduction with a unimodular transform tracked in an augmented identity.
inline std::vector<std::vector<Int>> integer_left_kernel(std::vector<std::vector<Int>> n) {
    const int rows = static_cast<int>(n.size());
    const int cols = rows ? static_cast<int>(n[0].size()) : 0;
    std::vector<std::vector<Int>> u(rows, std::vector<Int>(rows, 0));
    for (int i = 0; i < rows; ++i) u[i][i] = 1;

    int p = 0;  // next pivot row
    for (int c = 0; c < cols && p < rows; ++c) {
        while (true) {
            int pivot = -1;
            int nonzero = 0;
            for (int i = p; i < rows; ++i) {
                if (n[i][c] != 0) {
                    ++nonzero;
                    if (pivot < 0 || cmp_abs(n[i][c], n[pivot][c]) < 0) pivot = i;
                }
            }
            if (nonzero == 0) break;
            if (pivot != p) {
                std::swap(n[pivot], n[p]);
                std::swap(u[pivot], u[p]);
            }
            if (nonzero == 1) {
                ++p;
                break;
            }
            // Reduce every other row by the minimal pivot; the column's total
            // magnitude strictly drops, so the while loop terminates.
            for (int i = p + 1; i < rows; ++i) {
                if (n[i][c] == 0) continue;
                Int q;
                mpz_tdiv_q(q.get_mpz_t(), n[i][c].get_mpz_t(), n[p][c].get_mpz_t());
                if (q != 0) {
                    for (int j = 0; j < cols; ++j) n[i][j] -= q * n[p][j];
                    for (int j = 0; j < rows; ++j) u[i][j] -= q * u[p][j];
                }
            }
        }
    }

    std::vector<std::vector<Int>> kernel;
    for (int i = p; i < rows; ++i) kernel.push_back(u[i]);
    return kernel;
}

}  // namespace delsarte
