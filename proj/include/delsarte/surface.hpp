#pragma once

// A Delsarte surface presented by its 4x4 exponent matrix, plus the numerical
// invariants of a degree-n surface in P^3 with at most ADE singularities.

#include <array>
#include <cstdint>
#include <stdexcept>

#include "delsarte/matrix.hpp"

namespace delsarte {

struct DelsarteMatrix {
    std::array<std::array<int64, 4>, 4> exps{};
    int64 degree = 0;
    Int det;  // cached, nonzero

    DelsarteMatrix(const std::array<std::array<int64, 4>, 4>& rows, int64 n)
        : exps(rows), degree(n) {
        if (n < 1) throw std::invalid_argument("DelsarteMatrix: degree must be positive");
        for (const auto& row : rows) {
            int64 sum = 0;
            for (int64 e : row) {
                if (e < 0) throw std::invalid_argument("DelsarteMatrix: negative exponent");
                sum += e;
            }
            if (sum != n)
                throw std::invalid_argument("DelsarteMatrix: monomial degree differs from n");
        }
        det = det4(matrix());
        if (det == 0) throw std::invalid_argument("DelsarteMatrix: singular exponent matrix");
    }

    IntMatrix4 matrix() const { return IntMatrix4::from(exps); }

    DelsarteMatrix column_permuted(const std::array<int, 4>& p) const {
        std::array<std::array<int64, 4>, 4> rows{};
        for (int i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) rows[i][j] = exps[i][p[j]];
        return DelsarteMatrix(rows, degree);
    }
};

// Second Betti number of a degree-n surface in P^3 with only ADE singularities.
inline int64 betti2(int64 n) {
    if (n < 3) throw std::invalid_argument("betti2: n must be at least 3");
    return n * n * n - 4 * n * n + 6 * n - 2;
}

// Geometric genus binomial(n-1, 3).
inline int64 geometric_genus(int64 n) {
    return (n - 1) * (n - 2) * (n - 3) / 6;
}

// h^{1,1} = b2 - 2 p_g = (2n^3 - 6n^2 + 7n)/3; integral for every n.
inline int64 hodge11(int64 n) {
    if (n < 3) throw std::invalid_argument("hodge11: n must be at least 3");
    int64 v = 2 * n * n * n - 6 * n * n + 7 * n;
    if (v % 3 != 0) throw std::logic_error("hodge11: non-integral value");
    return v / 3;
}

}  // namespace delsarte
