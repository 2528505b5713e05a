#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <coinv/errors.hpp>
#include <coinv/rational.hpp>

namespace coinv {

using RatMatrix = std::vector<std::vector<Rational>>;
using IntMatrix = std::vector<std::vector<BigInt>>;

// In-place Gauss-Jordan reduction to reduced row echelon form. Returns the
// rank; the first `rank` rows end up as the reduced basis, the rest zero.
inline std::size_t rref(RatMatrix& m) {
    if (m.empty() || m[0].empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv][c].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        Rational lead = m[r][c];
        for (std::size_t j = c; j < cols; ++j) m[r][j] /= lead;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            Rational f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

inline std::size_t rank_rational(const IntMatrix& m) {
    RatMatrix rm(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        rm[i].reserve(m[i].size());
        for (const auto& v : m[i]) rm[i].emplace_back(v);
    }
    return rref(rm);
}

// Rank by fraction-free elimination; every division below is exact.
inline std::size_t rank_bareiss(IntMatrix m) {
    if (m.empty() || m[0].empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    BigInt prev = 1;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    return r;
}

// Rank computed by both eliminations, which must agree.
inline std::size_t rank_checked(const IntMatrix& m) {
    std::size_t a = rank_bareiss(m);
    std::size_t b = rank_rational(m);
    if (a != b)
        throw cross_check_error("rank mismatch: fraction-free " +
                                std::to_string(a) + " vs rational " +
                                std::to_string(b));
    return a;
}

}  // namespace coinv
