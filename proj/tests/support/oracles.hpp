#pragma once

// Independent reference computations for the tests. Everything here uses plain
// integers and brute force so it shares no code path with the library.

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "kaccoh/linalg/fp_matrix.hpp"

namespace oracle {

using IntMatrix4 = std::array<std::array<std::int64_t, 4>, 4>;

inline std::int64_t mod(std::int64_t x, std::int64_t p) { return ((x % p) + p) % p; }

// e_{ij} with 1-based indices, as in the gl(2|2) literature
inline IntMatrix4 unit(int i, int j)
{
    IntMatrix4 m{};
    m[i - 1][j - 1] = 1;
    return m;
}

inline IntMatrix4 operator+(const IntMatrix4& a, const IntMatrix4& b)
{
    IntMatrix4 c{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            c[i][j] = a[i][j] + b[i][j];
    return c;
}

inline IntMatrix4 operator-(const IntMatrix4& a, const IntMatrix4& b)
{
    IntMatrix4 c{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            c[i][j] = a[i][j] - b[i][j];
    return c;
}

inline IntMatrix4 operator*(const IntMatrix4& a, const IntMatrix4& b)
{
    IntMatrix4 c{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 4; ++k)
                c[i][j] += a[i][k] * b[k][j];
    return c;
}

// [x,y] = xy - (-1)^{|x||y|} yx for homogeneous x, y of parities px, py
inline IntMatrix4 super_bracket(const IntMatrix4& x, int px, const IntMatrix4& y, int py)
{
    const auto xy = x * y;
    const auto yx = y * x;
    return (px & py) ? xy + yx : xy - yx;
}

inline IntMatrix4 gamma() { return unit(4, 1) - unit(3, 2); }
inline IntMatrix4 h1() { return unit(3, 3) - unit(1, 1); }
inline IntMatrix4 h2() { return unit(4, 4) - unit(2, 2); }
inline IntMatrix4 alpha() { return unit(4, 3) - unit(1, 2); }
inline IntMatrix4 beta() { return unit(3, 4) - unit(2, 1); }

// Every vector of F_p^n, in lexicographic order.
inline std::vector<std::vector<std::int64_t>> all_vectors(std::int64_t p, std::size_t n)
{
    std::vector<std::vector<std::int64_t>> out;
    std::vector<std::int64_t> v(n, 0);
    while (true) {
        out.push_back(v);
        std::size_t i = 0;
        while (i < n && ++v[i] == p)
            v[i++] = 0;
        if (i == n)
            break;
    }
    return out;
}

// Brute-force kernel: all x with m x = 0.
inline std::vector<std::vector<std::int64_t>> kernel_by_enumeration(const kaccoh::FpMatrix& m)
{
    const std::int64_t p = m.field().modulus();
    std::vector<std::vector<std::int64_t>> out;
    for (const auto& x : all_vectors(p, m.cols())) {
        bool zero = true;
        for (std::size_t r = 0; r < m.rows() && zero; ++r) {
            std::int64_t s = 0;
            for (std::size_t c = 0; c < m.cols(); ++c)
                s += static_cast<std::int64_t>(m(r, c)) * x[c];
            zero = mod(s, p) == 0;
        }
        if (zero)
            out.push_back(x);
    }
    return out;
}

inline kaccoh::FpMatrix random_matrix(std::mt19937_64& rng, const kaccoh::PrimeField& f, std::size_t rows,
                                      std::size_t cols)
{
    // bias towards zeros so that low-rank matrices show up often
    std::uniform_int_distribution<std::uint32_t> coin(0, 2);
    std::uniform_int_distribution<std::uint32_t> entry(0, f.modulus() - 1);
    kaccoh::FpMatrix m(f, rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = coin(rng) == 0 ? 0 : entry(rng);
    return m;
}

// Closed-form dim H^1 written from scratch on integers.
inline unsigned expected_h1(std::int64_t p, std::int64_t a, std::int64_t b)
{
    const auto s = mod(a + b, p);
    const auto pb = mod(b, p);
    if (s == mod(-2, p) && pb == p - 2)
        return 2;
    if ((s == mod(-2, p) || s == mod(-4, p)) && pb == p - 1)
        return 1;
    return 0;
}

} // namespace oracle
