#pragma once

#include <array>
#include <optional>

#include "kaccoh/algebra/parity.hpp"
#include "kaccoh/linalg/prime_field.hpp"

namespace kaccoh {

/// Element of gl(2|2) over F_p. Indices are 0-based; the diagonal 2x2 blocks
/// are even, the off-diagonal blocks odd.
class Supermatrix {
public:
    explicit Supermatrix(PrimeField field) : field_(field) { entries_.fill(0); }

    /// The matrix unit e_ij with 1-based (i, j), matching the usual notation.
    static Supermatrix unit(PrimeField field, int i, int j);

    const PrimeField& field() const noexcept { return field_; }
    Residue operator()(int r, int c) const noexcept { return entries_[r * 4 + c]; }
    Residue& operator()(int r, int c) noexcept { return entries_[r * 4 + c]; }

    static constexpr Parity entry_parity(int r, int c) noexcept
    {
        return ((r < 2) == (c < 2)) ? Parity::even : Parity::odd;
    }

    /// nullopt when nonzero entries sit in blocks of both parities. Zero is even.
    std::optional<Parity> parity() const noexcept;

    bool operator==(const Supermatrix&) const = default;

private:
    PrimeField field_;
    std::array<Residue, 16> entries_;
};

Supermatrix operator+(const Supermatrix& a, const Supermatrix& b);
Supermatrix operator-(const Supermatrix& a, const Supermatrix& b);
Supermatrix operator*(const Supermatrix& a, const Supermatrix& b);
Supermatrix scaled(const Supermatrix& a, Residue s);

/// [x, y] = xy - (-1)^{|x||y|} yx. Throws std::invalid_argument on
/// non-homogeneous input.
Supermatrix supercommutator(const Supermatrix& x, const Supermatrix& y);

} // namespace kaccoh
