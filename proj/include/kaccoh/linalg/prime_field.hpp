#pragma once

#include <cstdint>
#include <vector>

namespace kaccoh {

/// Canonical residue in {0, ..., p-1}.
using Residue = std::uint32_t;
using FpVector = std::vector<Residue>;

bool is_odd_prime(std::int64_t n);

/// The prime field F_p for an odd prime p. All arithmetic is exact.
class PrimeField {
public:
    /// Throws std::invalid_argument unless p is an odd prime below 2^16.
    explicit PrimeField(std::int64_t p);

    std::uint32_t modulus() const noexcept { return p_; }

    Residue reduce(std::int64_t x) const noexcept
    {
        auto r = x % static_cast<std::int64_t>(p_);
        return static_cast<Residue>(r < 0 ? r + p_ : r);
    }

    Residue add(Residue a, Residue b) const noexcept
    {
        auto s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Residue sub(Residue a, Residue b) const noexcept { return a >= b ? a - b : a + p_ - b; }
    Residue neg(Residue a) const noexcept { return a == 0 ? 0 : p_ - a; }
    Residue mul(Residue a, Residue b) const noexcept
    {
        return static_cast<Residue>((static_cast<std::uint64_t>(a) * b) % p_);
    }
    /// Extended Euclid. Throws std::domain_error for a == 0.
    Residue inv(Residue a) const;

    /// Signed representative in (-p/2, p/2], handy for printing.
    std::int64_t centered(Residue a) const noexcept
    {
        return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : a;
    }

    bool operator==(const PrimeField&) const = default;

private:
    std::uint32_t p_;
};

} // namespace kaccoh
