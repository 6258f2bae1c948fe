#pragma once

#include <array>
#include <cstdint>
#include <string_view>

#include "kaccoh/linalg/prime_field.hpp"

namespace kaccoh {

/// Canonical integer representative Phi(c) in {0, ..., p-1} of c mod p.
inline std::int64_t phi(const PrimeField& f, std::int64_t c) { return f.reduce(c); }

/// Integer interval [lo, hi]; empty when lo > hi (e.g. [0, (p-5)/2] for p = 3).
struct IntRange {
    std::int64_t lo;
    std::int64_t hi;
    constexpr bool contains(std::int64_t x) const noexcept { return lo <= x && x <= hi; }
};

/// One "Phi(x) <= Phi(y) <=> Phi(b) in S" statement evaluated at a given b.
struct PhiIff {
    std::string_view name;
    bool lhs;
    bool rhs;
    bool holds() const noexcept { return lhs == rhs; }
};

/// The ten order relations between Phi(b + s) and Phi(2b + t), each paired
/// with the membership condition on Phi(b) that characterises it.
std::array<PhiIff, 10> phi_lemma_predicates(const PrimeField& f, std::int64_t b);

/// Phi(b), Phi(b+1), Phi(b+2), Phi(2b+2).
struct PhiScopes {
    std::int64_t phi_b;
    std::int64_t phi_b1;
    std::int64_t phi_b2;
    std::int64_t phi_2b2;
    bool operator==(const PhiScopes&) const = default;
};

PhiScopes phi_scopes_direct(const PrimeField& f, std::int64_t b);
/// The same four values read off the column-wise closed forms of the scope
/// table (piecewise in Phi(b)), without reducing b + s mod p.
PhiScopes phi_scopes_tabulated(const PrimeField& f, std::int64_t b);

} // namespace kaccoh
