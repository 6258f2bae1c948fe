#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "kaccoh/linalg/prime_field.hpp"

namespace kaccoh {

/// Eigenvalues (on h1, on h2) of a simultaneous eigenvector of the Cartan subalgebra.
struct Weight {
    Residue h1 = 0;
    Residue h2 = 0;

    auto operator<=>(const Weight&) const = default;
};

inline Weight make_weight(const PrimeField& f, std::int64_t h1, std::int64_t h2)
{
    return {f.reduce(h1), f.reduce(h2)};
}

inline std::string to_string(Weight w) { return "(" + std::to_string(w.h1) + "," + std::to_string(w.h2) + ")"; }

} // namespace kaccoh
