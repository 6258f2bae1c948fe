#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "kaccoh/cohomology/cohomology.hpp"
#include "kaccoh/cohomology/named_cocycles.hpp"

namespace kaccoh {

/// A weight-derivation phi and algebra element x with x . phi(h) != 0 for a
/// Cartan element h.
struct CartanImageViolation {
    Parity parity;
    std::size_t cochain; // index in the weight-derivation basis
    std::size_t cartan;
    std::size_t x;
};

/// Every weight-derivation sends the Cartan elements to g-invariant vectors.
std::vector<CartanImageViolation> check_cartan_images_annihilated(const GModule& m, const H1Computation& h);

/// WDer + Ider = Der, per parity (indexed by bit(parity)).
std::array<bool, 2> check_weight_reduction(const H1Computation& h);

/// dim Der - dim Ider = dim WDer - dim(WDer cap Ider), per parity.
std::array<bool, 2> check_route_agreement(const H1Computation& h);

struct NamedCocycleCheck {
    std::string name;
    bool derivation = false;        // all residuals vanish
    bool weight_derivation = false; // lies in WDer
    bool outer = false;             // not in Ider
    bool passed() const noexcept { return derivation && weight_derivation && outer; }
};

/// Empty outside the named regimes.
std::vector<NamedCocycleCheck> check_named_cocycles(const KacModule& k, const H1Computation& h);

/// Der = Ider + span(named cocycles), per parity; Der = Ider outside the regimes.
std::array<bool, 2> check_named_cocycles_span(const KacModule& k, const H1Computation& h);

} // namespace kaccoh
