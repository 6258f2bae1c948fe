#pragma once

#include <string>
#include <vector>

#include "kaccoh/cohomology/cochain.hpp"
#include "kaccoh/module/kac_module.hpp"

namespace kaccoh {

/// The explicit outer derivations P~(2) -> K(lambda). Unlisted basis
/// elements map to zero.
///   phi1 (odd):  alpha -> gamma(x)v_{p-2}, e13 -> -1(x)v_{p-2}     [a+b=-2, Phi(b)=p-2]
///   phi2 (odd):  beta -> gamma(x)v_0, e24 -> 1(x)v_0               [a+b=-2, Phi(b)=p-2]
///   phi3 (odd):  h1, h2 -> gamma(x)v_0                             [a+b=-2, Phi(b)=p-1]
///   phi4 (even): e13 -> 2 gamma(x)v_0, e24 -> gamma(x)v_2,
///                e14+e23 -> -2 gamma(x)v_1                         [a+b=-4, Phi(b)=p-1]
struct NamedCocycle {
    std::string name;
    Cochain cochain;
};

/// True when lambda lies in one of the regimes above.
bool has_named_cocycles(const PrimeField& f, HighestWeight lambda);

/// Throws std::domain_error outside every regime.
std::vector<NamedCocycle> named_cocycles(const KacModule& k);

} // namespace kaccoh
