#include "kaccoh/cohomology/named_cocycles.hpp"

#include <stdexcept>

#include <fmt/format.h>

#include "kaccoh/algebra/p_tilde_2.hpp"
#include "kaccoh/module/phi.hpp"

namespace kaccoh {

namespace {

enum class Regime { none, minus2_top2, minus2_top1, minus4_top1 };

Regime regime_of(const PrimeField& f, HighestWeight lambda)
{
    const std::int64_t p = f.modulus();
    const Residue sum = f.add(lambda.a, lambda.b);
    const auto pb = phi(f, lambda.b);
    if (sum == f.reduce(-2) && pb == p - 2)
        return Regime::minus2_top2;
    if (sum == f.reduce(-2) && pb == p - 1)
        return Regime::minus2_top1;
    if (sum == f.reduce(-4) && pb == p - 1)
        return Regime::minus4_top1;
    return Regime::none;
}

} // namespace

bool has_named_cocycles(const PrimeField& f, HighestWeight lambda) { return regime_of(f, lambda) != Regime::none; }

std::vector<NamedCocycle> named_cocycles(const KacModule& k)
{
    using namespace ptilde2;
    const auto& f = k.field();
    const auto& m = k.module();
    const std::size_t p = f.modulus();
    auto make = [&](Parity parity) { return zero_cochain(m, parity); };

    switch (regime_of(f, k.lambda())) {
    case Regime::minus2_top2: {
        auto phi1 = make(Parity::odd);
        phi1.values.set(k.odd_index(p - 2), alpha, 1);
        phi1.values.set(k.even_index(p - 2), e13, -1);
        auto phi2 = make(Parity::odd);
        phi2.values.set(k.odd_index(0), beta, 1);
        phi2.values.set(k.even_index(0), e24, 1);
        return {{"phi1", std::move(phi1)}, {"phi2", std::move(phi2)}};
    }
    case Regime::minus2_top1: {
        auto phi3 = make(Parity::odd);
        phi3.values.set(k.odd_index(0), h1, 1);
        phi3.values.set(k.odd_index(0), h2, 1);
        return {{"phi3", std::move(phi3)}};
    }
    case Regime::minus4_top1: {
        auto phi4 = make(Parity::even);
        phi4.values.set(k.odd_index(0), e13, 2);
        phi4.values.set(k.odd_index(2), e24, 1);
        phi4.values.set(k.odd_index(1), e14_e23, -2);
        return {{"phi4", std::move(phi4)}};
    }
    case Regime::none: break;
    }
    throw std::domain_error(fmt::format("no named cocycle for p={}, lambda=({},{})", p, k.lambda().a, k.lambda().b));
}

} // namespace kaccoh
