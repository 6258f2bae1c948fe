#include "kaccoh/cohomology/checks.hpp"

namespace kaccoh {

std::vector<CartanImageViolation> check_cartan_images_annihilated(const GModule& m, const H1Computation& h)
{
    const auto& g = m.algebra();
    std::vector<CartanImageViolation> out;
    for (const auto& part : h.parts) {
        const auto& layout = part.der.layout;
        for (std::size_t i = 0; i < part.weight_der.dim(); ++i) {
            const auto phi = layout.unflatten(m.field(), part.weight_der.basis().row(i));
            for (auto hc : g.cartan()) {
                const auto image = phi.value(hc);
                for (std::size_t x = 0; x < g.dim(); ++x)
                    if (!is_zero_vector(m.act(x, image)))
                        out.push_back({layout.parity(), i, hc, x});
            }
        }
    }
    return out;
}

std::array<bool, 2> check_weight_reduction(const H1Computation& h)
{
    std::array<bool, 2> ok{};
    for (std::size_t t = 0; t < 2; ++t)
        ok[t] = subspace_sum(h.parts[t].weight_der, h.parts[t].ider) == h.parts[t].der.space;
    return ok;
}

std::array<bool, 2> check_route_agreement(const H1Computation& h)
{
    std::array<bool, 2> ok{};
    for (std::size_t t = 0; t < 2; ++t) {
        const auto& part = h.parts[t];
        const auto overlap = subspace_intersection(part.weight_der, part.ider).dim();
        ok[t] = part.der.dim() - part.ider.dim() == part.weight_der.dim() - overlap;
    }
    return ok;
}

std::vector<NamedCocycleCheck> check_named_cocycles(const KacModule& k, const H1Computation& h)
{
    std::vector<NamedCocycleCheck> out;
    if (!has_named_cocycles(k.field(), k.lambda()))
        return out;
    for (const auto& nc : named_cocycles(k)) {
        NamedCocycleCheck c{nc.name};
        c.derivation = is_derivation(k.module(), nc.cochain);
        const auto& part = h.part(nc.cochain.parity);
        const auto coords = part.der.layout.flatten(nc.cochain);
        c.weight_derivation = part.weight_der.contains(coords);
        c.outer = !part.ider.contains(coords);
        out.push_back(std::move(c));
    }
    return out;
}

std::array<bool, 2> check_named_cocycles_span(const KacModule& k, const H1Computation& h)
{
    std::array<std::vector<FpVector>, 2> gens;
    if (has_named_cocycles(k.field(), k.lambda()))
        for (const auto& nc : named_cocycles(k))
            gens[bit(nc.cochain.parity)].push_back(h.part(nc.cochain.parity).der.layout.flatten(nc.cochain));
    std::array<bool, 2> ok{};
    for (std::size_t t = 0; t < 2; ++t) {
        const auto& part = h.parts[t];
        const auto named = Subspace::span(k.field(), part.der.layout.size(), gens[t]);
        ok[t] = subspace_sum(part.ider, named) == part.der.space;
    }
    return ok;
}

} // namespace kaccoh
