#include "kaccoh/cohomology/cohomology.hpp"

#include <fmt/format.h>

#include "kaccoh/module/phi.hpp"

namespace kaccoh {

namespace {

ParityPart compute_part(const GModule& m, Parity parity, std::string& diagnostics, bool& disagree)
{
    CochainLayout layout(m, parity);
    const auto system = derivation_system(m, layout);
    auto weight_der = nullspace(vstack(system, weight_constraints(m, layout)));
    DerivationSpace der{std::move(layout), nullspace(system)};
    auto ider = inner_space(m, der.layout);

    if (!is_subspace_of(ider, der.space))
        throw std::logic_error(fmt::format("{} inner derivations are not all derivations", to_string(parity)));

    const auto via_der = der.dim() - ider.dim();
    const auto overlap = subspace_intersection(weight_der, ider).dim();
    const auto via_weight = weight_der.dim() - overlap;
    diagnostics += fmt::format("  {}: coords={} dimDer={} dimIder={} dimWDer={} dim(WDer^Ider)={} -> {} vs {}\n",
                               to_string(parity), der.layout.size(), der.dim(), ider.dim(), weight_der.dim(), overlap,
                               via_der, via_weight);
    if (via_der != via_weight)
        disagree = true;

    std::vector<FpVector> reps;
    Subspace covered = ider;
    for (std::size_t i = 0; i < der.dim(); ++i) {
        auto v = der.space.basis_vector(i);
        if (covered.contains(v))
            continue;
        covered = subspace_sum(covered, Subspace::span(m.field(), der.layout.size(), std::span(&v, 1)));
        reps.push_back(std::move(v));
    }
    return {std::move(der), std::move(weight_der), std::move(ider), std::move(reps)};
}

} // namespace

std::vector<Cochain> H1Computation::representatives() const
{
    std::vector<Cochain> out;
    for (const auto& part : parts)
        for (const auto& v : part.representatives)
            out.push_back(part.der.layout.unflatten(part.der.space.field(), v));
    return out;
}

H1Computation compute_h1(const GModule& m)
{
    std::string diagnostics;
    bool disagree = false;
    auto even = compute_part(m, Parity::even, diagnostics, disagree);
    auto odd = compute_part(m, Parity::odd, diagnostics, disagree);
    if (disagree)
        throw RouteDisagreement("Der/Ider and weight-derivation routes disagree on dim H^1 (p=" +
                                std::to_string(m.field().modulus()) + ")\n" + diagnostics);

    CohomologyDims d;
    d.der_even = even.der.dim();
    d.der_odd = odd.der.dim();
    d.ider_even = even.ider.dim();
    d.ider_odd = odd.ider.dim();
    d.h1_even = d.der_even - d.ider_even;
    d.h1_odd = d.der_odd - d.ider_odd;
    d.h1_total = d.h1_even + d.h1_odd;
    return {d, {std::move(even), std::move(odd)}};
}

CohomologyReport h1(const KacModule& k)
{
    const auto comp = compute_h1(k.module());
    CohomologyReport r;
    r.p = k.field().modulus();
    r.lambda = k.lambda();
    r.dims = comp.dims;
    r.representatives = comp.representatives();
    r.predicted = predict_h1(k.field(), k.lambda());
    r.agrees = r.predicted == r.dims.h1_total;
    r.module_labels = k.module().labels();
    r.algebra_labels = k.module().algebra().labels();
    return r;
}

std::vector<std::string> matching_predictor_clauses(const PrimeField& f, HighestWeight lambda)
{
    const std::int64_t p = f.modulus();
    const Residue sum = f.add(lambda.a, lambda.b);
    const auto pb = phi(f, lambda.b);
    std::vector<std::string> out;
    if (sum == f.reduce(-2) && pb == p - 2)
        out.emplace_back("a+b=-2, Phi(b)=p-2");
    if (sum == f.reduce(-2) && pb == p - 1)
        out.emplace_back("a+b=-2, Phi(b)=p-1");
    if (sum == f.reduce(-4) && pb == p - 1)
        out.emplace_back("a+b=-4, Phi(b)=p-1");
    return out;
}

unsigned predict_h1(const PrimeField& f, HighestWeight lambda)
{
    const std::int64_t p = f.modulus();
    const Residue sum = f.add(lambda.a, lambda.b);
    const auto pb = phi(f, lambda.b);
    if (sum == f.reduce(-2) && pb == p - 2)
        return 2;
    if ((sum == f.reduce(-2) || sum == f.reduce(-4)) && pb == p - 1)
        return 1;
    return 0;
}

std::string describe(const CohomologyDims& d)
{
    return fmt::format("Der {}+{}  Ider {}+{}  H1 {}+{} = {}", d.der_even, d.der_odd, d.ider_even, d.ider_odd,
                       d.h1_even, d.h1_odd, d.h1_total);
}

} // namespace kaccoh
