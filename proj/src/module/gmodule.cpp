#include "kaccoh/module/gmodule.hpp"

#include <stdexcept>

#include <fmt/format.h>

namespace kaccoh {

GModule::GModule(std::shared_ptr<const Superalgebra> algebra, std::vector<Parity> parity,
                 std::vector<std::string> labels, std::vector<FpMatrix> action)
    : algebra_(std::move(algebra)), parity_(std::move(parity)), labels_(std::move(labels)), action_(std::move(action))
{
    if (!algebra_)
        throw std::invalid_argument("module without an algebra");
    if (labels_.size() != parity_.size())
        throw std::invalid_argument("module: labels and parity lengths differ");
    if (action_.size() != algebra_->dim())
        throw std::invalid_argument(
            fmt::format("module: {} action matrices for a {}-dimensional algebra", action_.size(), algebra_->dim()));
    for (const auto& a : action_)
        if (a.rows() != dim() || a.cols() != dim() || a.field() != algebra_->field())
            throw std::invalid_argument("module: action matrix has the wrong shape or modulus");
}

std::optional<Parity> GModule::vector_parity(std::span<const Residue> v) const
{
    bool has_even = false, has_odd = false;
    for (std::size_t r = 0; r < v.size(); ++r)
        if (v[r] != 0)
            (parity_[r] == Parity::even ? has_even : has_odd) = true;
    if (has_even && has_odd)
        return std::nullopt;
    return has_odd ? Parity::odd : Parity::even;
}

std::vector<RepresentationViolation> validate_representation(const GModule& m)
{
    using Kind = RepresentationViolation::Kind;
    const auto& g = m.algebra();
    const auto& f = m.field();
    const auto n = g.dim();
    std::vector<RepresentationViolation> out;

    for (std::size_t x = 0; x < n; ++x) {
        const auto& a = m.action(x);
        for (std::size_t r = 0; r < m.dim(); ++r)
            for (std::size_t c = 0; c < m.dim(); ++c)
                if (a(r, c) != 0 && m.parity(r) != m.parity(c) + g.parity(x)) {
                    out.push_back({Kind::parity, x, x,
                                   fmt::format("{} maps {} onto {} against parity", g.label(x), m.labels()[c],
                                               m.labels()[r])});
                    r = m.dim();
                    break;
                }
    }

    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            FpMatrix lhs(f, m.dim(), m.dim());
            for (std::size_t k = 0; k < n; ++k)
                if (auto c = g.structure(x, y, k); c != 0)
                    lhs = lhs + scaled(m.action(k), c);
            const FpMatrix xy = m.action(x) * m.action(y);
            const FpMatrix yx = m.action(y) * m.action(x);
            const FpMatrix rhs = koszul_sign(g.parity(x), g.parity(y)) < 0 ? xy + yx : xy - yx;
            if (lhs != rhs)
                out.push_back({Kind::bracket_law, x, y,
                               fmt::format("rho([{},{}]) differs from the supercommutator of the actions",
                                           g.label(x), g.label(y))});
        }
    return out;
}

std::vector<Weight> basis_weights(const GModule& m)
{
    const auto& cartan = m.algebra().cartan();
    if (cartan.size() != 2)
        throw std::domain_error("weights expect a rank-2 Cartan subalgebra");
    std::vector<Weight> out(m.dim());
    for (std::size_t c = 0; c < m.dim(); ++c) {
        Residue eig[2];
        for (int t = 0; t < 2; ++t) {
            const auto& a = m.action(cartan[t]);
            for (std::size_t r = 0; r < m.dim(); ++r)
                if (r != c && a(r, c) != 0)
                    throw std::domain_error(fmt::format("{} does not act diagonally on {}",
                                                        m.algebra().label(cartan[t]), m.labels()[c]));
            eig[t] = a(c, c);
        }
        out[c] = {eig[0], eig[1]};
    }
    return out;
}

std::map<Weight, Subspace> weight_decomposition(const GModule& m)
{
    const auto weights = basis_weights(m);
    std::map<Weight, std::vector<FpVector>> gens;
    for (std::size_t c = 0; c < m.dim(); ++c) {
        FpVector e(m.dim(), 0);
        e[c] = 1;
        gens[weights[c]].push_back(std::move(e));
    }
    std::map<Weight, Subspace> out;
    for (const auto& [w, vs] : gens)
        out.emplace(w, Subspace::span(m.field(), m.dim(), vs));
    return out;
}

Subspace weight_space(const GModule& m, Weight w)
{
    const auto weights = basis_weights(m);
    std::vector<FpVector> gens;
    for (std::size_t c = 0; c < m.dim(); ++c)
        if (weights[c] == w) {
            FpVector e(m.dim(), 0);
            e[c] = 1;
            gens.push_back(std::move(e));
        }
    return Subspace::span(m.field(), m.dim(), gens);
}

Subspace module_invariants(const GModule& m)
{
    FpMatrix stacked(m.field(), 0, m.dim());
    for (const auto& a : m.actions())
        stacked = vstack(stacked, a);
    return nullspace(stacked);
}

} // namespace kaccoh
