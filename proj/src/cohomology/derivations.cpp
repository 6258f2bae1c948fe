#include "kaccoh/cohomology/derivations.hpp"

#include <cstdint>
#include <stdexcept>

#include <fmt/format.h>

namespace kaccoh {

namespace {

// Row block for pair (i, j), written into rows [block * dim(M), (block+1) * dim(M)).
void fill_pair_block(const GModule& m, const CochainLayout& layout, std::size_t i, std::size_t j, FpMatrix& sys)
{
    const auto& g = m.algebra();
    const auto& f = m.field();
    const auto d = m.dim();
    const auto n = g.dim();
    const auto base = (i * n + j) * d;
    const Parity par = layout.parity();
    const bool flip_i = koszul_sign(par, g.parity(i)) < 0;
    const bool flip_j = koszul_sign(g.parity(j), par + g.parity(i)) < 0;
    const auto& ai = m.action(i);
    const auto& aj = m.action(j);

    for (std::size_t r = 0; r < d; ++r) {
        auto row = sys.row(base + r);
        for (std::size_t k = 0; k < n; ++k)
            if (auto c = g.structure(i, j, k); c != 0)
                if (auto coord = layout.coordinate(r, k))
                    row[*coord] = f.add(row[*coord], c);
        for (std::size_t c = 0; c < d; ++c) {
            if (auto v = ai(r, c); v != 0)
                if (auto coord = layout.coordinate(c, j))
                    row[*coord] = flip_i ? f.add(row[*coord], v) : f.sub(row[*coord], v);
            if (auto v = aj(r, c); v != 0)
                if (auto coord = layout.coordinate(c, i))
                    row[*coord] = flip_j ? f.sub(row[*coord], v) : f.add(row[*coord], v);
        }
    }
}

template <bool Parallel>
FpMatrix assemble(const GModule& m, const CochainLayout& layout)
{
    const auto n = m.algebra().dim();
    FpMatrix sys(m.field(), n * n * m.dim(), layout.size());
    const auto pairs = static_cast<std::int64_t>(n * n);
    // below this size thread start-up costs more than the fill
    [[maybe_unused]] const bool go_parallel = Parallel && sys.rows() * sys.cols() >= (std::size_t{1} << 18);
#pragma omp parallel for schedule(static) if (go_parallel)
    for (std::int64_t t = 0; t < pairs; ++t)
        fill_pair_block(m, layout, static_cast<std::size_t>(t) / n, static_cast<std::size_t>(t) % n, sys);
    return sys;
}

} // namespace

FpVector derivation_identity_residual(const GModule& m, const Cochain& phi, std::size_t i, std::size_t j)
{
    if (!is_parity_coherent(m, phi))
        throw std::invalid_argument("derivation residual of a parity-incoherent cochain");
    const auto& g = m.algebra();
    const auto& f = m.field();
    FpVector out = phi.values.apply(g.bracket(i, j));
    const auto xi_phi_xj = m.act(i, phi.value(j));
    const auto xj_phi_xi = m.act(j, phi.value(i));
    const bool flip_i = koszul_sign(phi.parity, g.parity(i)) < 0;
    const bool flip_j = koszul_sign(g.parity(j), phi.parity + g.parity(i)) < 0;
    for (std::size_t r = 0; r < out.size(); ++r) {
        out[r] = flip_i ? f.add(out[r], xi_phi_xj[r]) : f.sub(out[r], xi_phi_xj[r]);
        out[r] = flip_j ? f.sub(out[r], xj_phi_xi[r]) : f.add(out[r], xj_phi_xi[r]);
    }
    return out;
}

bool is_derivation(const GModule& m, const Cochain& phi)
{
    const auto n = m.algebra().dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!is_zero_vector(derivation_identity_residual(m, phi, i, j)))
                return false;
    return true;
}

FpMatrix derivation_system(const GModule& m, const CochainLayout& layout) { return assemble<true>(m, layout); }
FpMatrix derivation_system_serial(const GModule& m, const CochainLayout& layout)
{
    return assemble<false>(m, layout);
}

FpMatrix weight_constraints(const GModule& m, const CochainLayout& layout)
{
    const auto roots = basis_roots(m.algebra());
    const auto weights = basis_weights(m);
    std::vector<std::size_t> off;
    for (std::size_t c = 0; c < layout.size(); ++c) {
        const auto [r, j] = layout.entry(c);
        if (weights[r] != roots[j])
            off.push_back(c);
    }
    FpMatrix rows(m.field(), off.size(), layout.size());
    for (std::size_t t = 0; t < off.size(); ++t)
        rows(t, off[t]) = 1;
    return rows;
}

std::vector<Cochain> DerivationSpace::basis() const
{
    std::vector<Cochain> out;
    for (std::size_t i = 0; i < space.dim(); ++i)
        out.push_back(layout.unflatten(space.field(), space.basis().row(i)));
    return out;
}

DerivationSpace derivation_space(const GModule& m, Parity parity)
{
    CochainLayout layout(m, parity);
    auto space = nullspace(derivation_system(m, layout));
    return {std::move(layout), std::move(space)};
}

DerivationSpace weight_derivation_space(const GModule& m, Parity parity)
{
    CochainLayout layout(m, parity);
    auto space = nullspace(vstack(derivation_system(m, layout), weight_constraints(m, layout)));
    return {std::move(layout), std::move(space)};
}

Cochain inner_derivation(const GModule& m, std::span<const Residue> v)
{
    if (v.size() != m.dim())
        throw std::invalid_argument("inner derivation: vector length mismatch");
    const auto par = m.vector_parity(v);
    if (!par)
        throw std::invalid_argument("inner derivation of a non-homogeneous vector");
    const auto& g = m.algebra();
    const auto& f = m.field();
    Cochain phi = zero_cochain(m, *par);
    for (std::size_t j = 0; j < g.dim(); ++j) {
        const auto xv = m.act(j, v);
        const bool flip = koszul_sign(g.parity(j), *par) < 0;
        for (std::size_t r = 0; r < m.dim(); ++r)
            phi.values(r, j) = flip ? f.neg(xv[r]) : xv[r];
    }
    return phi;
}

Subspace inner_space(const GModule& m, const CochainLayout& layout)
{
    std::vector<FpVector> gens;
    for (std::size_t r = 0; r < m.dim(); ++r) {
        if (m.parity(r) != layout.parity())
            continue;
        FpVector e(m.dim(), 0);
        e[r] = 1;
        gens.push_back(layout.flatten(inner_derivation(m, e)));
    }
    return Subspace::span(m.field(), layout.size(), gens);
}

} // namespace kaccoh
