#include "kaccoh/algebra/superalgebra.hpp"

#include <algorithm>
#include <stdexcept>

#include <fmt/format.h>

namespace kaccoh {

Superalgebra::Superalgebra(PrimeField field, std::vector<std::string> labels, std::vector<Parity> parity,
                           std::vector<int> zgrade, std::vector<Residue> structure, std::vector<std::size_t> cartan)
    : field_(field),
      labels_(std::move(labels)),
      parity_(std::move(parity)),
      zgrade_(std::move(zgrade)),
      structure_(std::move(structure)),
      cartan_(std::move(cartan))
{
    const auto n = labels_.size();
    if (parity_.size() != n || zgrade_.size() != n)
        throw std::invalid_argument("superalgebra: labels, parity and zgrade lengths differ");
    if (structure_.size() != n * n * n)
        throw std::invalid_argument(fmt::format("superalgebra: structure tensor has {} entries, expected {}",
                                                structure_.size(), n * n * n));
    for (auto& c : structure_)
        c = field_.reduce(c);
    for (auto h : cartan_)
        if (h >= n)
            throw std::invalid_argument(fmt::format("superalgebra: Cartan index {} out of range", h));
}

FpVector Superalgebra::bracket(std::size_t i, std::size_t j) const
{
    const auto n = dim();
    auto first = structure_.begin() + static_cast<std::ptrdiff_t>((i * n + j) * n);
    return {first, first + static_cast<std::ptrdiff_t>(n)};
}

FpVector Superalgebra::bracket(std::span<const Residue> x, std::span<const Residue> y) const
{
    const auto n = dim();
    if (x.size() != n || y.size() != n)
        throw std::invalid_argument("bracket: coordinate vector length mismatch");
    FpVector out(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i] == 0)
            continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (y[j] == 0)
                continue;
            const Residue xy = field_.mul(x[i], y[j]);
            for (std::size_t k = 0; k < n; ++k)
                out[k] = field_.add(out[k], field_.mul(xy, structure(i, j, k)));
        }
    }
    return out;
}

std::optional<std::size_t> Superalgebra::index_of(std::string_view label) const
{
    auto it = std::ranges::find(labels_, label);
    if (it == labels_.end())
        return std::nullopt;
    return static_cast<std::size_t>(it - labels_.begin());
}

std::size_t Superalgebra::require_index(std::string_view label) const
{
    if (auto i = index_of(label))
        return *i;
    throw std::out_of_range(fmt::format("no basis element labelled '{}'", label));
}

std::string_view to_string(AxiomViolation::Kind kind) noexcept
{
    switch (kind) {
    case AxiomViolation::Kind::skew_symmetry: return "skew-symmetry";
    case AxiomViolation::Kind::parity: return "parity";
    case AxiomViolation::Kind::grading: return "grading";
    case AxiomViolation::Kind::jacobi: return "jacobi";
    case AxiomViolation::Kind::cartan: return "cartan";
    }
    return "unknown";
}

std::vector<AxiomViolation> validate_superalgebra(const Superalgebra& g)
{
    using Kind = AxiomViolation::Kind;
    const auto& f = g.field();
    const auto n = g.dim();
    std::vector<AxiomViolation> out;

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const int s = koszul_sign(g.parity(i), g.parity(j));
            for (std::size_t k = 0; k < n; ++k) {
                const Residue c = g.structure(i, j, k);
                const Residue expected = f.reduce(-s * static_cast<std::int64_t>(g.structure(j, i, k)));
                if (c != expected)
                    out.push_back({Kind::skew_symmetry, {i, j, k},
                                   fmt::format("c[{}][{}][{}]={} but -(-1)^(|i||j|) c[{}][{}][{}]={}", i, j, k, c, j,
                                               i, k, expected)});
                if (c == 0)
                    continue;
                if (g.parity(k) != g.parity(i) + g.parity(j))
                    out.push_back({Kind::parity, {i, j, k},
                                   fmt::format("[{},{}] has a component on {} of the wrong parity", g.label(i),
                                               g.label(j), g.label(k))});
                if (g.zgrade(k) != g.zgrade(i) + g.zgrade(j))
                    out.push_back({Kind::grading, {i, j, k},
                                   fmt::format("[{},{}] has a component on {} of the wrong Z-degree", g.label(i),
                                               g.label(j), g.label(k))});
            }
        }

    // [x_i,[x_j,x_l]] = [[x_i,x_j],x_l] + (-1)^{|i||j|} [x_j,[x_i,x_l]]
    std::vector<FpVector> unit(n, FpVector(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        unit[i][i] = 1;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t l = 0; l < n; ++l) {
                const auto lhs = g.bracket(unit[i], g.bracket(j, l));
                const auto t1 = g.bracket(g.bracket(i, j), unit[l]);
                const auto t2 = g.bracket(unit[j], g.bracket(i, l));
                const int s = koszul_sign(g.parity(i), g.parity(j));
                for (std::size_t k = 0; k < n; ++k) {
                    const Residue rhs = s > 0 ? f.add(t1[k], t2[k]) : f.sub(t1[k], t2[k]);
                    if (lhs[k] != rhs) {
                        out.push_back({Kind::jacobi, {i, j, l},
                                       fmt::format("super Jacobi fails on ({},{},{})", g.label(i), g.label(j),
                                                   g.label(l))});
                        break;
                    }
                }
            }

    for (auto h : g.cartan()) {
        if (g.parity(h) != Parity::even)
            out.push_back({Kind::cartan, {h}, fmt::format("Cartan element {} is odd", g.label(h))});
        for (auto h2 : g.cartan())
            if (!is_zero_vector(g.bracket(h, h2)))
                out.push_back({Kind::cartan, {h, h2},
                               fmt::format("Cartan elements {} and {} do not commute", g.label(h), g.label(h2))});
    }
    return out;
}

std::vector<Weight> basis_roots(const Superalgebra& g)
{
    if (g.cartan().size() != 2)
        throw std::domain_error("root computation expects a rank-2 Cartan subalgebra");
    const auto n = g.dim();
    std::vector<Weight> roots(n);
    for (std::size_t j = 0; j < n; ++j) {
        Residue eig[2];
        for (int t = 0; t < 2; ++t) {
            const auto h = g.cartan()[t];
            const auto col = g.bracket(h, j);
            for (std::size_t k = 0; k < n; ++k)
                if (k != j && col[k] != 0)
                    throw std::domain_error(
                        fmt::format("ad({}) is not diagonal: moves {} onto {}", g.label(h), g.label(j), g.label(k)));
            eig[t] = col[j];
        }
        roots[j] = {eig[0], eig[1]};
    }
    return roots;
}

std::map<Weight, Subspace> root_decomposition(const Superalgebra& g)
{
    const auto roots = basis_roots(g);
    std::map<Weight, std::vector<FpVector>> gens;
    for (std::size_t j = 0; j < g.dim(); ++j) {
        FpVector e(g.dim(), 0);
        e[j] = 1;
        gens[roots[j]].push_back(std::move(e));
    }
    std::map<Weight, Subspace> out;
    for (const auto& [w, vs] : gens)
        out.emplace(w, Subspace::span(g.field(), g.dim(), vs));
    return out;
}

Superalgebra subalgebra(const Superalgebra& g, std::span<const std::size_t> indices)
{
    const auto m = indices.size();
    std::vector<std::string> labels;
    std::vector<Parity> parity;
    std::vector<int> zgrade;
    std::vector<std::size_t> cartan;
    for (std::size_t a = 0; a < m; ++a) {
        const auto i = indices[a];
        labels.push_back(g.label(i));
        parity.push_back(g.parity(i));
        zgrade.push_back(g.zgrade(i));
        if (std::ranges::find(g.cartan(), i) != g.cartan().end())
            cartan.push_back(a);
    }
    std::vector<Residue> structure(m * m * m, 0);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            const auto br = g.bracket(indices[a], indices[b]);
            for (std::size_t k = 0; k < g.dim(); ++k) {
                if (br[k] == 0)
                    continue;
                auto pos = std::ranges::find(indices, k);
                if (pos == indices.end())
                    throw std::invalid_argument(fmt::format("[{},{}] leaves the span (component on {})",
                                                            g.label(indices[a]), g.label(indices[b]), g.label(k)));
                structure[(a * m + b) * m + static_cast<std::size_t>(pos - indices.begin())] = br[k];
            }
        }
    return {g.field(), std::move(labels), std::move(parity), std::move(zgrade), std::move(structure),
            std::move(cartan)};
}

} // namespace kaccoh
