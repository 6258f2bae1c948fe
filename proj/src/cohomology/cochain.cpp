#include "kaccoh/cohomology/cochain.hpp"

#include <stdexcept>

#include <fmt/format.h>

namespace kaccoh {

Cochain zero_cochain(const GModule& m, Parity parity)
{
    return {parity, FpMatrix(m.field(), m.dim(), m.algebra().dim())};
}

bool is_parity_coherent(const GModule& m, const Cochain& phi)
{
    const auto& g = m.algebra();
    if (phi.values.rows() != m.dim() || phi.values.cols() != g.dim())
        return false;
    for (std::size_t r = 0; r < m.dim(); ++r)
        for (std::size_t j = 0; j < g.dim(); ++j)
            if (phi.values(r, j) != 0 && m.parity(r) != g.parity(j) + phi.parity)
                return false;
    return true;
}

CochainLayout::CochainLayout(const GModule& m, Parity parity)
    : parity_(parity),
      module_dim_(m.dim()),
      algebra_dim_(m.algebra().dim()),
      index_(m.dim() * m.algebra().dim())
{
    const auto& g = m.algebra();
    for (std::size_t j = 0; j < g.dim(); ++j)
        for (std::size_t r = 0; r < m.dim(); ++r)
            if (m.parity(r) == g.parity(j) + parity) {
                index_[r * algebra_dim_ + j] = entries_.size();
                entries_.emplace_back(r, j);
            }
}

std::optional<std::size_t> CochainLayout::coordinate(std::size_t row, std::size_t col) const
{
    return index_.at(row * algebra_dim_ + col);
}

FpVector CochainLayout::flatten(const Cochain& phi) const
{
    if (phi.parity != parity_)
        throw std::invalid_argument(fmt::format("{} cochain flattened in the {} layout", to_string(phi.parity),
                                                to_string(parity_)));
    if (phi.values.rows() != module_dim_ || phi.values.cols() != algebra_dim_)
        throw std::invalid_argument("cochain shape does not match the layout");
    FpVector out(size(), 0);
    for (std::size_t r = 0; r < module_dim_; ++r)
        for (std::size_t j = 0; j < algebra_dim_; ++j) {
            const Residue v = phi.values(r, j);
            if (v == 0)
                continue;
            const auto c = coordinate(r, j);
            if (!c)
                throw std::invalid_argument(fmt::format("cochain is not parity-coherent at ({}, {})", r, j));
            out[*c] = v;
        }
    return out;
}

Cochain CochainLayout::unflatten(const PrimeField& f, std::span<const Residue> coords) const
{
    if (coords.size() != size())
        throw std::invalid_argument("coordinate vector length does not match the layout");
    Cochain phi{parity_, FpMatrix(f, module_dim_, algebra_dim_)};
    for (std::size_t c = 0; c < size(); ++c)
        phi.values(entries_[c].first, entries_[c].second) = coords[c];
    return phi;
}

} // namespace kaccoh
