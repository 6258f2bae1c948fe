#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "kaccoh/module/gmodule.hpp"

namespace kaccoh {

/// A homogeneous linear map phi: g -> M, stored as a dim(M) x dim(g) matrix
/// whose column j is phi(x_j).
struct Cochain {
    Parity parity;
    FpMatrix values;

    FpVector value(std::size_t j) const { return values.column(j); }
    bool operator==(const Cochain&) const = default;
};

Cochain zero_cochain(const GModule& m, Parity parity);

/// phi(x_j) only has components of module parity |x_j| + |phi|.
bool is_parity_coherent(const GModule& m, const Cochain& phi);

/// Coordinates of the parity-coherent cochains of one parity: the pairs
/// (module row r, algebra column j) with parity(r) = parity(x_j) + parity,
/// ordered by j, then r.
class CochainLayout {
public:
    CochainLayout(const GModule& m, Parity parity);

    Parity parity() const noexcept { return parity_; }
    std::size_t size() const noexcept { return entries_.size(); }
    std::size_t module_dim() const noexcept { return module_dim_; }
    std::size_t algebra_dim() const noexcept { return algebra_dim_; }
    /// (module row, algebra column) of a coordinate.
    std::pair<std::size_t, std::size_t> entry(std::size_t coord) const { return entries_.at(coord); }
    std::optional<std::size_t> coordinate(std::size_t row, std::size_t col) const;

    /// Throws std::invalid_argument for a cochain of another parity or an
    /// incoherent one.
    FpVector flatten(const Cochain& phi) const;
    Cochain unflatten(const PrimeField& f, std::span<const Residue> coords) const;

private:
    Parity parity_;
    std::size_t module_dim_;
    std::size_t algebra_dim_;
    std::vector<std::pair<std::size_t, std::size_t>> entries_;
    std::vector<std::optional<std::size_t>> index_; // row * algebra_dim + col
};

} // namespace kaccoh
