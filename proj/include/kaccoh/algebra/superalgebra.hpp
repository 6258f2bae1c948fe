#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kaccoh/algebra/parity.hpp"
#include "kaccoh/algebra/weight.hpp"
#include "kaccoh/linalg/subspace.hpp"

namespace kaccoh {

/// A finite-dimensional Lie superalgebra given by structure constants on a
/// homogeneous basis: [x_i, x_j] = sum_k c(i, j, k) x_k.
///
/// The constructor only checks shapes; axioms are checked separately by
/// validate_superalgebra so that defective tensors can be represented and
/// diagnosed.
class Superalgebra {
public:
    /// `structure` holds c(i, j, k) at index (i * dim + j) * dim + k.
    Superalgebra(PrimeField field, std::vector<std::string> labels, std::vector<Parity> parity,
                 std::vector<int> zgrade, std::vector<Residue> structure, std::vector<std::size_t> cartan);

    const PrimeField& field() const noexcept { return field_; }
    std::size_t dim() const noexcept { return labels_.size(); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::string& label(std::size_t i) const { return labels_.at(i); }
    Parity parity(std::size_t i) const { return parity_.at(i); }
    const std::vector<Parity>& parities() const noexcept { return parity_; }
    int zgrade(std::size_t i) const { return zgrade_.at(i); }
    const std::vector<int>& zgrades() const noexcept { return zgrade_; }
    const std::vector<std::size_t>& cartan() const noexcept { return cartan_; }
    const std::vector<Residue>& structure() const noexcept { return structure_; }

    Residue structure(std::size_t i, std::size_t j, std::size_t k) const noexcept
    {
        return structure_[(i * dim() + j) * dim() + k];
    }

    /// Coordinates of [x_i, x_j].
    FpVector bracket(std::size_t i, std::size_t j) const;
    /// Bilinear extension to arbitrary coordinate vectors.
    FpVector bracket(std::span<const Residue> x, std::span<const Residue> y) const;

    std::optional<std::size_t> index_of(std::string_view label) const;
    /// Throws std::out_of_range for an unknown label.
    std::size_t require_index(std::string_view label) const;

    bool operator==(const Superalgebra&) const = default;

private:
    PrimeField field_;
    std::vector<std::string> labels_;
    std::vector<Parity> parity_;
    std::vector<int> zgrade_;
    std::vector<Residue> structure_;
    std::vector<std::size_t> cartan_;
};

struct AxiomViolation {
    enum class Kind { skew_symmetry, parity, grading, jacobi, cartan };
    Kind kind;
    std::vector<std::size_t> indices;
    std::string detail;
};

std::string_view to_string(AxiomViolation::Kind kind) noexcept;

/// Checks super skew-symmetry, parity and Z-grading compatibility, the super
/// Jacobi identity on every basis triple, and that the Cartan elements are
/// even and commute. Empty result means valid.
std::vector<AxiomViolation> validate_superalgebra(const Superalgebra& g);

/// Root of each basis vector under ad of the (two) Cartan elements.
/// Throws std::domain_error if the Cartan action is not diagonal on the basis.
std::vector<Weight> basis_roots(const Superalgebra& g);

/// Root spaces keyed by root; the zero root holds the Cartan subalgebra.
std::map<Weight, Subspace> root_decomposition(const Superalgebra& g);

/// The subalgebra spanned by the listed basis vectors, with the Cartan set
/// restricted to it. Throws std::invalid_argument if the span is not closed.
Superalgebra subalgebra(const Superalgebra& g, std::span<const std::size_t> indices);

} // namespace kaccoh
