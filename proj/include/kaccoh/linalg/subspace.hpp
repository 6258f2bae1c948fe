#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "kaccoh/linalg/fp_matrix.hpp"

namespace kaccoh {

/// A subspace of F_p^n stored by its reduced row-echelon basis, so equal
/// subspaces compare equal member-for-member.
class Subspace {
public:
    /// The zero subspace of F_p^n.
    Subspace(PrimeField field, std::size_t ambient_dim);

    static Subspace full(PrimeField field, std::size_t ambient_dim);
    /// Row space of `generators`.
    static Subspace span(const FpMatrix& generators);
    static Subspace span(PrimeField field, std::size_t ambient_dim, std::span<const FpVector> generators);

    const PrimeField& field() const noexcept { return basis_.field(); }
    std::size_t ambient_dim() const noexcept { return basis_.cols(); }
    std::size_t dim() const noexcept { return basis_.rows(); }
    const FpMatrix& basis() const noexcept { return basis_; }
    FpVector basis_vector(std::size_t i) const;
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

    /// Throws std::invalid_argument on a length mismatch.
    bool contains(std::span<const Residue> v) const;
    /// v minus its component along the echelon basis; zero iff v is contained.
    FpVector reduce(std::span<const Residue> v) const;

    bool operator==(const Subspace&) const = default;

private:
    explicit Subspace(RowEchelon echelon);

    FpMatrix basis_;
    std::vector<std::size_t> pivots_;
};

/// Canonical basis of {x : m x = 0}.
Subspace nullspace(const FpMatrix& m);

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersection(const Subspace& a, const Subspace& b);
bool subspace_contains(const Subspace& a, std::span<const Residue> v);
bool is_subspace_of(const Subspace& a, const Subspace& b);

} // namespace kaccoh
