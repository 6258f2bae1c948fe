#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "kaccoh/cohomology/cochain.hpp"
#include "kaccoh/linalg/subspace.hpp"

namespace kaccoh {

/// phi([x_i,x_j]) - (-1)^{|phi||x_i|} x_i phi(x_j) + (-1)^{|x_j|(|phi|+|x_i|)} x_j phi(x_i).
/// Zero iff phi satisfies the super Leibniz rule on (x_i, x_j).
/// Throws std::invalid_argument for an incoherent cochain.
FpVector derivation_identity_residual(const GModule& m, const Cochain& phi, std::size_t i, std::size_t j);

/// All dim(g)^2 residuals vanish.
bool is_derivation(const GModule& m, const Cochain& phi);

/// The linear system "residual(i, j) = 0 for every ordered pair" in layout
/// coordinates: dim(g)^2 blocks of dim(M) rows. The pair blocks are filled in
/// parallel; derivation_system_serial is the reference.
FpMatrix derivation_system(const GModule& m, const CochainLayout& layout);
FpMatrix derivation_system_serial(const GModule& m, const CochainLayout& layout);

/// Unit rows zeroing every coordinate (r, j) where the weight of module
/// vector r differs from the root of x_j.
FpMatrix weight_constraints(const GModule& m, const CochainLayout& layout);

/// A space of cochains of one parity, as a subspace of layout coordinates.
struct DerivationSpace {
    CochainLayout layout;
    Subspace space;

    Parity parity() const noexcept { return layout.parity(); }
    std::size_t dim() const noexcept { return space.dim(); }
    std::vector<Cochain> basis() const;
};

DerivationSpace derivation_space(const GModule& m, Parity parity);
/// Derivations mapping every root space g_alpha into M_alpha.
DerivationSpace weight_derivation_space(const GModule& m, Parity parity);

/// D_v: x -> (-1)^{|x||v|} x.v, of parity |v|.
/// Throws std::invalid_argument if v is not homogeneous.
Cochain inner_derivation(const GModule& m, std::span<const Residue> v);

/// Span of D_v over homogeneous v of the layout's parity.
Subspace inner_space(const GModule& m, const CochainLayout& layout);

} // namespace kaccoh
