#pragma once

#include <array>
#include <cstddef>
#include <cstdint>

#include "kaccoh/algebra/superalgebra.hpp"
#include "kaccoh/algebra/supermatrix.hpp"

namespace kaccoh {

/// Fixed basis order of P~(2), following the Z-grading g_{-1}, g_0, g_{+1}:
///   gamma = e41 - e32, h1 = e33 - e11, h2 = e44 - e22, alpha = e43 - e12,
///   beta = e34 - e21, e13, e24, e14 + e23.
namespace ptilde2 {
enum Basis : std::size_t { gamma = 0, h1, h2, alpha, beta, e13, e24, e14_e23 };
inline constexpr std::size_t dim = 8;
inline constexpr std::array<const char*, dim> labels = {"gamma", "h1", "h2", "alpha", "beta", "e13", "e24", "e14+e23"};
} // namespace ptilde2

/// The 4x4 supermatrices realising the basis above.
std::array<Supermatrix, ptilde2::dim> p_tilde_2_realization(PrimeField field);

/// Coordinates of `m` in the realization basis. Throws std::invalid_argument
/// if `m` is not an element of P~(2).
FpVector p_tilde_2_coordinates(const Supermatrix& m);

/// P~(2) = {(A B; C -A^T) : B = B^T, C = -C^T} with structure constants
/// computed from the realization. Throws std::invalid_argument if p is not an
/// odd prime, std::logic_error if the result fails validation.
Superalgebra build_p_tilde_2(std::int64_t p);

/// True when `g` carries the P~(2) basis labels in the fixed order.
bool has_p_tilde_2_basis(const Superalgebra& g);

} // namespace kaccoh
