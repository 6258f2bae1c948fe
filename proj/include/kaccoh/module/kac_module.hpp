#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>

#include "kaccoh/algebra/weight.hpp"
#include "kaccoh/module/gmodule.hpp"

namespace kaccoh {

/// lambda = a eps1 + b eps2.
struct HighestWeight {
    Residue a = 0;
    Residue b = 0;
    bool operator==(const HighestWeight&) const = default;
};

/// Raised when a hand-built module fails the representation law.
class RepresentationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The degree-zero part g_0 of a Z-graded superalgebra.
Superalgebra degree_zero_part(const Superalgebra& g);

/// Simple g_0-module M(lambda) = <v_0, ..., v_top>, top = Phi(b - a):
///   h1 v_k = (a+k) v_k, h2 v_k = (b-k) v_k,
///   alpha v_k = k(b-a-k+1) v_{k-1}, beta v_k = v_{k+1} (0 at k = top).
/// `g0` must have basis labels h1, h2, alpha, beta.
GModule build_simple_module(std::shared_ptr<const Superalgebra> g0, HighestWeight lambda);

/// Kac module K(lambda) of P~(2) on the basis
///   1(x)v_0, ..., 1(x)v_top, gamma(x)v_0, ..., gamma(x)v_top
/// (all even vectors first).
class KacModule {
public:
    const GModule& module() const noexcept { return module_; }
    const PrimeField& field() const noexcept { return module_.field(); }
    HighestWeight lambda() const noexcept { return lambda_; }
    std::size_t top_index() const noexcept { return top_; }
    std::size_t dim() const noexcept { return module_.dim(); }

    /// Position of 1(x)v_k / gamma(x)v_k in the module basis.
    std::size_t even_index(std::size_t k) const noexcept { return k; }
    std::size_t odd_index(std::size_t k) const noexcept { return top_ + 1 + k; }

    friend KacModule build_kac_module(std::shared_ptr<const Superalgebra> g, HighestWeight lambda);

private:
    KacModule(GModule module, HighestWeight lambda, std::size_t top)
        : module_(std::move(module)), lambda_(lambda), top_(top)
    {
    }

    GModule module_;
    HighestWeight lambda_;
    std::size_t top_;
};

/// Throws std::invalid_argument unless `g` has the P~(2) basis, and
/// RepresentationError if the assembled action breaks the representation law.
KacModule build_kac_module(std::shared_ptr<const Superalgebra> g, HighestWeight lambda);

/// Convenience: P~(2) over F_p and K(a eps1 + b eps2), a and b reduced mod p.
KacModule build_kac_module(std::int64_t p, std::int64_t a, std::int64_t b);

/// K(lambda)_w found by matching the Cartan eigenvalues of each basis vector.
Subspace target_weight_space(const KacModule& k, Weight w);

/// The closed-form description of K(lambda)_w for the seven roots of P~(2)
/// (as a function of a + b and Phi(b)). nullopt for any other weight.
std::optional<Subspace> target_weight_space_case_table(const KacModule& k, Weight w);

/// The seven roots (-2,0), (-1,-1), (-1,1), (0,-2), (1,-1), (1,1), (0,0) mod p.
std::array<Weight, 7> p_tilde_2_roots(const PrimeField& f);

} // namespace kaccoh
