#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kaccoh/algebra/superalgebra.hpp"
#include "kaccoh/linalg/fp_matrix.hpp"
#include "kaccoh/linalg/subspace.hpp"

namespace kaccoh {

/// A finite-dimensional g-module: one action matrix per algebra basis
/// element, on a homogeneous module basis.
class GModule {
public:
    /// Checks shapes only; see validate_representation for the module axioms.
    GModule(std::shared_ptr<const Superalgebra> algebra, std::vector<Parity> parity, std::vector<std::string> labels,
            std::vector<FpMatrix> action);

    const Superalgebra& algebra() const noexcept { return *algebra_; }
    const std::shared_ptr<const Superalgebra>& algebra_ptr() const noexcept { return algebra_; }
    const PrimeField& field() const noexcept { return algebra_->field(); }
    std::size_t dim() const noexcept { return parity_.size(); }
    Parity parity(std::size_t r) const { return parity_.at(r); }
    const std::vector<Parity>& parities() const noexcept { return parity_; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const FpMatrix& action(std::size_t x) const { return action_.at(x); }
    const std::vector<FpMatrix>& actions() const noexcept { return action_; }

    /// x_i . v
    FpVector act(std::size_t i, std::span<const Residue> v) const { return action_.at(i).apply(v); }

    /// Parity of a vector, or nullopt if it mixes parities. Zero is even.
    std::optional<Parity> vector_parity(std::span<const Residue> v) const;

    /// Same algebra (by value), basis and action.
    friend bool operator==(const GModule& x, const GModule& y)
    {
        return *x.algebra_ == *y.algebra_ && x.parity_ == y.parity_ && x.labels_ == y.labels_ &&
               x.action_ == y.action_;
    }

private:
    std::shared_ptr<const Superalgebra> algebra_;
    std::vector<Parity> parity_;
    std::vector<std::string> labels_;
    std::vector<FpMatrix> action_;
};

struct RepresentationViolation {
    enum class Kind { bracket_law, parity };
    Kind kind;
    std::size_t x;
    std::size_t y; // == x for parity violations
    std::string detail;
};

/// Checks rho([x,y]) = rho(x)rho(y) - (-1)^{|x||y|} rho(y)rho(x) on every
/// ordered basis pair, and that each rho(x) shifts module parity by |x|.
std::vector<RepresentationViolation> validate_representation(const GModule& m);

/// (h1, h2)-eigenvalues of each module basis vector.
/// Throws std::domain_error if the Cartan action is not diagonal.
std::vector<Weight> basis_weights(const GModule& m);
std::map<Weight, Subspace> weight_decomposition(const GModule& m);
/// M_w by eigenvalue matching; zero subspace for weights that do not occur.
Subspace weight_space(const GModule& m, Weight w);

/// {v : x.v = 0 for every basis element x}.
Subspace module_invariants(const GModule& m);

} // namespace kaccoh
