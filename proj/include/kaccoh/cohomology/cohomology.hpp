#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "kaccoh/cohomology/derivations.hpp"
#include "kaccoh/module/kac_module.hpp"

namespace kaccoh {

/// The two ways of computing dim H^1 disagree: dim Der - dim Ider against
/// dim WDer - dim(WDer cap Ider). Signals a solver bug, never a finding.
class RouteDisagreement : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct CohomologyDims {
    std::size_t der_even = 0;
    std::size_t der_odd = 0;
    std::size_t ider_even = 0;
    std::size_t ider_odd = 0;
    std::size_t h1_even = 0;
    std::size_t h1_odd = 0;
    std::size_t h1_total = 0;
    bool operator==(const CohomologyDims&) const = default;
};

/// Der, weight-Der and Ider of one parity, all in the same coordinates.
struct ParityPart {
    DerivationSpace der;
    Subspace weight_der;
    Subspace ider;
    /// Greedy completion of Ider to Der over the echelon basis of Der.
    std::vector<FpVector> representatives;
};

struct H1Computation {
    CohomologyDims dims;
    std::array<ParityPart, 2> parts; // indexed by bit(parity)

    const ParityPart& part(Parity p) const { return parts[bit(p)]; }
    /// Coset representatives of H^1, even ones first.
    std::vector<Cochain> representatives() const;
};

/// Both routes are always run. Throws RouteDisagreement with per-parity
/// diagnostics if they differ, std::logic_error if Ider is not inside Der.
H1Computation compute_h1(const GModule& m);

struct CohomologyReport {
    std::uint32_t p = 0;
    HighestWeight lambda;
    CohomologyDims dims;
    std::vector<Cochain> representatives;
    unsigned predicted = 0;
    bool agrees = false;
    std::vector<std::string> module_labels;
    std::vector<std::string> algebra_labels;
};

CohomologyReport h1(const KacModule& k);

/// Closed-form dim H^1(P~(2), K(lambda)):
///   2 if a+b = -2 and Phi(b) = p-2,
///   1 if a+b = -2 and Phi(b) = p-1, or a+b = -4 and Phi(b) = p-1,
///   0 otherwise (a+b compared in F_p).
unsigned predict_h1(const PrimeField& f, HighestWeight lambda);

/// Names of every closed-form clause that matches; more than one entry would
/// mean the clauses overlap.
std::vector<std::string> matching_predictor_clauses(const PrimeField& f, HighestWeight lambda);

std::string describe(const CohomologyDims& d);

} // namespace kaccoh
