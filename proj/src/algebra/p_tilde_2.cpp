#include "kaccoh/algebra/p_tilde_2.hpp"

#include <stdexcept>

#include <fmt/format.h>

namespace kaccoh {

std::array<Supermatrix, ptilde2::dim> p_tilde_2_realization(PrimeField f)
{
    auto e = [&](int i, int j) { return Supermatrix::unit(f, i, j); };
    return {
        e(4, 1) - e(3, 2), // gamma
        e(3, 3) - e(1, 1), // h1
        e(4, 4) - e(2, 2), // h2
        e(4, 3) - e(1, 2), // alpha
        e(3, 4) - e(2, 1), // beta
        e(1, 3),
        e(2, 4),
        e(1, 4) + e(2, 3),
    };
}

FpVector p_tilde_2_coordinates(const Supermatrix& m)
{
    const auto& f = m.field();
    const auto basis = p_tilde_2_realization(f);
    FpMatrix system(f, 16, ptilde2::dim);
    FpVector rhs(16);
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
            const auto row = static_cast<std::size_t>(r * 4 + c);
            for (std::size_t k = 0; k < ptilde2::dim; ++k)
                system(row, k) = basis[k](r, c);
            rhs[row] = m(r, c);
        }
    auto x = solve(system, rhs);
    if (!x)
        throw std::invalid_argument("supermatrix is not in P~(2)");
    return *x;
}

Superalgebra build_p_tilde_2(std::int64_t p)
{
    const PrimeField f(p);
    const auto basis = p_tilde_2_realization(f);
    constexpr auto n = ptilde2::dim;

    std::vector<Parity> parity(n);
    for (std::size_t i = 0; i < n; ++i)
        parity[i] = *basis[i].parity();

    std::vector<Residue> structure(n * n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const auto coords = p_tilde_2_coordinates(supercommutator(basis[i], basis[j]));
            for (std::size_t k = 0; k < n; ++k)
                structure[(i * n + j) * n + k] = coords[k];
        }

    Superalgebra g(f, {ptilde2::labels.begin(), ptilde2::labels.end()}, std::move(parity),
                   {-1, 0, 0, 0, 0, 1, 1, 1}, std::move(structure), {ptilde2::h1, ptilde2::h2});
    if (auto bad = validate_superalgebra(g); !bad.empty())
        throw std::logic_error(fmt::format("P~(2) over F_{} fails validation: {}", p, bad.front().detail));
    return g;
}

bool has_p_tilde_2_basis(const Superalgebra& g)
{
    if (g.dim() != ptilde2::dim)
        return false;
    for (std::size_t i = 0; i < ptilde2::dim; ++i)
        if (g.label(i) != ptilde2::labels[i])
            return false;
    return true;
}

} // namespace kaccoh
