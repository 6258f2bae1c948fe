#include "kaccoh/linalg/subspace.hpp"

#include <algorithm>
#include <stdexcept>

#include <fmt/format.h>

namespace kaccoh {

namespace {

void require_compatible(const Subspace& a, const Subspace& b, const char* what)
{
    if (a.field() != b.field() || a.ambient_dim() != b.ambient_dim())
        throw std::invalid_argument(fmt::format("{}: subspaces of F_{}^{} and F_{}^{}", what, a.field().modulus(),
                                                a.ambient_dim(), b.field().modulus(), b.ambient_dim()));
}

FpMatrix leading_rows(const FpMatrix& m, std::size_t n)
{
    FpMatrix out(m.field(), n, m.cols());
    for (std::size_t r = 0; r < n; ++r)
        std::ranges::copy(m.row(r), out.row(r).begin());
    return out;
}

} // namespace

Subspace::Subspace(PrimeField field, std::size_t ambient_dim) : basis_(field, 0, ambient_dim) {}

Subspace::Subspace(RowEchelon echelon)
    : basis_(leading_rows(echelon.reduced, echelon.rank)), pivots_(std::move(echelon.pivot_cols))
{
}

Subspace Subspace::full(PrimeField field, std::size_t ambient_dim)
{
    return span(FpMatrix::identity(field, ambient_dim));
}

Subspace Subspace::span(const FpMatrix& generators) { return Subspace(rref(generators)); }

Subspace Subspace::span(PrimeField field, std::size_t ambient_dim, std::span<const FpVector> generators)
{
    return span(FpMatrix::from_rows(field, ambient_dim, generators));
}

FpVector Subspace::basis_vector(std::size_t i) const
{
    auto r = basis_.row(i);
    return {r.begin(), r.end()};
}

FpVector Subspace::reduce(std::span<const Residue> v) const
{
    if (v.size() != ambient_dim())
        throw std::invalid_argument(
            fmt::format("vector of length {} tested against subspace of F_p^{}", v.size(), ambient_dim()));
    const auto& f = field();
    FpVector w(v.begin(), v.end());
    for (std::size_t i = 0; i < dim(); ++i) {
        const Residue coeff = w[pivots_[i]];
        if (coeff == 0)
            continue;
        auto row = basis_.row(i);
        for (std::size_t j = pivots_[i]; j < w.size(); ++j)
            w[j] = f.sub(w[j], f.mul(coeff, row[j]));
    }
    return w;
}

bool Subspace::contains(std::span<const Residue> v) const { return is_zero_vector(reduce(v)); }

Subspace nullspace(const FpMatrix& m)
{
    const auto ech = rref(m);
    const auto& f = m.field();
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : ech.pivot_cols)
        is_pivot[c] = true;

    std::vector<FpVector> gens;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free])
            continue;
        FpVector x(m.cols(), 0);
        x[free] = 1;
        for (std::size_t i = 0; i < ech.rank; ++i)
            x[ech.pivot_cols[i]] = f.neg(ech.reduced(i, free));
        gens.push_back(std::move(x));
    }
    return Subspace::span(f, m.cols(), gens);
}

Subspace subspace_sum(const Subspace& a, const Subspace& b)
{
    require_compatible(a, b, "subspace_sum");
    return Subspace::span(vstack(a.basis(), b.basis()));
}

Subspace subspace_intersection(const Subspace& a, const Subspace& b)
{
    require_compatible(a, b, "subspace_intersection");
    // Pairs (x, y) with x.A = y.B, i.e. the kernel of [A^T | -B^T].
    const auto& f = a.field();
    const std::size_t n = a.ambient_dim();
    FpMatrix system(f, n, a.dim() + b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t c = 0; c < n; ++c)
            system(c, i) = a.basis()(i, c);
    for (std::size_t i = 0; i < b.dim(); ++i)
        for (std::size_t c = 0; c < n; ++c)
            system(c, a.dim() + i) = f.neg(b.basis()(i, c));

    const auto kernel = nullspace(system);
    std::vector<FpVector> gens;
    for (std::size_t k = 0; k < kernel.dim(); ++k) {
        FpVector v(n, 0);
        for (std::size_t i = 0; i < a.dim(); ++i) {
            const Residue coeff = kernel.basis()(k, i);
            if (coeff == 0)
                continue;
            for (std::size_t c = 0; c < n; ++c)
                v[c] = f.add(v[c], f.mul(coeff, a.basis()(i, c)));
        }
        gens.push_back(std::move(v));
    }
    return Subspace::span(f, n, gens);
}

bool subspace_contains(const Subspace& a, std::span<const Residue> v) { return a.contains(v); }

bool is_subspace_of(const Subspace& a, const Subspace& b)
{
    require_compatible(a, b, "is_subspace_of");
    for (std::size_t i = 0; i < a.dim(); ++i)
        if (!b.contains(a.basis().row(i)))
            return false;
    return true;
}

} // namespace kaccoh
