#include "kaccoh/algebra/supermatrix.hpp"

#include <stdexcept>

namespace kaccoh {

Supermatrix Supermatrix::unit(PrimeField field, int i, int j)
{
    if (i < 1 || i > 4 || j < 1 || j > 4)
        throw std::out_of_range("matrix unit index outside 1..4");
    Supermatrix m(field);
    m(i - 1, j - 1) = 1;
    return m;
}

std::optional<Parity> Supermatrix::parity() const noexcept
{
    bool has_even = false, has_odd = false;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            if ((*this)(r, c) != 0)
                (entry_parity(r, c) == Parity::even ? has_even : has_odd) = true;
    if (has_even && has_odd)
        return std::nullopt;
    return has_odd ? Parity::odd : Parity::even;
}

Supermatrix operator+(const Supermatrix& a, const Supermatrix& b)
{
    Supermatrix out(a.field());
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            out(r, c) = a.field().add(a(r, c), b(r, c));
    return out;
}

Supermatrix operator-(const Supermatrix& a, const Supermatrix& b)
{
    Supermatrix out(a.field());
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            out(r, c) = a.field().sub(a(r, c), b(r, c));
    return out;
}

Supermatrix operator*(const Supermatrix& a, const Supermatrix& b)
{
    const auto& f = a.field();
    Supermatrix out(f);
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
            Residue acc = 0;
            for (int k = 0; k < 4; ++k)
                acc = f.add(acc, f.mul(a(r, k), b(k, c)));
            out(r, c) = acc;
        }
    return out;
}

Supermatrix scaled(const Supermatrix& a, Residue s)
{
    Supermatrix out(a.field());
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            out(r, c) = a.field().mul(a(r, c), s);
    return out;
}

Supermatrix supercommutator(const Supermatrix& x, const Supermatrix& y)
{
    const auto px = x.parity();
    const auto py = y.parity();
    if (!px || !py)
        throw std::invalid_argument("supercommutator of a non-homogeneous supermatrix");
    const Supermatrix xy = x * y;
    const Supermatrix yx = y * x;
    return koszul_sign(*px, *py) < 0 ? xy + yx : xy - yx;
}

} // namespace kaccoh
