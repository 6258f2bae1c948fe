#include "kaccoh/module/phi.hpp"

#include <initializer_list>

namespace kaccoh {

namespace {

bool member(std::int64_t x, IntRange range, std::initializer_list<std::int64_t> extra = {})
{
    if (range.contains(x))
        return true;
    for (auto e : extra)
        if (x == e)
            return true;
    return false;
}

} // namespace

std::array<PhiIff, 10> phi_lemma_predicates(const PrimeField& f, std::int64_t b)
{
    const std::int64_t p = f.modulus();
    auto P = [&](std::int64_t c) { return phi(f, c); };
    const auto pb = P(b);
    const IntRange to_pm3_half{0, (p - 3) / 2};
    const IntRange to_pm1_half{0, (p - 1) / 2};
    const IntRange one_to_pm1_half{1, (p - 1) / 2};
    const IntRange to_pm5_half{0, (p - 5) / 2}; // empty at p = 3
    const IntRange one_to_pp1_half{1, (p + 1) / 2};

    return {{
        {"Phi(b)   <= Phi(2b+2)", P(b) <= P(2 * b + 2), member(pb, to_pm3_half, {p - 2})},
        {"Phi(b+1) <= Phi(2b+2)", P(b + 1) <= P(2 * b + 2), member(pb, to_pm3_half, {p - 1})},
        {"Phi(b+2) <= Phi(2b+2)", P(b + 2) <= P(2 * b + 2), member(pb, to_pm3_half, {p - 2})},
        {"Phi(b)   <= Phi(2b)", P(b) <= P(2 * b), member(pb, to_pm1_half)},
        {"Phi(b-1) <= Phi(2b)", P(b - 1) <= P(2 * b), member(pb, one_to_pm1_half, {p - 1})},
        {"Phi(b+1) <= Phi(2b)", P(b + 1) <= P(2 * b), member(pb, one_to_pm1_half, {p - 1})},
        {"Phi(b+1) <= Phi(2b+4)", P(b + 1) <= P(2 * b + 4), member(pb, to_pm5_half, {p - 1, p - 3})},
        {"Phi(b+2) <= Phi(2b+4)", P(b + 2) <= P(2 * b + 4), member(pb, to_pm5_half, {p - 1, p - 2})},
        {"Phi(b+3) <= Phi(2b+4)", P(b + 3) <= P(2 * b + 4), member(pb, to_pm5_half, {p - 1, p - 3})},
        {"Phi(b-1) <= Phi(2b-2)", P(b - 1) <= P(2 * b - 2), member(pb, one_to_pp1_half)},
    }};
}

PhiScopes phi_scopes_direct(const PrimeField& f, std::int64_t b)
{
    return {phi(f, b), phi(f, b + 1), phi(f, b + 2), phi(f, 2 * b + 2)};
}

PhiScopes phi_scopes_tabulated(const PrimeField& f, std::int64_t b)
{
    const std::int64_t p = f.modulus();
    const auto x = phi(f, b);
    PhiScopes s{x, 0, 0, 0};
    s.phi_b1 = x <= p - 2 ? x + 1 : 0;
    s.phi_b2 = x <= p - 3 ? x + 2 : x - (p - 2);
    if (x <= (p - 3) / 2)
        s.phi_2b2 = 2 * x + 2;
    else if (x <= p - 2)
        s.phi_2b2 = 2 * x + 2 - p;
    else
        s.phi_2b2 = 0;
    return s;
}

} // namespace kaccoh
