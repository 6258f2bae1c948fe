#include "kaccoh/module/kac_module.hpp"

#include <vector>

#include <fmt/format.h>

#include "kaccoh/algebra/p_tilde_2.hpp"
#include "kaccoh/module/phi.hpp"

namespace kaccoh {

namespace {

std::int64_t signed_value(Residue r) { return static_cast<std::int64_t>(r); }

// k(b - a - k + 1): the coefficient of alpha lowering v_k.
std::int64_t lowering_coefficient(HighestWeight lambda, std::int64_t k)
{
    return k * (signed_value(lambda.b) - signed_value(lambda.a) - k + 1);
}

std::string violation_summary(const GModule& m, const char* what)
{
    const auto bad = validate_representation(m);
    if (bad.empty())
        return {};
    return fmt::format("{}: {} representation-law violations, first: {}", what, bad.size(), bad.front().detail);
}

} // namespace

Superalgebra degree_zero_part(const Superalgebra& g)
{
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < g.dim(); ++i)
        if (g.zgrade(i) == 0)
            idx.push_back(i);
    return subalgebra(g, idx);
}

GModule build_simple_module(std::shared_ptr<const Superalgebra> g0, HighestWeight lambda)
{
    const auto& f = g0->field();
    const auto top = static_cast<std::size_t>(phi(f, signed_value(lambda.b) - signed_value(lambda.a)));
    const auto n = top + 1;
    const auto ih1 = g0->require_index("h1");
    const auto ih2 = g0->require_index("h2");
    const auto ial = g0->require_index("alpha");
    const auto ibe = g0->require_index("beta");

    std::vector<FpMatrix> action(g0->dim(), FpMatrix(f, n, n));
    std::vector<std::string> labels;
    for (std::size_t k = 0; k < n; ++k) {
        const auto kk = static_cast<std::int64_t>(k);
        labels.push_back(fmt::format("v{}", k));
        action[ih1].set(k, k, signed_value(lambda.a) + kk);
        action[ih2].set(k, k, signed_value(lambda.b) - kk);
        if (k > 0)
            action[ial].set(k - 1, k, lowering_coefficient(lambda, kk));
        if (k < top)
            action[ibe].set(k + 1, k, 1);
    }
    GModule m(std::move(g0), std::vector<Parity>(n, Parity::even), std::move(labels), std::move(action));
    if (auto msg = violation_summary(m, "M(lambda)"); !msg.empty())
        throw RepresentationError(msg);
    return m;
}

KacModule build_kac_module(std::shared_ptr<const Superalgebra> g, HighestWeight lambda)
{
    using namespace ptilde2;
    if (!has_p_tilde_2_basis(*g))
        throw std::invalid_argument("Kac modules are built for the P~(2) basis only");
    const auto& f = g->field();
    const std::int64_t a = lambda.a, b = lambda.b;
    const auto top = static_cast<std::size_t>(phi(f, b - a));
    const auto n = top + 1;
    auto even = [](std::size_t k) { return k; };
    auto odd = [n](std::size_t k) { return n + k; };

    std::vector<FpMatrix> act(dim, FpMatrix(f, 2 * n, 2 * n));
    std::vector<std::string> labels(2 * n);
    std::vector<Parity> parity(2 * n);
    for (std::size_t k = 0; k < n; ++k) {
        const auto kk = static_cast<std::int64_t>(k);
        labels[even(k)] = fmt::format("1@v{}", k);
        labels[odd(k)] = fmt::format("gamma@v{}", k);
        parity[even(k)] = Parity::even;
        parity[odd(k)] = Parity::odd;

        act[h1].set(even(k), even(k), a + kk);
        act[h2].set(even(k), even(k), b - kk);
        act[h1].set(odd(k), odd(k), a + kk + 1);
        act[h2].set(odd(k), odd(k), b - kk + 1);
        if (k > 0) {
            const auto c = lowering_coefficient(lambda, kk);
            act[alpha].set(even(k - 1), even(k), c);
            act[alpha].set(odd(k - 1), odd(k), c);
            act[e13].set(even(k - 1), odd(k), c);
        }
        if (k < top) {
            act[beta].set(even(k + 1), even(k), 1);
            act[beta].set(odd(k + 1), odd(k), 1);
            act[e24].set(even(k + 1), odd(k), -1);
        }
        act[gamma].set(odd(k), even(k), 1);
        act[e14_e23].set(even(k), odd(k), b - a - 2 * kk);
        // g_{+1} kills the even part; gamma kills the odd part.
    }

    GModule m(std::move(g), std::move(parity), std::move(labels), std::move(act));
    if (auto msg = violation_summary(m, "K(lambda)"); !msg.empty())
        throw RepresentationError(msg);
    return KacModule(std::move(m), lambda, top);
}

KacModule build_kac_module(std::int64_t p, std::int64_t a, std::int64_t b)
{
    auto g = std::make_shared<const Superalgebra>(build_p_tilde_2(p));
    const auto& f = g->field();
    return build_kac_module(g, {f.reduce(a), f.reduce(b)});
}

Subspace target_weight_space(const KacModule& k, Weight w) { return weight_space(k.module(), w); }

std::array<Weight, 7> p_tilde_2_roots(const PrimeField& f)
{
    return {make_weight(f, -2, 0), make_weight(f, -1, -1), make_weight(f, -1, 1), make_weight(f, 0, -2),
            make_weight(f, 1, -1), make_weight(f, 1, 1),   make_weight(f, 0, 0)};
}

std::optional<Subspace> target_weight_space_case_table(const KacModule& k, Weight w)
{
    const auto& f = k.field();
    const std::int64_t p = f.modulus();
    const std::int64_t b = k.lambda().b;
    const Residue sum = f.add(k.lambda().a, k.lambda().b);
    const auto pb = phi(f, b);

    auto in = [&](std::int64_t lo, std::int64_t hi, std::initializer_list<std::int64_t> extra = {}) {
        if (lo <= pb && pb <= hi)
            return true;
        for (auto e : extra)
            if (pb == e)
                return true;
        return false;
    };
    auto sum_is = [&](std::int64_t s) { return sum == f.reduce(s); };

    // Each branch: (condition on Phi(b) and a+b, parity, shift s) -> span of 1(x)v_{Phi(b+s)} or gamma(x)v_{Phi(b+s)}.
    struct Branch {
        bool applies;
        Parity parity;
        std::int64_t shift;
    };
    std::vector<Branch> branches;
    const auto r = p_tilde_2_roots(f);
    const auto m3 = (p - 3) / 2, m1 = (p - 1) / 2, m5 = (p - 5) / 2, p1 = (p + 1) / 2;
    if (w == r[0]) { // (-2, 0)
        branches = {{in(0, m3, {p - 2}) && sum_is(-2), Parity::even, 0},
                    {in(0, m5, {p - 1, p - 3}) && sum_is(-4), Parity::odd, 1}};
    } else if (w == r[1]) { // (-1, -1)
        branches = {{in(0, m3, {p - 1}) && sum_is(-2), Parity::even, 1},
                    {in(0, m5, {p - 1, p - 2}) && sum_is(-4), Parity::odd, 2}};
    } else if (w == r[2]) { // (-1, 1)
        branches = {{in(1, m1, {p - 1}) && sum_is(0), Parity::even, -1},
                    {in(0, m3, {p - 2}) && sum_is(-2), Parity::odd, 0}};
    } else if (w == r[3]) { // (0, -2)
        branches = {{in(0, m3, {p - 2}) && sum_is(-2), Parity::even, 2},
                    {in(0, m5, {p - 1, p - 3}) && sum_is(-4), Parity::odd, 3}};
    } else if (w == r[4]) { // (1, -1)
        branches = {{in(1, m1, {p - 1}) && sum_is(0), Parity::even, 1},
                    {in(0, m3, {p - 2}) && sum_is(-2), Parity::odd, 2}};
    } else if (w == r[5]) { // (1, 1)
        branches = {{in(1, p1) && sum_is(2), Parity::even, -1}, {in(0, m1) && sum_is(0), Parity::odd, 0}};
    } else if (w == r[6]) { // (0, 0)
        branches = {{in(0, m1) && sum_is(0), Parity::even, 0}, {in(0, m3, {p - 1}) && sum_is(-2), Parity::odd, 1}};
    } else {
        return std::nullopt;
    }

    std::vector<FpVector> gens;
    for (const auto& br : branches) {
        if (!br.applies)
            continue;
        const auto idx = static_cast<std::size_t>(phi(f, b + br.shift));
        if (idx > k.top_index())
            throw std::logic_error(fmt::format("case table names v{} beyond the top index {}", idx, k.top_index()));
        FpVector e(k.dim(), 0);
        e[br.parity == Parity::even ? k.even_index(idx) : k.odd_index(idx)] = 1;
        gens.push_back(std::move(e));
    }
    return Subspace::span(f, k.dim(), gens);
}

} // namespace kaccoh
