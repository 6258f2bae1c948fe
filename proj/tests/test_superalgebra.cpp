#include <doctest.h>

#include <algorithm>

#include "kaccoh/algebra/algebra_json.hpp"
#include "kaccoh/algebra/p_tilde_2.hpp"
#include "kaccoh/algebra/superalgebra.hpp"
#include "kaccoh/algebra/supermatrix.hpp"
#include "support/oracles.hpp"

using namespace kaccoh;
namespace P = kaccoh::ptilde2;

namespace {

Supermatrix from_ints(const PrimeField& f, const oracle::IntMatrix4& m)
{
    Supermatrix s(f);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            s(i, j) = f.reduce(m[i][j]);
    return s;
}

FpVector basis_vector(std::size_t i, Residue c = 1)
{
    FpVector v(P::dim, 0);
    v[i] = c;
    return v;
}

bool has_kind(const std::vector<AxiomViolation>& vs, AxiomViolation::Kind k)
{
    return std::ranges::any_of(vs, [k](const auto& v) { return v.kind == k; });
}

} // namespace

TEST_CASE("supercommutator matches the integer oracle")
{
    const PrimeField f(5);
    using namespace oracle;
    // [alpha, beta] = h2 - h1
    CHECK(supercommutator(from_ints(f, alpha()), from_ints(f, beta())) == from_ints(f, h2() - h1()));
    CHECK(super_bracket(alpha(), 0, beta(), 0) == h2() - h1());
    // [gamma, gamma] = 0
    CHECK(supercommutator(from_ints(f, gamma()), from_ints(f, gamma())) == Supermatrix(f));
    CHECK(super_bracket(gamma(), 1, gamma(), 1) == IntMatrix4{});
    // [e13, gamma] = alpha
    CHECK(supercommutator(from_ints(f, unit(1, 3)), from_ints(f, gamma())) == from_ints(f, alpha()));
    CHECK(super_bracket(unit(1, 3), 1, gamma(), 1) == alpha());
}

TEST_CASE("supercommutator rejects inhomogeneous input")
{
    const PrimeField f(5);
    const auto mixed = Supermatrix::unit(f, 1, 1) + Supermatrix::unit(f, 1, 3);
    CHECK_FALSE(mixed.parity().has_value());
    CHECK_THROWS_AS(supercommutator(mixed, Supermatrix::unit(f, 2, 2)), std::invalid_argument);
}

TEST_CASE("every structure constant agrees with the integer oracle")
{
    using namespace oracle;
    const std::array<IntMatrix4, 8> m = {gamma(),   h1(),      h2(),      alpha(),
                                         beta(),    unit(1, 3), unit(2, 4), unit(1, 4) + unit(2, 3)};
    const std::array<int, 8> par = {1, 0, 0, 0, 0, 1, 1, 1};
    for (std::int64_t p : {3, 5, 7, 11, 13}) {
        const auto g = build_p_tilde_2(p);
        for (std::size_t i = 0; i < 8; ++i)
            for (std::size_t j = 0; j < 8; ++j) {
                IntMatrix4 sum{};
                for (std::size_t k = 0; k < 8; ++k) {
                    const auto c = g.field().centered(g.structure(i, j, k));
                    for (int r = 0; r < 4; ++r)
                        for (int s = 0; s < 4; ++s)
                            sum[r][s] += c * m[k][r][s];
                }
                const auto want = super_bracket(m[i], par[i], m[j], par[j]);
                for (int r = 0; r < 4; ++r)
                    for (int s = 0; s < 4; ++s)
                        CHECK(mod(sum[r][s] - want[r][s], p) == 0);
            }
    }
}

TEST_CASE("build_p_tilde_2 shape and brackets")
{
    const auto g = build_p_tilde_2(5);
    CHECK(g.dim() == 8);
    CHECK(std::ranges::count(g.parities(), Parity::even) == 4);
    CHECK(std::ranges::count(g.parities(), Parity::odd) == 4);
    CHECK(g.zgrades() == std::vector<int>{-1, 0, 0, 0, 0, 1, 1, 1});
    CHECK(g.cartan() == std::vector<std::size_t>{P::h1, P::h2});
    CHECK(g.bracket(P::h1, P::alpha) == basis_vector(P::alpha, 4));
    CHECK(g.bracket(P::h1, P::gamma) == basis_vector(P::gamma));
    CHECK(g.bracket(P::h2, P::gamma) == basis_vector(P::gamma));
    CHECK(has_p_tilde_2_basis(g));
    CHECK_THROWS_AS(build_p_tilde_2(9), std::invalid_argument);
}

TEST_CASE("axioms hold for p up to 13")
{
    for (std::int64_t p : {3, 5, 7, 11, 13})
        CHECK(validate_superalgebra(build_p_tilde_2(p)).empty());
}

TEST_CASE("planted defects are reported")
{
    const auto g = build_p_tilde_2(5);
    const PrimeField f = g.field();
    const auto at = [](std::size_t i, std::size_t j, std::size_t k) { return (i * 8 + j) * 8 + k; };

    SUBCASE("symmetric bracket on an even pair")
    {
        auto c = g.structure();
        c[at(P::alpha, P::h1, P::alpha)] = c[at(P::h1, P::alpha, P::alpha)];
        const Superalgebra bad(f, g.labels(), g.parities(), g.zgrades(), c, g.cartan());
        CHECK(has_kind(validate_superalgebra(bad), AxiomViolation::Kind::skew_symmetry));
    }
    SUBCASE("even times even lands in the odd part")
    {
        auto c = g.structure();
        c[at(P::h1, P::h2, P::gamma)] = 1;
        c[at(P::h2, P::h1, P::gamma)] = f.neg(1);
        const Superalgebra bad(f, g.labels(), g.parities(), g.zgrades(), c, g.cartan());
        CHECK(has_kind(validate_superalgebra(bad), AxiomViolation::Kind::parity));
    }
    SUBCASE("Jacobi failure")
    {
        auto c = g.structure();
        c[at(P::alpha, P::beta, P::h1)] = 0; // [alpha,beta] = h2 only
        c[at(P::beta, P::alpha, P::h1)] = 0;
        const Superalgebra bad(f, g.labels(), g.parities(), g.zgrades(), c, g.cartan());
        CHECK(has_kind(validate_superalgebra(bad), AxiomViolation::Kind::jacobi));
    }
}

TEST_CASE("root decomposition at p=7")
{
    const auto g = build_p_tilde_2(7);
    const PrimeField& f = g.field();
    const auto roots = root_decomposition(g);
    CHECK(roots.size() == 7);
    const auto span_of = [&](std::vector<std::size_t> idx) {
        std::vector<FpVector> gens;
        for (auto i : idx)
            gens.push_back(basis_vector(i));
        return Subspace::span(f, 8, gens);
    };
    CHECK(roots.at(make_weight(f, 0, 0)) == span_of({P::h1, P::h2}));
    CHECK(roots.at(make_weight(f, 5, 0)) == span_of({P::e13}));
    CHECK(roots.at(make_weight(f, 1, 1)) == span_of({P::gamma}));
    CHECK(roots.at(make_weight(f, -1, 1)) == span_of({P::alpha}));
    CHECK(roots.at(make_weight(f, 1, -1)) == span_of({P::beta}));
    CHECK(roots.at(make_weight(f, 0, -2)) == span_of({P::e24}));
    CHECK(roots.at(make_weight(f, -1, -1)) == span_of({P::e14_e23}));
    std::size_t total = 0;
    for (const auto& [w, s] : roots)
        total += s.dim();
    CHECK(total == 8);
}

TEST_CASE("subalgebra closure")
{
    const auto g = build_p_tilde_2(5);
    const std::array<std::size_t, 4> g0{P::h1, P::h2, P::alpha, P::beta};
    const auto sub = subalgebra(g, g0);
    CHECK(sub.dim() == 4);
    CHECK(validate_superalgebra(sub).empty());
    const std::array<std::size_t, 2> open{P::alpha, P::beta};
    CHECK_THROWS_AS(subalgebra(g, open), std::invalid_argument);
}

TEST_CASE("JSON round trip and invalid import")
{
    const auto g = build_p_tilde_2(5);
    const auto doc = superalgebra_to_json(g);
    CHECK(doc["labels"].size() == 8);
    CHECK(doc["structure"].size() == 8);
    CHECK(doc["structure"][0].size() == 8);
    CHECK(doc["structure"][0][0].size() == 8);
    CHECK(superalgebra_from_json(doc) == g);

    auto missing = doc;
    missing.erase("parity");
    CHECK_THROWS_AS(superalgebra_from_json(missing), std::invalid_argument);

    auto composite = doc;
    composite["p"] = 9;
    CHECK_THROWS_AS(superalgebra_from_json(composite), std::invalid_argument);

    auto ragged = doc;
    ragged["structure"][3].erase(0);
    CHECK_THROWS_AS(superalgebra_from_json(ragged), std::invalid_argument);

    auto broken = doc;
    broken["structure"][P::alpha][P::beta][P::h1] = 0;
    broken["structure"][P::beta][P::alpha][P::h1] = 0;
    CHECK_THROWS_AS(superalgebra_from_json(broken), std::invalid_argument);
}
