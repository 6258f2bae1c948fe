#include <doctest.h>

#include <random>

#include "kaccoh/algebra/p_tilde_2.hpp"
#include "kaccoh/cohomology/checks.hpp"
#include "kaccoh/cohomology/cohomology.hpp"
#include "kaccoh/cohomology/derivations.hpp"
#include "kaccoh/cohomology/named_cocycles.hpp"
#include "kaccoh/cohomology/scan.hpp"
#include "kaccoh/module/kac_module.hpp"
#include "support/oracles.hpp"

using namespace kaccoh;
namespace P = kaccoh::ptilde2;

namespace {

FpVector unit_vector(std::size_t n, std::size_t i)
{
    FpVector v(n, 0);
    v[i] = 1;
    return v;
}

// phi([x_i,x_j]) - (-1)^{|phi||x_i|} x_i phi(x_j) + (-1)^{|x_j|(|phi|+|x_i|)} x_j phi(x_i),
// evaluated on integers for every pair. True iff all of them vanish mod p.
bool satisfies_identity(const GModule& m, const Cochain& phi)
{
    const auto& g = m.algebra();
    const std::int64_t p = g.field().modulus();
    const int pp = bit(phi.parity);
    for (std::size_t i = 0; i < g.dim(); ++i)
        for (std::size_t j = 0; j < g.dim(); ++j) {
            const int pi = bit(g.parity(i)), pj = bit(g.parity(j));
            const std::int64_t s1 = (pp & pi) ? -1 : 1;
            const std::int64_t s2 = (pj & (pp ^ pi)) ? -1 : 1;
            for (std::size_t r = 0; r < m.dim(); ++r) {
                std::int64_t acc = 0;
                for (std::size_t k = 0; k < g.dim(); ++k)
                    acc += static_cast<std::int64_t>(g.structure(i, j, k)) * phi.values(r, k);
                for (std::size_t c = 0; c < m.dim(); ++c) {
                    acc -= s1 * static_cast<std::int64_t>(m.action(i)(r, c)) * phi.values(c, j);
                    acc += s2 * static_cast<std::int64_t>(m.action(j)(r, c)) * phi.values(c, i);
                }
                if (oracle::mod(acc, p) != 0)
                    return false;
            }
        }
    return true;
}

Cochain named(const KacModule& k, std::string_view name)
{
    for (auto& c : named_cocycles(k))
        if (c.name == name)
            return c.cochain;
    FAIL("no cocycle named " << name);
    return zero_cochain(k.module(), Parity::even);
}

} // namespace

TEST_CASE("cochain layout round trip")
{
    const auto k = build_kac_module(5, 0, 3);
    for (auto par : {Parity::even, Parity::odd}) {
        const CochainLayout layout(k.module(), par);
        CHECK(layout.size() == k.dim() * 8 / 2);
        std::vector<Residue> coords(layout.size());
        for (std::size_t i = 0; i < coords.size(); ++i)
            coords[i] = static_cast<Residue>(i % 5);
        const auto phi = layout.unflatten(k.field(), coords);
        CHECK(is_parity_coherent(k.module(), phi));
        CHECK(layout.flatten(phi) == coords);
    }
    auto bad = zero_cochain(k.module(), Parity::even);
    bad.values(k.odd_index(0), P::h1) = 1; // even map sending h1 to an odd vector
    CHECK_FALSE(is_parity_coherent(k.module(), bad));
    CHECK_THROWS(CochainLayout(k.module(), Parity::even).flatten(bad));
}

TEST_CASE("residual examples")
{
    const auto k = build_kac_module(5, 4, 4);
    const auto& m = k.module();
    const auto z = zero_cochain(m, Parity::odd);
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j)
            CHECK(is_zero_vector(derivation_identity_residual(m, z, i, j)));

    for (std::size_t v = 0; v < k.dim(); ++v)
        CHECK(is_derivation(m, inner_derivation(m, unit_vector(k.dim(), v))));

    const auto phi3 = named(k, "phi3");
    CHECK(is_zero_vector(derivation_identity_residual(m, phi3, P::alpha, P::beta)));
    CHECK(is_derivation(m, phi3));
    CHECK(satisfies_identity(m, phi3));

    auto broken = phi3;
    broken.values(k.odd_index(0), P::h2) = 0;
    CHECK_FALSE(is_derivation(m, broken));
    CHECK_FALSE(satisfies_identity(m, broken));
}

TEST_CASE("inner derivation examples")
{
    {
        const auto k = build_kac_module(5, 3, 2);
        const auto d = inner_derivation(k.module(), unit_vector(k.dim(), k.even_index(2)));
        CHECK(d.parity == Parity::even);
        CHECK(d.value(P::beta) == unit_vector(k.dim(), k.even_index(3)));
        CHECK(d.value(P::alpha) == unit_vector(k.dim(), k.even_index(1)));
        CHECK(inner_derivation(k.module(), FpVector(k.dim(), 0)) == zero_cochain(k.module(), Parity::even));
    }
    {
        const auto k = build_kac_module(5, 4, 4);
        const auto d = inner_derivation(k.module(), unit_vector(k.dim(), k.odd_index(0)));
        CHECK(d.parity == Parity::odd);
        CHECK(is_zero_vector(d.value(P::h1)));
        FpVector mixed(k.dim(), 0);
        mixed[k.odd_index(0)] = 1;
        mixed[k.even_index(0)] = 1;
        CHECK_THROWS_AS(inner_derivation(k.module(), mixed), std::invalid_argument);
    }
}

TEST_CASE("odd inner derivation signs")
{
    const auto k = build_kac_module(7, 0, 3);
    const auto& m = k.module();
    const auto v = unit_vector(k.dim(), k.odd_index(1));
    const auto d = inner_derivation(m, v);
    const PrimeField& f = k.field();
    for (std::size_t x = 0; x < 8; ++x) {
        auto want = m.act(x, v);
        if (m.algebra().parity(x) == Parity::odd)
            for (auto& c : want)
                c = f.neg(c);
        CHECK(d.value(x) == want);
    }
}

TEST_CASE("derivation spaces")
{
    for (std::int64_t p : {3, 5, 7})
        for (std::int64_t a = 0; a < p; ++a)
            for (std::int64_t b = 0; b < p; ++b) {
                const auto k = build_kac_module(p, a, b);
                const auto& m = k.module();
                for (auto par : {Parity::even, Parity::odd}) {
                    const auto der = derivation_space(m, par);
                    const auto wder = weight_derivation_space(m, par);
                    const auto ider = inner_space(m, der.layout);
                    CHECK(is_subspace_of(wder.space, der.space));
                    CHECK(is_subspace_of(ider, der.space));
                    for (const auto& c : der.basis())
                        CHECK(satisfies_identity(m, c));
                    CHECK(derivation_system(m, der.layout) == derivation_system_serial(m, der.layout));

                    const auto s = oracle::mod(a + b, p);
                    if (s != 0 && s != 2 && s != p - 2 && s != p - 4)
                        CHECK(wder.dim() == 0);
                }
            }
}

TEST_CASE("property: random combinations of derivations are derivations")
{
    std::mt19937_64 rng(2024);
    for (std::int64_t p : {3, 5, 7}) {
        const PrimeField f(p);
        std::uniform_int_distribution<Residue> coef(0, f.modulus() - 1);
        std::uniform_int_distribution<std::int64_t> pick(0, p - 1);
        for (int trial = 0; trial < 40; ++trial) {
            const auto k = build_kac_module(p, pick(rng), pick(rng));
            for (auto par : {Parity::even, Parity::odd}) {
                const auto der = derivation_space(k.module(), par);
                FpVector coords(der.layout.size(), 0);
                for (std::size_t i = 0; i < der.dim(); ++i) {
                    const auto c = coef(rng);
                    const auto bv = der.space.basis_vector(i);
                    for (std::size_t t = 0; t < coords.size(); ++t)
                        coords[t] = f.add(coords[t], f.mul(c, bv[t]));
                }
                const auto phi = der.layout.unflatten(f, coords);
                CHECK(is_derivation(k.module(), phi));
                CHECK(satisfies_identity(k.module(), phi));
            }
        }
    }
}

TEST_CASE("dim Ider = dim K - dim invariants")
{
    for (std::int64_t p : {3, 5, 7})
        for (std::int64_t a = 0; a < p; ++a)
            for (std::int64_t b = 0; b < p; ++b) {
                const auto k = build_kac_module(p, a, b);
                const auto h = compute_h1(k.module());
                CHECK(h.dims.ider_even + h.dims.ider_odd == k.dim() - module_invariants(k.module()).dim());
            }
}

TEST_CASE("named cocycles")
{
    SUBCASE("phi1 and phi2")
    {
        const auto k = build_kac_module(5, 0, 3);
        const auto c = named_cocycles(k);
        REQUIRE(c.size() == 2);
        CHECK(c[0].name == "phi1");
        CHECK(c[1].name == "phi2");
        CHECK(c[0].cochain.parity == Parity::odd);
        CHECK(c[1].cochain.parity == Parity::odd);
        const auto der = derivation_space(k.module(), Parity::odd);
        const auto v1 = der.layout.flatten(c[0].cochain);
        const auto v2 = der.layout.flatten(c[1].cochain);
        CHECK(der.space.contains(v1));
        CHECK(der.space.contains(v2));
        CHECK(Subspace::span(k.field(), v1.size(), std::vector<FpVector>{v1, v2}).dim() == 2);
    }
    SUBCASE("phi3")
    {
        const auto c = named_cocycles(build_kac_module(5, 4, 4));
        REQUIRE(c.size() == 1);
        CHECK(c[0].name == "phi3");
        CHECK(c[0].cochain.parity == Parity::odd);
    }
    SUBCASE("phi4")
    {
        const auto c = named_cocycles(build_kac_module(5, 2, 4));
        REQUIRE(c.size() == 1);
        CHECK(c[0].name == "phi4");
        CHECK(c[0].cochain.parity == Parity::even);
    }
    SUBCASE("outside every regime")
    {
        CHECK_FALSE(has_named_cocycles(PrimeField(5), {1, 1}));
        CHECK_THROWS_AS(named_cocycles(build_kac_module(5, 1, 1)), std::domain_error);
    }
    SUBCASE("all regimes up to p=11")
    {
        for (std::int64_t p : {3, 5, 7, 11})
            for (std::int64_t a = 0; a < p; ++a)
                for (std::int64_t b = 0; b < p; ++b) {
                    const PrimeField f(p);
                    if (!has_named_cocycles(f, {f.reduce(a), f.reduce(b)}))
                        continue;
                    const auto k = build_kac_module(p, a, b);
                    const auto h = compute_h1(k.module());
                    for (const auto& chk : check_named_cocycles(k, h)) {
                        INFO("p=" << p << " a=" << a << " b=" << b << " " << chk.name);
                        CHECK(chk.passed());
                    }
                    for (const auto& c : named_cocycles(k))
                        CHECK(satisfies_identity(k.module(), c.cochain));
                }
    }
}

TEST_CASE("h1 spot values")
{
    CHECK(h1(build_kac_module(5, 0, 3)).dims.h1_total == 2);
    CHECK(h1(build_kac_module(5, 4, 4)).dims.h1_total == 1);
    CHECK(h1(build_kac_module(5, 2, 4)).dims.h1_total == 1);
    CHECK(h1(build_kac_module(5, 2, 0)).dims.h1_total == 0);
    CHECK(h1(build_kac_module(5, 1, 1)).dims.h1_total == 0);

    const auto k = build_kac_module(5, 0, 3);
    const auto r = h1(k);
    CHECK(r.agrees);
    CHECK(r.dims.h1_odd == 2);
    REQUIRE(r.representatives.size() == 2);
    for (const auto& c : r.representatives)
        CHECK(satisfies_identity(k.module(), c));
}

TEST_CASE("predictor examples")
{
    const PrimeField f(5);
    CHECK(predict_h1(f, {0, 3}) == 2);
    CHECK(predict_h1(f, {2, 4}) == 1);
    CHECK(predict_h1(f, {4, 4}) == 1);
    CHECK(predict_h1(f, {1, 1}) == 0);
    for (std::int64_t p : {3, 5, 7, 11, 13}) {
        const PrimeField fp(p);
        for (Residue a = 0; a < p; ++a)
            for (Residue b = 0; b < p; ++b) {
                CHECK(predict_h1(fp, {a, b}) == oracle::expected_h1(p, a, b));
                CHECK(matching_predictor_clauses(fp, {a, b}).size() <= 1);
            }
    }
}

TEST_CASE("internal checks over the scan grid")
{
    for (std::int64_t p : {3, 5, 7})
        for (std::int64_t a = 0; a < p; ++a)
            for (std::int64_t b = 0; b < p; ++b) {
                const auto k = build_kac_module(p, a, b);
                const auto h = compute_h1(k.module());
                INFO("p=" << p << " a=" << a << " b=" << b);
                CHECK(check_cartan_images_annihilated(k.module(), h).empty());
                CHECK(check_weight_reduction(h) == std::array<bool, 2>{true, true});
                CHECK(check_route_agreement(h) == std::array<bool, 2>{true, true});
                CHECK(check_named_cocycles_span(k, h) == std::array<bool, 2>{true, true});
                CHECK(h.representatives().size() == h.dims.h1_total);
            }
}

TEST_CASE("scan")
{
    for (std::int64_t p : {3, 5, 7}) {
        const auto serial = scan_serial(p);
        CHECK(serial.size() == static_cast<std::size_t>(p * p));
        for (int jobs : {1, 2, 3, 0})
            CHECK(scan(p, jobs) == serial);

        std::size_t dim_sum = 0;
        for (const auto& r : serial) {
            dim_sum += r.dim_K;
            CHECK(r.agrees);
        }
        CHECK(dim_sum == static_cast<std::size_t>(p * p * (p + 1)));

        CHECK(scan_from_csv(scan_to_csv(serial)) == serial);
        CHECK(scan_from_json(scan_to_json(serial)) == serial);
        CHECK(scan_from_csv(scan_to_csv(serial)) == scan_from_json(scan_to_json(serial)));
    }

    const auto rows = scan(5);
    std::vector<ScanRow> twos;
    for (const auto& r : rows)
        if (r.h1 == 2)
            twos.push_back(r);
    REQUIRE(twos.size() == 1);
    CHECK(twos[0].a == 0);
    CHECK(twos[0].b == 3);

    const auto summary = summarize(5, rows);
    CHECK(summary.rows == 25);
    CHECK(summary.disagreements.empty());
    CHECK(summary.clause_overlaps == 0);
    CHECK(summary.h1_counts.at(0) == 22);
    CHECK(summary.h1_counts.at(1) == 2);
    CHECK(summary.h1_counts.at(2) == 1);
}

TEST_CASE("malformed scan input")
{
    CHECK_THROWS(scan_from_csv("a,b\n1,2\n"));
    CHECK_THROWS(scan_from_json(nlohmann::json::object()));
}
