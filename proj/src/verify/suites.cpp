#include "kaccoh/verify/suites.hpp"

#include <exception>
#include <memory>

#include <fmt/format.h>

#include "kaccoh/algebra/p_tilde_2.hpp"
#include "kaccoh/cohomology/checks.hpp"
#include "kaccoh/module/phi.hpp"

namespace kaccoh {

namespace {

constexpr std::size_t kMaxCounterexamples = 8;

std::string lam(std::int64_t p, HighestWeight l) { return fmt::format("p={} a={} b={}", p, l.a, l.b); }

// Calls body(lambda) for every lambda in F_p^2.
template <class F>
void for_each_lambda(std::int64_t p, F&& body)
{
    for (std::int64_t a = 0; a < p; ++a)
        for (std::int64_t b = 0; b < p; ++b)
            body(HighestWeight{static_cast<Residue>(a), static_cast<Residue>(b)});
}

} // namespace

void CheckResult::fail(std::string what)
{
    ++failed;
    if (counterexamples.size() < kMaxCounterexamples)
        counterexamples.push_back(std::move(what));
}

std::optional<Suite> parse_suite(std::string_view name)
{
    if (name == "algebra") return Suite::algebra;
    if (name == "module") return Suite::module;
    if (name == "weights") return Suite::weights;
    if (name == "lemmas") return Suite::lemmas;
    if (name == "all") return Suite::all;
    return std::nullopt;
}

std::vector<CheckResult> run_algebra_suite(std::int64_t p)
{
    using namespace ptilde2;
    const auto g = build_p_tilde_2(p);
    const auto& f = g.field();
    const auto realization = p_tilde_2_realization(f);
    std::vector<CheckResult> out;

    CheckResult axioms{"superalgebra axioms"};
    axioms.cases = 1;
    for (const auto& v : validate_superalgebra(g))
        axioms.fail(fmt::format("p={} {}: {}", p, to_string(v.kind), v.detail));
    out.push_back(std::move(axioms));

    CheckResult round_trip{"structure constants reproduce supercommutators"};
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            ++round_trip.cases;
            Supermatrix sum(f);
            for (std::size_t k = 0; k < dim; ++k)
                sum = sum + scaled(realization[k], g.structure(i, j, k));
            if (sum != supercommutator(realization[i], realization[j]))
                round_trip.fail(fmt::format("p={} [{},{}]", p, g.label(i), g.label(j)));
        }
    out.push_back(std::move(round_trip));

    CheckResult roots{"root table"};
    const auto decomposition = root_decomposition(g);
    const std::vector<std::pair<Weight, std::vector<std::size_t>>> expected = {
        {make_weight(f, 0, 0), {ptilde2::h1, ptilde2::h2}},       {make_weight(f, -2, 0), {e13}},   {make_weight(f, -1, -1), {e14_e23}},
        {make_weight(f, -1, 1), {alpha}},       {make_weight(f, 0, -2), {e24}},   {make_weight(f, 1, -1), {beta}},
        {make_weight(f, 1, 1), {gamma}},
    };
    roots.cases = expected.size() + 1;
    if (decomposition.size() != expected.size())
        roots.fail(fmt::format("p={} {} distinct roots, expected 7", p, decomposition.size()));
    for (const auto& [w, idx] : expected) {
        std::vector<FpVector> gens;
        for (auto i : idx) {
            FpVector e(dim, 0);
            e[i] = 1;
            gens.push_back(std::move(e));
        }
        auto it = decomposition.find(w);
        if (it == decomposition.end() || it->second != Subspace::span(f, dim, gens))
            roots.fail(fmt::format("p={} root {} has the wrong root space", p, to_string(w)));
    }
    out.push_back(std::move(roots));

    CheckResult abelian{"g_{+1} abelian, [gamma,gamma]=0"};
    const std::vector<std::size_t> odd_pairs = {e13, e24, e14_e23};
    for (auto x : odd_pairs)
        for (auto y : odd_pairs) {
            ++abelian.cases;
            if (!is_zero_vector(g.bracket(x, y)))
                abelian.fail(fmt::format("p={} [{},{}] != 0", p, g.label(x), g.label(y)));
        }
    ++abelian.cases;
    if (!is_zero_vector(g.bracket(gamma, gamma)))
        abelian.fail(fmt::format("p={} [gamma,gamma] != 0", p));
    out.push_back(std::move(abelian));
    return out;
}

std::vector<CheckResult> run_module_suite(std::int64_t p)
{
    using namespace ptilde2;
    const auto g = std::make_shared<const Superalgebra>(build_p_tilde_2(p));
    const auto g0 = std::make_shared<const Superalgebra>(degree_zero_part(*g));
    const auto& f = g->field();
    CheckResult kac_law{"K(lambda) representation law"};
    CheckResult simple_law{"M(lambda) representation and highest-weight law"};
    CheckResult weights{"K(lambda) weight table"};
    CheckResult plus_one{"g_{+1} kills 1(x)v_k"};

    for_each_lambda(p, [&](HighestWeight l) {
        ++kac_law.cases;
        ++simple_law.cases;
        ++weights.cases;
        ++plus_one.cases;
        try {
            const auto m = build_simple_module(g0, l);
            const FpVector v0 = [&] {
                FpVector e(m.dim(), 0);
                e[0] = 1;
                return e;
            }();
            const auto av0 = m.act(g0->require_index("alpha"), v0);
            const auto h1v0 = m.act(g0->require_index("h1"), v0);
            const auto h2v0 = m.act(g0->require_index("h2"), v0);
            if (!is_zero_vector(av0) || h1v0[0] != l.a || h2v0[0] != l.b || !is_zero_vector(std::span(h1v0).subspan(1)) ||
                !is_zero_vector(std::span(h2v0).subspan(1)))
                simple_law.fail(lam(p, l) + " v0 is not a highest-weight vector of weight lambda");
        } catch (const std::exception& e) {
            simple_law.fail(lam(p, l) + " " + e.what());
        }
        try {
            const auto k = build_kac_module(g, l);
            const auto bw = basis_weights(k.module());
            for (std::size_t i = 0; i <= k.top_index(); ++i) {
                const auto kk = static_cast<std::int64_t>(i);
                const std::int64_t a = l.a, b = l.b;
                if (bw[k.even_index(i)] != make_weight(f, a + kk, b - kk) ||
                    bw[k.odd_index(i)] != make_weight(f, a + kk + 1, b - kk + 1))
                    weights.fail(fmt::format("{} k={}", lam(p, l), i));
                FpVector e(k.dim(), 0);
                e[k.even_index(i)] = 1;
                for (auto x : {e13, e24, e14_e23})
                    if (!is_zero_vector(k.module().act(x, e)))
                        plus_one.fail(fmt::format("{} {} on 1(x)v{}", lam(p, l), g->label(x), i));
            }
        } catch (const std::exception& e) {
            kac_law.fail(lam(p, l) + " " + e.what());
        }
    });
    return {kac_law, simple_law, weights, plus_one};
}

std::vector<CheckResult> run_weights_suite(std::int64_t p)
{
    const auto g = std::make_shared<const Superalgebra>(build_p_tilde_2(p));
    const auto roots = p_tilde_2_roots(g->field());
    CheckResult table{"target-weight spaces match the case table"};
    for_each_lambda(p, [&](HighestWeight l) {
        const auto k = build_kac_module(g, l);
        for (const auto& w : roots) {
            ++table.cases;
            try {
                const auto predicted = target_weight_space_case_table(k, w);
                const auto actual = target_weight_space(k, w);
                if (!predicted || *predicted != actual)
                    table.fail(fmt::format("{} w={} computed dim {} predicted dim {}", lam(p, l), to_string(w),
                                           actual.dim(), predicted ? predicted->dim() : 0));
            } catch (const std::exception& e) {
                table.fail(fmt::format("{} w={} {}", lam(p, l), to_string(w), e.what()));
            }
        }
    });
    return {table};
}

std::vector<CheckResult> run_lemmas_suite(std::int64_t p)
{
    const auto g = std::make_shared<const Superalgebra>(build_p_tilde_2(p));
    const auto& f = g->field();
    std::vector<CheckResult> out;

    CheckResult scopes{"Phi scope table"};
    CheckResult iffs{"Phi order iffs"};
    for (std::int64_t b = 0; b < p; ++b) {
        ++scopes.cases;
        if (phi_scopes_direct(f, b) != phi_scopes_tabulated(f, b))
            scopes.fail(fmt::format("p={} b={}", p, b));
        for (const auto& s : phi_lemma_predicates(f, b)) {
            ++iffs.cases;
            if (!s.holds())
                iffs.fail(fmt::format("p={} b={} {}: lhs={} rhs={}", p, b, s.name, s.lhs, s.rhs));
        }
    }
    out.push_back(std::move(scopes));
    out.push_back(std::move(iffs));

    CheckResult reduction{"WDer + Ider = Der"};
    CheckResult routes{"Der/Ider and WDer routes agree"};
    CheckResult cartan{"weight-derivations send h1,h2 to invariants"};
    CheckResult named{"named cocycles are outer weight-derivations"};
    CheckResult span{"named cocycles span H^1"};
    for_each_lambda(p, [&](HighestWeight l) {
        ++reduction.cases;
        ++routes.cases;
        ++cartan.cases;
        ++span.cases;
        try {
            const auto k = build_kac_module(g, l);
            const auto h = compute_h1(k.module());
            for (int t = 0; t < 2; ++t) {
                if (!check_weight_reduction(h)[t])
                    reduction.fail(fmt::format("{} parity {}", lam(p, l), t));
                if (!check_route_agreement(h)[t])
                    routes.fail(fmt::format("{} parity {}", lam(p, l), t));
                if (!check_named_cocycles_span(k, h)[t])
                    span.fail(fmt::format("{} parity {}", lam(p, l), t));
            }
            for (const auto& v : check_cartan_images_annihilated(k.module(), h))
                cartan.fail(fmt::format("{} {} basis cochain {}: {} . phi({}) != 0", lam(p, l), to_string(v.parity),
                                        v.cochain, g->label(v.x), g->label(v.cartan)));
            for (const auto& c : check_named_cocycles(k, h)) {
                ++named.cases;
                if (!c.passed())
                    named.fail(fmt::format("{} {}: derivation={} weight={} outer={}", lam(p, l), c.name,
                                           c.derivation, c.weight_derivation, c.outer));
            }
        } catch (const std::exception& e) {
            routes.fail(lam(p, l) + " " + e.what());
        }
    });
    out.push_back(std::move(reduction));
    out.push_back(std::move(routes));
    out.push_back(std::move(cartan));
    out.push_back(std::move(named));
    out.push_back(std::move(span));
    return out;
}

std::vector<CheckResult> run_suite(Suite suite, std::int64_t p)
{
    switch (suite) {
    case Suite::algebra: return run_algebra_suite(p);
    case Suite::module: return run_module_suite(p);
    case Suite::weights: return run_weights_suite(p);
    case Suite::lemmas: return run_lemmas_suite(p);
    case Suite::all: break;
    }
    std::vector<CheckResult> out;
    for (auto s : {Suite::algebra, Suite::module, Suite::weights, Suite::lemmas}) {
        auto part = run_suite(s, p);
        out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    return out;
}

} // namespace kaccoh
