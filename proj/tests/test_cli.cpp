#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "kaccoh/algebra/algebra_json.hpp"
#include "kaccoh/algebra/p_tilde_2.hpp"
#include "kaccoh/cli/app.hpp"
#include "kaccoh/cohomology/scan.hpp"
#include "kaccoh/module/kac_module.hpp"
#include "kaccoh/module/module_json.hpp"

using namespace kaccoh;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("h1 command")
{
    auto r = run({"h1", "--p", "5", "--a", "0", "--b", "3", "--format", "json"});
    REQUIRE(r.code == cli::kExitOk);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["dims"]["h1_total"] == 2);
    CHECK(doc["agrees"] == true);
    CHECK(doc["representatives"].size() == 2);

    r = run({"h1", "--p", "5", "--a", "1", "--b", "1", "--format", "json"});
    REQUIRE(r.code == cli::kExitOk);
    CHECK(nlohmann::json::parse(r.out)["dims"]["h1_total"] == 0);

    r = run({"h1", "--p", "5", "--a", "4", "--b", "4"});
    CHECK(r.code == cli::kExitOk);
    CHECK(r.out.find("total=1") != std::string::npos);

    // a and b are reduced mod p
    const auto shifted = run({"h1", "--p", "5", "--a", "-5", "--b", "8", "--format", "json"});
    CHECK(nlohmann::json::parse(shifted.out)["lambda"] == nlohmann::json::array({0, 3}));
}

TEST_CASE("usage errors")
{
    CHECK(run({"h1", "--p", "4", "--a", "0", "--b", "0"}).code == cli::kExitUsage);
    CHECK(run({"h1", "--p", "2", "--a", "0", "--b", "0"}).code == cli::kExitUsage);
    CHECK(run({"scan", "--p", "9"}).code == cli::kExitUsage);
    CHECK(run({"h1", "--p", "5"}).code == cli::kExitUsage);
    CHECK(run({"h1", "--p", "5", "--a", "0", "--b", "0", "--format", "xml"}).code == cli::kExitUsage);
    CHECK(run({"frobnicate"}).code == cli::kExitUsage);
    CHECK(run({}).code == cli::kExitUsage);
    CHECK(run({"scan", "--p", "5", "--jobs", "-1"}).code == cli::kExitUsage);
    CHECK(run({"--help"}).code == cli::kExitOk);
}

TEST_CASE("scan command")
{
    const auto csv = run({"scan", "--p", "5", "--out", "csv"});
    REQUIRE(csv.code == cli::kExitOk);
    const auto json = run({"scan", "--p", "5", "--out", "json"});
    REQUIRE(json.code == cli::kExitOk);
    const auto rows = scan_from_csv(csv.out);
    CHECK(rows.size() == 25);
    CHECK(rows == scan_from_json(nlohmann::json::parse(json.out)));
    CHECK(csv.err.find("rows=25") != std::string::npos);
    CHECK(csv.err.find("disagreements=0") != std::string::npos);

    for (const char* jobs : {"1", "2", "4"}) {
        CHECK(run({"scan", "--p", "7", "--jobs", jobs}).out == run({"scan", "--p", "7", "--jobs", "1"}).out);
        CHECK(run({"scan", "--p", "5", "--out", "json", "--jobs", jobs}).out == json.out);
    }
}

TEST_CASE("check command")
{
    for (const char* suite : {"algebra", "module", "weights", "lemmas", "all"}) {
        const auto r = run({"check", "--p", "5", "--suite", suite});
        INFO(r.out);
        CHECK(r.code == cli::kExitOk);
        CHECK(r.out.find("FAIL") == std::string::npos);
    }
    const auto lemmas = run({"check", "--p", "5", "--suite", "lemmas"});
    CHECK(lemmas.out.find("Phi order iffs (50 cases)") != std::string::npos);
    const auto weights = run({"check", "--p", "7", "--suite", "weights"});
    CHECK(weights.out.find("(343 cases)") != std::string::npos);
}

TEST_CASE("export command")
{
    auto r = run({"export", "--p", "5", "--what", "algebra"});
    REQUIRE(r.code == cli::kExitOk);
    const auto alg = nlohmann::json::parse(r.out);
    CHECK(alg["labels"].size() == 8);
    CHECK(superalgebra_from_json(alg) == build_p_tilde_2(5));

    r = run({"export", "--p", "5", "--a", "0", "--b", "3", "--what", "module"});
    REQUIRE(r.code == cli::kExitOk);
    const auto mod = nlohmann::json::parse(r.out);
    CHECK(mod["actions"].size() == 8);
    for (const auto& a : mod["actions"]) {
        CHECK(a.size() == 8);
        CHECK(a[0].size() == 8);
    }
    const auto k = build_kac_module(5, 0, 3);
    CHECK(module_from_json(mod, k.module().algebra_ptr()) == k.module());
}
