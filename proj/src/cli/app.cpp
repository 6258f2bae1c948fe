#include "kaccoh/cli/app.hpp"

#include <ostream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "kaccoh/algebra/algebra_json.hpp"
#include "kaccoh/algebra/p_tilde_2.hpp"
#include "kaccoh/cohomology/report_json.hpp"
#include "kaccoh/cohomology/scan.hpp"
#include "kaccoh/module/module_json.hpp"
#include "kaccoh/verify/suites.hpp"

namespace kaccoh::cli {

namespace {

struct Options {
    std::int64_t p = 5;
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::string format = "text";
    std::string out = "csv";
    int jobs = 0;
    std::string suite = "all";
    std::string what = "algebra";
};

int cmd_h1(const Options& o, std::ostream& out, std::ostream& err)
{
    try {
        const auto report = h1(build_kac_module(o.p, o.a, o.b));
        if (o.format == "json")
            out << report_to_json(report).dump(2) << '\n';
        else
            out << report_to_text(report);
        return kExitOk;
    } catch (const RouteDisagreement& e) {
        err << "internal solver disagreement\n" << e.what();
        return kExitVerificationFailure;
    }
}

int cmd_scan(const Options& o, std::ostream& out, std::ostream& err)
{
    try {
        const auto rows = scan(o.p, o.jobs);
        if (o.out == "json")
            out << scan_to_json(rows).dump(2) << '\n';
        else
            out << scan_to_csv(rows);
        const auto summary = summarize(o.p, rows);
        err << "p=" << o.p << ' ' << summary_line(summary) << '\n';
        for (const auto& r : summary.disagreements)
            err << fmt::format("finding: a={} b={} computed h1={} predicted {}\n", r.a, r.b, r.h1, r.predicted);
        return kExitOk;
    } catch (const RouteDisagreement& e) {
        err << "internal solver disagreement\n" << e.what();
        return kExitVerificationFailure;
    }
}

int cmd_check(const Options& o, std::ostream& out)
{
    const auto results = run_suite(*parse_suite(o.suite), o.p);
    std::size_t failed = 0;
    for (const auto& r : results) {
        if (r.passed()) {
            out << fmt::format("PASS  {} ({} cases)\n", r.name, r.cases);
            continue;
        }
        ++failed;
        out << fmt::format("FAIL  {} ({}/{} cases failed)\n", r.name, r.failed, r.cases);
        for (const auto& c : r.counterexamples)
            out << "        " << c << '\n';
    }
    out << fmt::format("suite {} at p={}: {} checks, {} failed\n", o.suite, o.p, results.size(), failed);
    return failed == 0 ? kExitOk : kExitVerificationFailure;
}

int cmd_export(const Options& o, std::ostream& out)
{
    if (o.what == "algebra")
        out << superalgebra_to_json(build_p_tilde_2(o.p)).dump(2) << '\n';
    else
        out << kac_module_to_json(build_kac_module(o.p, o.a, o.b)).dump(2) << '\n';
    return kExitOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"First cohomology of P~(2) with coefficients in Kac modules over F_p"};
    app.name("kaccoh");
    app.require_subcommand(1);
    Options o;

    auto add_p = [&](CLI::App* sub) { sub->add_option("--p", o.p, "odd prime modulus")->required(); };
    auto add_lambda = [&](CLI::App* sub, bool required) {
        auto* a = sub->add_option("--a", o.a, "lambda(h1), reduced mod p");
        auto* b = sub->add_option("--b", o.b, "lambda(h2), reduced mod p");
        if (required) {
            a->required();
            b->required();
        }
    };

    auto* h1_cmd = app.add_subcommand("h1", "dim H^1 and coset representatives for one lambda");
    add_p(h1_cmd);
    add_lambda(h1_cmd, true);
    h1_cmd->add_option("--format", o.format, "report format")->check(CLI::IsMember({"text", "json"}));

    auto* scan_cmd = app.add_subcommand("scan", "H^1 for every lambda in F_p^2");
    add_p(scan_cmd);
    scan_cmd->add_option("--out", o.out, "table format")->check(CLI::IsMember({"csv", "json"}));
    scan_cmd->add_option("--jobs", o.jobs, "worker threads (0 = all cores)")->check(CLI::NonNegativeNumber);

    auto* check_cmd = app.add_subcommand("check", "run invariant suites over every lambda");
    add_p(check_cmd);
    check_cmd->add_option("--suite", o.suite, "which invariants to run")->check(CLI::IsMember({"algebra", "module", "weights", "lemmas", "all"}));

    auto* export_cmd = app.add_subcommand("export", "print the algebra or a Kac module as JSON");
    add_p(export_cmd);
    add_lambda(export_cmd, false);
    export_cmd->add_option("--what", o.what, "object to export")->check(CLI::IsMember({"algebra", "module"}));

    std::vector<std::string> argv_storage{"kaccoh"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& s : argv_storage)
        argv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (!is_odd_prime(o.p) || o.p >= (1 << 16)) {
        err << "error: --p " << o.p << " is not an odd prime\n";
        return kExitUsage;
    }

    try {
        if (*h1_cmd)
            return cmd_h1(o, out, err);
        if (*scan_cmd)
            return cmd_scan(o, out, err);
        if (*check_cmd)
            return cmd_check(o, out);
        return cmd_export(o, out);
    } catch (const RepresentationError& e) {
        err << "error: " << e.what() << '\n';
        return kExitVerificationFailure;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

} // namespace kaccoh::cli
