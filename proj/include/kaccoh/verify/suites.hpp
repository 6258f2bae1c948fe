#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace kaccoh {

enum class Suite { algebra, module, weights, lemmas, all };

std::optional<Suite> parse_suite(std::string_view name);

/// Outcome of one named invariant over all of its cases.
struct CheckResult {
    std::string name;
    std::size_t cases = 0;
    std::size_t failed = 0;
    std::vector<std::string> counterexamples; // first few failures, with coordinates

    explicit CheckResult(std::string n) : name(std::move(n)) {}

    bool passed() const noexcept { return failed == 0; }
    void fail(std::string what);
};

std::vector<CheckResult> run_algebra_suite(std::int64_t p);
/// K(lambda) and M(lambda) representation laws, weight table, g_{+1} action.
std::vector<CheckResult> run_module_suite(std::int64_t p);
/// Eigenvalue-scan target-weight spaces against the closed-form case table.
std::vector<CheckResult> run_weights_suite(std::int64_t p);
/// Phi scope table and order iffs, then the derivation-level structure checks
/// over every (a, b).
std::vector<CheckResult> run_lemmas_suite(std::int64_t p);

std::vector<CheckResult> run_suite(Suite suite, std::int64_t p);

} // namespace kaccoh
