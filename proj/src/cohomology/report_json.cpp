#include "kaccoh/cohomology/report_json.hpp"

#include <fmt/format.h>

#include "kaccoh/module/module_json.hpp"

namespace kaccoh {

nlohmann::json report_to_json(const CohomologyReport& r)
{
    nlohmann::json reps = nlohmann::json::array();
    for (const auto& c : r.representatives)
        reps.push_back({{"parity", bit(c.parity)},
                        {"rows", r.module_labels},
                        {"cols", r.algebra_labels},
                        {"matrix", matrix_to_json(c.values)}});
    const auto& d = r.dims;
    return {
        {"p", r.p},
        {"lambda", {r.lambda.a, r.lambda.b}},
        {"dims",
         {{"der_even", d.der_even},
          {"der_odd", d.der_odd},
          {"ider_even", d.ider_even},
          {"ider_odd", d.ider_odd},
          {"h1_even", d.h1_even},
          {"h1_odd", d.h1_odd},
          {"h1_total", d.h1_total}}},
        {"predicted", r.predicted},
        {"agrees", r.agrees},
        {"representatives", std::move(reps)},
    };
}

std::string report_to_text(const CohomologyReport& r)
{
    const auto& d = r.dims;
    std::string out = fmt::format("H^1(P~(2), K(lambda))  p={}  lambda=({},{})  dim K={}\n", r.p, r.lambda.a,
                                  r.lambda.b, r.module_labels.size());
    out += fmt::format("  Der   even={} odd={}\n", d.der_even, d.der_odd);
    out += fmt::format("  Ider  even={} odd={}\n", d.ider_even, d.ider_odd);
    out += fmt::format("  H1    even={} odd={} total={}\n", d.h1_even, d.h1_odd, d.h1_total);
    out += fmt::format("  predicted={} agrees={}\n", r.predicted, r.agrees ? "true" : "false");
    for (std::size_t i = 0; i < r.representatives.size(); ++i) {
        const auto& c = r.representatives[i];
        out += fmt::format("  representative {} ({}):", i, to_string(c.parity));
        for (std::size_t j = 0; j < c.values.cols(); ++j)
            for (std::size_t row = 0; row < c.values.rows(); ++row)
                if (auto v = c.values(row, j); v != 0)
                    out += fmt::format(" {}->{}*{}", r.algebra_labels[j], v, r.module_labels[row]);
        out += '\n';
    }
    return out;
}

} // namespace kaccoh
