#include "kaccoh/algebra/algebra_json.hpp"

#include <stdexcept>

#include <fmt/format.h>

namespace kaccoh {

nlohmann::json superalgebra_to_json(const Superalgebra& g)
{
    const auto n = g.dim();
    nlohmann::json structure = nlohmann::json::array();
    for (std::size_t i = 0; i < n; ++i) {
        nlohmann::json plane = nlohmann::json::array();
        for (std::size_t j = 0; j < n; ++j)
            plane.push_back(g.bracket(i, j));
        structure.push_back(std::move(plane));
    }
    std::vector<int> parity;
    for (auto par : g.parities())
        parity.push_back(bit(par));
    return {
        {"p", g.field().modulus()},
        {"labels", g.labels()},
        {"parity", parity},
        {"zgrade", g.zgrades()},
        {"structure", std::move(structure)},
        {"cartan", g.cartan()},
    };
}

Superalgebra superalgebra_from_json(const nlohmann::json& doc)
{
    try {
        const PrimeField f(doc.at("p").get<std::int64_t>());
        auto labels = doc.at("labels").get<std::vector<std::string>>();
        const auto n = labels.size();
        std::vector<Parity> parity;
        for (int b : doc.at("parity").get<std::vector<int>>()) {
            if (b != 0 && b != 1)
                throw std::invalid_argument("parity entries must be 0 or 1");
            parity.push_back(static_cast<Parity>(b));
        }
        auto zgrade = doc.at("zgrade").get<std::vector<int>>();
        const auto& st = doc.at("structure");
        if (!st.is_array() || st.size() != n)
            throw std::invalid_argument("structure must be a dim x dim x dim array");
        std::vector<Residue> structure;
        structure.reserve(n * n * n);
        for (const auto& plane : st) {
            if (!plane.is_array() || plane.size() != n)
                throw std::invalid_argument("structure must be a dim x dim x dim array");
            for (const auto& line : plane) {
                auto v = line.get<std::vector<std::int64_t>>();
                if (v.size() != n)
                    throw std::invalid_argument("structure must be a dim x dim x dim array");
                for (auto c : v)
                    structure.push_back(f.reduce(c));
            }
        }
        Superalgebra g(f, std::move(labels), std::move(parity), std::move(zgrade), std::move(structure),
                       doc.at("cartan").get<std::vector<std::size_t>>());
        if (auto bad = validate_superalgebra(g); !bad.empty())
            throw std::invalid_argument(fmt::format("imported superalgebra violates {} ({} violations): {}",
                                                    to_string(bad.front().kind), bad.size(), bad.front().detail));
        return g;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(fmt::format("malformed superalgebra JSON: {}", e.what()));
    }
}

} // namespace kaccoh
