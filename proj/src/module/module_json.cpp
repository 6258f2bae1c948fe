#include "kaccoh/module/module_json.hpp"

#include <stdexcept>

#include <fmt/format.h>

namespace kaccoh {

nlohmann::json matrix_to_json(const FpMatrix& m)
{
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t r = 0; r < m.rows(); ++r)
        rows.push_back(FpVector(m.row(r).begin(), m.row(r).end()));
    return rows;
}

FpMatrix matrix_from_json(const PrimeField& f, const nlohmann::json& rows)
{
    std::vector<FpVector> data;
    for (const auto& row : rows) {
        FpVector v;
        for (auto x : row.get<std::vector<std::int64_t>>())
            v.push_back(f.reduce(x));
        data.push_back(std::move(v));
    }
    const std::size_t cols = data.empty() ? 0 : data.front().size();
    return FpMatrix::from_rows(f, cols, data);
}

nlohmann::json module_to_json(const GModule& m)
{
    std::vector<int> parity;
    for (auto par : m.parities())
        parity.push_back(bit(par));
    nlohmann::json actions = nlohmann::json::array();
    for (const auto& a : m.actions())
        actions.push_back(matrix_to_json(a));
    return {
        {"p", m.field().modulus()},
        {"labels", m.labels()},
        {"parity", parity},
        {"actions", std::move(actions)},
    };
}

nlohmann::json kac_module_to_json(const KacModule& k)
{
    auto doc = module_to_json(k.module());
    doc["lambda"] = {k.lambda().a, k.lambda().b};
    return doc;
}

GModule module_from_json(const nlohmann::json& doc, std::shared_ptr<const Superalgebra> algebra)
{
    try {
        const auto& f = algebra->field();
        if (doc.at("p").get<std::int64_t>() != f.modulus())
            throw std::invalid_argument("module modulus differs from the algebra's");
        auto labels = doc.at("labels").get<std::vector<std::string>>();
        std::vector<Parity> parity;
        for (int b : doc.at("parity").get<std::vector<int>>()) {
            if (b != 0 && b != 1)
                throw std::invalid_argument("parity entries must be 0 or 1");
            parity.push_back(static_cast<Parity>(b));
        }
        std::vector<FpMatrix> actions;
        for (const auto& a : doc.at("actions")) {
            auto mat = matrix_from_json(f, a);
            if (mat.rows() == 0)
                mat = FpMatrix(f, labels.size(), labels.size());
            actions.push_back(std::move(mat));
        }
        GModule m(std::move(algebra), std::move(parity), std::move(labels), std::move(actions));
        if (auto bad = validate_representation(m); !bad.empty())
            throw std::invalid_argument(fmt::format("imported module breaks the representation law: {}",
                                                    bad.front().detail));
        return m;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(fmt::format("malformed module JSON: {}", e.what()));
    }
}

} // namespace kaccoh
