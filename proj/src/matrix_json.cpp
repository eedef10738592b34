#include "ogglab/matrix_json.hpp"

#include "ogglab/errors.hpp"

namespace ogglab {

using nlohmann::json;

json matrixToJson(const IntMatrix& m) {
    json entries = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(toString(m(i, j)));
        entries.push_back(std::move(row));
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

namespace {

Integer entryFromJson(const json& e) {
    if (e.is_string()) return parseInteger(e.get<std::string>());
    if (e.is_number_integer()) return Integer(e.dump());
    throw InvalidInput("matrix entry must be a decimal string");
}

}  // namespace

IntMatrix matrixFromJson(const json& j) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
        throw InvalidInput("matrix JSON needs rows, cols and entries");
    auto rows = j.at("rows").get<std::size_t>();
    auto cols = j.at("cols").get<std::size_t>();
    const json& entries = j.at("entries");
    if (!entries.is_array() || entries.size() != rows)
        throw InvalidInput("matrix JSON: entries count does not match rows");
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const json& row = entries[i];
        if (!row.is_array() || row.size() != cols)
            throw InvalidInput("matrix JSON: row length does not match cols");
        for (std::size_t k = 0; k < cols; ++k) m(i, k) = entryFromJson(row[k]);
    }
    return m;
}

json vectorToJson(const IntVector& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(toString(x));
    return out;
}

IntVector vectorFromJson(const json& j) {
    IntVector v;
    for (const auto& e : j) v.push_back(entryFromJson(e));
    return v;
}

json polyToJson(const IntPoly& p) { return vectorToJson(p.coeffs); }

}  // namespace ogglab
