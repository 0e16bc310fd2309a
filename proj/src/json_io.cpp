// JSON round-tripping with exact rational coefficients kept as strings.

#include "orbigold/json_io.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace orbigold::json_io {

namespace {

using nlohmann::json;

void require_schema(const json& doc) {
    if (!doc.is_object() || !doc.contains("schema") || doc["schema"] != 1)
        throw std::invalid_argument("expected a schema 1 document");
}

json matrix_to_json(const qlinalg::QMat& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rat_to_string(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

qlinalg::QMat matrix_from_json(const json& doc, std::size_t rows, std::size_t cols,
                               const std::string& what) {
    if (!doc.is_array() || doc.size() != rows)
        throw std::invalid_argument(what + ": expected " + std::to_string(rows) + " rows");
    qlinalg::QMat m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const json& row = doc[i];
        if (!row.is_array() || row.size() != cols)
            throw std::invalid_argument(what + ": expected " + std::to_string(cols) +
                                        " columns in row " + std::to_string(i));
        for (std::size_t j = 0; j < cols; ++j)
            m.at(i, j) = parse_rational(row[j].get<std::string>());
    }
    return m;
}

}  // namespace

json loop_to_json(const loops::LoopCombination& combination) {
    json terms = json::array();
    for (const auto& [word, coefficient] : combination.terms()) {
        terms.push_back({{"coefficient", rat_to_string(coefficient)},
                         {"word", words::format_word(word, combination.signature())}});
    }
    json orders = json::array();
    for (unsigned i = 0; i < combination.signature().rank(); ++i)
        orders.push_back(combination.signature().order(i));
    return json{{"schema", 1}, {"orders", std::move(orders)}, {"terms", std::move(terms)}};
}

namespace {

loops::LoopCombination loop_from_json_impl(const json& doc) {
    require_schema(doc);
    std::vector<unsigned> orders;
    for (const auto& entry : doc.at("orders")) orders.push_back(entry.get<unsigned>());
    words::OrbifoldSignature sig(orders);
    loops::LoopCombination combination(sig);
    for (const auto& term : doc.at("terms")) {
        const Rat coefficient = parse_rational(term.at("coefficient").get<std::string>());
        const auto raw = words::parse_word(term.at("word").get<std::string>(), sig);
        combination.add_term(words::CyclicWord(sig, raw), coefficient);
    }
    return combination;
}

bv::GradedBVData bv_from_json_impl(const json& doc) {
    require_schema(doc);
    std::vector<int> degrees;
    for (const auto& entry : doc.at("degrees")) degrees.push_back(entry.get<int>());
    bv::GradedBVData algebra(doc.at("name").get<std::string>(), degrees);
    const std::size_t n = algebra.dim();
    std::vector<std::vector<bv::Vec>> table(n, std::vector<bv::Vec>(n, bv::Vec(n, Rat(0))));
    for (const auto& triple : doc.at("product")) {
        if (!triple.is_array() || triple.size() != 4)
            throw std::invalid_argument("product entries must be [i, j, k, coefficient]");
        const auto i = triple[0].get<std::size_t>();
        const auto j = triple[1].get<std::size_t>();
        const auto k = triple[2].get<std::size_t>();
        if (i >= n || j >= n || k >= n)
            throw std::invalid_argument("product entry index out of range");
        table[i][j][k] = parse_rational(triple[3].get<std::string>());
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) algebra.set_product(i, j, std::move(table[i][j]));
    algebra.set_d(matrix_from_json(doc.at("operator"), n, n, "operator"));
    return algebra;
}

bv::GysinData gysin_from_json_impl(const json& doc) {
    require_schema(doc);
    bv::GradedBVData algebra = bv_from_json_impl(doc.at("algebra"));
    std::vector<int> h_degrees;
    for (const auto& entry : doc.at("h_degrees")) h_degrees.push_back(entry.get<int>());
    const std::size_t nb = algebra.dim();
    const std::size_t nh = h_degrees.size();
    qlinalg::QMat q = matrix_from_json(doc.at("q"), nh, nb, "q");
    qlinalg::QMat c = matrix_from_json(doc.at("c"), nh, nh, "c");
    qlinalg::QMat t = matrix_from_json(doc.at("t"), nb, nh, "t");
    return bv::GysinData{std::move(algebra), std::move(h_degrees), std::move(q), std::move(c),
                         std::move(t)};
}

}  // namespace

json bv_to_json(const bv::GradedBVData& algebra) {
    json product = json::array();
    for (std::size_t i = 0; i < algebra.dim(); ++i)
        for (std::size_t j = 0; j < algebra.dim(); ++j)
            for (std::size_t k = 0; k < algebra.dim(); ++k)
                if (algebra.product(i, j)[k] != 0)
                    product.push_back({i, j, k, rat_to_string(algebra.product(i, j)[k])});
    return json{{"schema", 1},
                {"name", algebra.name()},
                {"degrees", algebra.degrees()},
                {"product", std::move(product)},
                {"operator", matrix_to_json(algebra.d_matrix())}};
}

json gysin_to_json(const bv::GysinData& data) {
    return json{{"schema", 1},
                {"algebra", bv_to_json(data.algebra)},
                {"h_degrees", data.h_degrees},
                {"q", matrix_to_json(data.q)},
                {"c", matrix_to_json(data.c)},
                {"t", matrix_to_json(data.t)}};
}

// Public readers translate library-specific JSON failures (missing keys,
// wrong value types) into std::invalid_argument so callers handle one
// exception family for all malformed input.
loops::LoopCombination loop_from_json(const json& doc) {
    try {
        return loop_from_json_impl(doc);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed loop document: ") + e.what());
    }
}

bv::GradedBVData bv_from_json(const json& doc) {
    try {
        return bv_from_json_impl(doc);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed algebra document: ") + e.what());
    }
}

bv::GysinData gysin_from_json(const json& doc) {
    try {
        return gysin_from_json_impl(doc);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed sequence document: ") + e.what());
    }
}

}  // namespace orbigold::json_io
