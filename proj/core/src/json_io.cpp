#include "qmds/json_io.hpp"

#include <json.hpp>

namespace qmds {

namespace {

using nlohmann::json;

json field_json(const FieldPtr& f) {
    return json{{"p", f->p()}, {"m", f->m()}, {"modulus", f->modulus()}};
}

json matrix_json(const Mat& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows; ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols; ++j) row.push_back(int(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

FieldPtr field_from(const json& j) {
    FieldPtr f = Field::get(j.at("p").get<int>(), j.at("m").get<int>());
    auto modulus = j.at("modulus").get<std::vector<int>>();
    if (modulus != f->modulus())
        throw error("field modulus in file differs from the canonical modulus for GF(" +
                    std::to_string(f->q()) + "); element indices would not be comparable");
    return f;
}

Mat matrix_from(const json& j, const FieldPtr& f, int cols) {
    auto rows = j.get<std::vector<std::vector<int>>>();
    Mat m(f, static_cast<int>(rows.size()), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (static_cast<int>(rows[i].size()) != cols) throw error("generator row length mismatch");
        for (int c = 0; c < cols; ++c) m(static_cast<int>(i), c) = f->element(rows[i][c]);
    }
    return m;
}

json linear_code_json(const LinearCode& c) {
    return json{{"field", field_json(c.field())},
                {"n", c.n()},
                {"k", c.k()},
                {"generator", matrix_json(c.generator())}};
}

json pair_code_json(const PairCode& c) {
    return json{{"field", field_json(c.field())},
                {"n", c.n()},
                {"r", c.dim()},
                {"generator", matrix_json(c.generator())}};
}

PairCode pair_code_from(const json& j) {
    FieldPtr f = field_from(j.at("field"));
    int n = j.at("n").get<int>();
    PairCode c(f, n, matrix_from(j.at("generator"), f, 2 * n));
    if (j.contains("r") && j.at("r").get<int>() != c.dim()) throw error("pair code rank mismatch");
    return c;
}

std::string dump(const json& j, int indent) { return indent < 0 ? j.dump() : j.dump(indent); }

}  // namespace

const char* to_string(Purity p) {
    switch (p) {
        case Purity::pure:
            return "pure";
        case Purity::impure:
            return "impure";
        default:
            return "unknown";
    }
}

const char* to_string(DistanceStatus s) {
    switch (s) {
        case DistanceStatus::enumerated:
            return "enumerated";
        case DistanceStatus::singleton_pinned:
            return "singleton-pinned";
        default:
            return "lower-bound";
    }
}

Purity purity_from_string(const std::string& s) {
    if (s == "pure") return Purity::pure;
    if (s == "impure") return Purity::impure;
    if (s == "unknown") return Purity::unknown;
    throw error("unknown purity value: " + s);
}

DistanceStatus distance_status_from_string(const std::string& s) {
    if (s == "enumerated") return DistanceStatus::enumerated;
    if (s == "singleton-pinned") return DistanceStatus::singleton_pinned;
    if (s == "lower-bound") return DistanceStatus::lower_bound;
    throw error("unknown distance status: " + s);
}

std::string to_json(const FieldPtr& f, int indent) { return dump(field_json(f), indent); }

std::string to_json(const LinearCode& c, int indent) { return dump(linear_code_json(c), indent); }

std::string to_json(const PairCode& c, int indent) { return dump(pair_code_json(c), indent); }

std::string to_json(const QuantumCode& c, int indent) {
    const QeccParams& p = c.params();
    json j{{"params",
            {{"n", p.n},
             {"k", p.k},
             {"d", p.d},
             {"q", p.q},
             {"pure", to_string(p.purity)},
             {"distance_status", to_string(c.distance_status())}}},
           {"stabilizer", pair_code_json(c.stabilizer())},
           {"provenance", c.provenance()}};
    return dump(j, indent);
}

FieldPtr field_from_json(const std::string& text) { return field_from(json::parse(text)); }

LinearCode linear_code_from_json(const std::string& text) {
    json j = json::parse(text);
    FieldPtr f = field_from(j.at("field"));
    LinearCode c(matrix_from(j.at("generator"), f, j.at("n").get<int>()));
    if (j.contains("k") && j.at("k").get<int>() != c.k()) throw error("linear code rank mismatch");
    return c;
}

PairCode pair_code_from_json(const std::string& text) { return pair_code_from(json::parse(text)); }

QuantumCode quantum_code_from_json(const std::string& text) {
    json j = json::parse(text);
    const json& jp = j.at("params");
    QeccParams p;
    p.n = jp.at("n").get<int>();
    p.k = jp.at("k").get<int>();
    p.d = jp.at("d").get<int>();
    p.q = jp.at("q").get<int>();
    p.purity = purity_from_string(jp.at("pure").get<std::string>());
    DistanceStatus status = distance_status_from_string(jp.at("distance_status").get<std::string>());
    return QuantumCode(p, pair_code_from(j.at("stabilizer")), j.value("provenance", ""), status);
}

}  // namespace qmds
