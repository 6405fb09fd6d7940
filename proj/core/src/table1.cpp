#include "qmds/table1.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace qmds {

namespace {

using nlohmann::json;

const char* embedded_fixture() {
    static const char* text =
#include "table1_fixture.inc"
        ;
    return text;
}

std::vector<Table1Row> parse_fixture(const json& j) {
    std::vector<Table1Row> rows;
    for (const auto& jr : j.at("rows")) {
        Table1Row r;
        r.q = jr.at("q").get<int>();
        r.mu = jr.at("mu").get<int>();
        auto qe = jr.at("qecc").get<std::vector<int>>();
        r.qecc_n = qe.at(0);
        r.qecc_k = qe.at(1);
        r.qecc_d = qe.at(2);
        auto pc = jr.at("pcode").get<std::vector<int>>();
        r.p_n = pc.at(0);
        r.p_k = pc.at(1);
        r.p_d = pc.at(2);
        r.weights = parse_weight_set(jr.at("weights").get<std::string>());
        if (jr.contains("uncertain")) r.uncertain = jr.at("uncertain").get<std::vector<int>>();
        if (jr.contains("distribution")) {
            for (const auto& [k, v] : jr.at("distribution").items())
                r.distribution[std::stoi(k)] = mpz_class(v.is_string() ? v.get<std::string>() : v.dump());
        }
        rows.push_back(std::move(r));
    }
    return rows;
}

}  // namespace

std::vector<Table1Row> table1_fixture() { return parse_fixture(json::parse(embedded_fixture())); }

std::vector<Table1Row> table1_fixture_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open fixture file " + path);
    json j;
    in >> j;
    return parse_fixture(j);
}

std::vector<int> parse_weight_set(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        auto dash = part.find('-');
        if (dash == std::string::npos) {
            out.push_back(std::stoi(part));
        } else {
            int lo = std::stoi(part.substr(0, dash));
            int hi = std::stoi(part.substr(dash + 1));
            for (int w = lo; w <= hi; ++w) out.push_back(w);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::string format_weight_set(const std::vector<int>& weights) {
    std::string out;
    std::size_t i = 0;
    while (i < weights.size()) {
        std::size_t j = i;
        while (j + 1 < weights.size() && weights[j + 1] == weights[j] + 1) ++j;
        if (!out.empty()) out += ',';
        if (j > i + 1)
            out += std::to_string(weights[i]) + "-" + std::to_string(weights[j]);
        else {
            out += std::to_string(weights[i]);
            if (j == i + 1) out += "," + std::to_string(weights[j]);
        }
        i = j + 1;
    }
    return out.empty() ? "-" : out;
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::match:
            return "MATCH";
        case Verdict::mismatch:
            return "MISMATCH";
        default:
            return "UNVERIFIED";
    }
}

Table1RowResult reproduce_table1_row(const Table1Row& row, const EnumOptions& opt) {
    Table1RowResult res;
    res.expected = row;

    auto [p, m] = factor_prime_power(row.q);
    ExtensionPtr ext = Extension::get(p, m);
    FamilyPair family = hermitian_mds_family(*ext, row.mu, opt);
    res.got_qecc = family.code.params();
    res.qecc_distance_verified = family.code.distance_verified();

    if (res.got_qecc.n != row.qecc_n || res.got_qecc.k != row.qecc_k)
        res.qecc_verdict = Verdict::mismatch;
    else if (!res.qecc_distance_verified)
        res.qecc_verdict = res.got_qecc.d == row.qecc_d ? Verdict::unverified : Verdict::mismatch;
    else
        res.qecc_verdict = res.got_qecc.d == row.qecc_d ? Verdict::match : Verdict::mismatch;

    LinearCode pcode = puncture_code_rs_hermitian(*ext, row.mu);
    res.got_p_n = pcode.n();
    res.got_p_k = pcode.k();

    WeightSupport support = weight_support(pcode, opt);
    res.got_weights = support.weights;
    res.weights_exact = support.exact;
    res.weights_method = support.method;

    std::vector<int> nonzero = support.weights;
    nonzero.erase(std::remove(nonzero.begin(), nonzero.end(), 0), nonzero.end());
    if (support.exact) res.got_p_d = nonzero.empty() ? -1 : nonzero.front();

    if (res.got_p_n != row.p_n || res.got_p_k != row.p_k)
        res.pcode_verdict = Verdict::mismatch;
    else if (res.got_p_d < 0)
        res.pcode_verdict = Verdict::unverified;
    else
        res.pcode_verdict = res.got_p_d == row.p_d ? Verdict::match : Verdict::mismatch;

    if (support.exact) {
        std::vector<int> expected = row.weights;
        for (int u : row.uncertain) {
            // an undecided weight matches either way
            if (std::binary_search(nonzero.begin(), nonzero.end(), u) &&
                !std::binary_search(expected.begin(), expected.end(), u)) {
                expected.push_back(u);
                std::sort(expected.begin(), expected.end());
            }
        }
        res.weights_verdict = nonzero == expected ? Verdict::match : Verdict::mismatch;
    } else {
        // sampled: a weight outside the reference support is a contradiction
        bool contradiction = false;
        for (int w : nonzero) {
            if (!std::binary_search(row.weights.begin(), row.weights.end(), w) &&
                !std::binary_search(row.uncertain.begin(), row.uncertain.end(), w))
                contradiction = true;
        }
        res.weights_verdict = contradiction ? Verdict::mismatch : Verdict::unverified;
    }
    return res;
}

}  // namespace qmds
