#pragma once

#include <map>

#include "qmds/puncture.hpp"

namespace qmds {

/// One row of the bundled reference table: the length-q^2 quantum MDS code
/// for a given (q, mu), its puncture code, and the achievable shortening
/// weights.
struct Table1Row {
    int q = 0, mu = 0;
    int qecc_n = 0, qecc_k = 0, qecc_d = 0;
    int p_n = 0, p_k = 0, p_d = 0;
    std::vector<int> weights;                  // expected nonzero support, ascending
    std::vector<int> uncertain;                // weights the reference leaves open
    std::map<int, mpz_class> distribution;     // embedded exact counts, when known
};

/// The bundled fixture (compiled in), or one loaded from a file with the
/// same schema.
std::vector<Table1Row> table1_fixture();
std::vector<Table1Row> table1_fixture_from_file(const std::string& path);

/// Parse a weight string like "8,12-49" into the sorted set of weights.
std::vector<int> parse_weight_set(const std::string& text);
std::string format_weight_set(const std::vector<int>& weights);

enum class Verdict { match, mismatch, unverified };
const char* to_string(Verdict v);

/// Reproduction of one row: rebuild the quantum code, its puncture code and
/// the weight support, and compare cell by cell.  A cell is `match` only when
/// the computed value is exact and equal, `unverified` when the check ran out
/// of budget without contradiction, `mismatch` on any contradiction.
struct Table1RowResult {
    Table1Row expected;
    QeccParams got_qecc;
    bool qecc_distance_verified = false;
    int got_p_n = 0, got_p_k = 0, got_p_d = -1;  // -1: distance not determined
    std::vector<int> got_weights;
    bool weights_exact = false;
    std::string weights_method;
    Verdict qecc_verdict = Verdict::unverified;
    Verdict pcode_verdict = Verdict::unverified;
    Verdict weights_verdict = Verdict::unverified;
};

Table1RowResult reproduce_table1_row(const Table1Row& row, const EnumOptions& opt = {});

}  // namespace qmds
