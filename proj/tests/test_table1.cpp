#include <doctest.h>

#include "qmds/table1.hpp"

using namespace qmds;

TEST_SUITE("table1") {

TEST_CASE("fixture parses") {
    auto rows = table1_fixture();
    CHECK(rows.size() == 16);
    int count_q_le_5 = 0;
    for (const auto& r : rows)
        if (r.q <= 5) ++count_q_le_5;
    CHECK(count_q_le_5 == 10);

    // the embedded distribution row
    const Table1Row& last = rows.back();
    CHECK(last.q == 7);
    CHECK(last.mu == 5);
    CHECK(last.distribution.at(24) == 7644);
    CHECK(last.distribution.at(42) == mpz_class("15657866448"));
    mpz_class total = 0;
    for (const auto& [w, c] : last.distribution) total += c;
    mpz_class q13;
    mpz_ui_pow_ui(q13.get_mpz_t(), 7, 13);
    CHECK(total == q13);
}

TEST_CASE("weight set parsing") {
    CHECK(parse_weight_set("2,4") == std::vector<int>{2, 4});
    CHECK(parse_weight_set("2-5") == std::vector<int>{2, 3, 4, 5});
    CHECK(parse_weight_set("8,12-15") == std::vector<int>{8, 12, 13, 14, 15});
    CHECK(format_weight_set({2, 4}) == "2,4");
    CHECK(format_weight_set({8, 12, 13, 14, 15}) == "8,12-15");
    CHECK(format_weight_set({0, 8, 10}) == "0,8,10");
}

TEST_CASE("the q = 2 row reproduces") {
    auto rows = table1_fixture();
    const Table1Row& row = rows.front();
    REQUIRE(row.q == 2);
    Table1RowResult res = reproduce_table1_row(row);
    CHECK(res.qecc_verdict == Verdict::match);
    CHECK(res.pcode_verdict == Verdict::match);
    CHECK(res.weights_verdict == Verdict::match);
    CHECK(res.got_qecc == QeccParams{4, 2, 2, 2});
    CHECK(res.got_p_d == 2);
}

}  // TEST_SUITE
