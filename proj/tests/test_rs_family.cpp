#include <doctest.h>

#include "qmds/rs_family.hpp"
#include "qmds/weights.hpp"
#include "support/naive_enum.hpp"

using namespace qmds;

TEST_SUITE("rs_family") {

TEST_CASE("generator display: rows, columns, extended column") {
    FieldPtr f3 = Field::get(3, 1);
    Mat g30 = rs_generator_matrix(f3, 0);
    CHECK(g30.rows == 1);
    CHECK(g30.cols == 3);
    for (int j = 0; j < 3; ++j) CHECK(g30(0, j) == 1);

    FieldPtr f4 = Field::get(2, 2);
    Mat g41 = rs_generator_matrix(f4, 1);
    felem a = f4->alpha();
    CHECK(g41.row(0).e == std::vector<felem>{1, 1, 1, 1});
    CHECK(g41.row(1).e == std::vector<felem>{1, a, f4->mul(a, a), 0});

    CHECK_THROWS_AS(rs_generator_matrix(f4, 3), error);  // mu > q-2
    CHECK_THROWS_AS(rs_power_row(f4, -1), error);
}

TEST_CASE("code parameters are MDS") {
    FieldPtr f3 = Field::get(3, 1);
    LinearCode c30 = rs_mds_code(f3, 0);
    CHECK(c30.n() == 3);
    CHECK(c30.k() == 1);
    CHECK(min_distance(c30) == 3);

    FieldPtr f5 = Field::get(5, 1);
    LinearCode c51 = rs_mds_code(f5, 1);
    CHECK(min_distance(c51) == 4);  // 25 words enumerated

    LinearCode cs51 = rs_mds_code_shortened(f5, 1);
    CHECK(cs51.n() == 4);
    CHECK(cs51.k() == 1);
    CHECK(min_distance(cs51) == 4);  // [4,1,4]_5

    FieldPtr f4 = Field::get(2, 2);
    LinearCode c42 = rs_mds_code(f4, 2);
    CHECK(c42.n() == 4);
    CHECK(c42.k() == 3);
    CHECK(min_distance(c42) == 2);  // [4,3,2]_4

    // mu = 0 shortening kills the all-ones row
    CHECK(rs_mds_code_shortened(f3, 0).k() == 0);
}

TEST_CASE("exhaustive MDS sweep: d = q - mu") {
    for (int q : {2, 3, 4, 5, 7, 8, 9}) {
        FieldPtr f = field_of_order(q);
        for (int mu = 0; mu <= q - 2; ++mu) {
            if (saturating_pow(q, mu + 1) > 1000000) break;
            CAPTURE(q);
            CAPTURE(mu);
            LinearCode c = rs_mds_code(f, mu);
            CHECK(c.k() == mu + 1);
            CHECK(min_distance(c) == q - mu);
            if (mu >= 1) {
                LinearCode cs = rs_mds_code_shortened(f, mu);
                CHECK(cs.n() == q - 1);
                CHECK(cs.k() == mu);
                CHECK(min_distance(cs) == q - mu);
            }
        }
    }
}

TEST_CASE("dual of the family is MDS: [q, q-mu-1, mu+2]") {
    for (int q : {2, 3, 4, 5, 7, 8}) {
        FieldPtr f = field_of_order(q);
        for (int mu = 0; mu <= q - 2; ++mu) {
            LinearCode d = dual_euclidean(rs_mds_code(f, mu));
            CHECK(d.k() == q - mu - 1);
            if (saturating_pow(q, d.k()) <= 2000000) CHECK(min_distance(d) == mu + 2);
        }
    }
}

TEST_CASE("euclidean self-orthogonality holds exactly below (q-1)/2") {
    // q*1 = 0 in characteristic p
    CHECK(rs_family_euclidean_self_orthogonal(Field::get(3, 1), 0));
    // mu < (q-1)/2 = 3
    CHECK(rs_family_euclidean_self_orthogonal(Field::get(7, 1), 2));
    // mu = (q-1)/2: the row pair with i+j = q-1 sums to q-1 != 0
    CHECK_FALSE(rs_family_euclidean_self_orthogonal(Field::get(5, 1), 2));

    for (int q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16}) {
        FieldPtr f = field_of_order(q);
        for (int mu = 0; mu <= q - 2; ++mu) {
            CAPTURE(q);
            CAPTURE(mu);
            bool expect = 2 * mu < q - 1;
            CHECK(rs_family_euclidean_self_orthogonal(f, mu) == expect);
            if (expect) {
                LinearCode c = rs_mds_code(f, mu);
                CHECK(dual_euclidean(c).contains(c));
            }
        }
    }
}

TEST_CASE("hermitian self-orthogonality holds through mu = q-2") {
    CHECK(rs_family_hermitian_self_orthogonal(*Extension::get(2, 1), 0));
    CHECK(rs_family_hermitian_self_orthogonal(*Extension::get(3, 1), 1));
    // mu = q-1 breaks the exponent bound: i + qj = q^2 - 1 occurs
    CHECK_FALSE(rs_family_hermitian_self_orthogonal(*Extension::get(3, 1), 2));

    for (auto [p, m] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}}) {
        ExtensionPtr ext = Extension::get(p, m);
        for (int mu = 0; mu <= ext->q() - 2; ++mu) {
            CAPTURE(ext->q());
            CAPTURE(mu);
            CHECK(rs_family_hermitian_self_orthogonal(*ext, mu));
            LinearCode c = rs_mds_code(ext->ext(), mu);
            CHECK(dual_hermitian(c, *ext).contains(c));
        }
    }
}

TEST_CASE("componentwise row products: G_i * G_j = G_(i+j)") {
    for (int q : {3, 4, 5, 7, 9}) {
        FieldPtr f = field_of_order(q);
        for (int i = 0; i <= q - 2; ++i) {
            for (int j = 0; i + j <= q - 2; ++j) {
                Vec gi = rs_power_row(f, i), gj = rs_power_row(f, j);
                Vec prod(f, q);
                for (int l = 0; l < q; ++l) prod[l] = f->mul(gi[l], gj[l]);
                CHECK(prod == rs_power_row(f, i + j));
            }
        }
    }
}

}  // TEST_SUITE
