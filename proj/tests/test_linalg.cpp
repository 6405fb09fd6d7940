#include <doctest.h>

#include <random>
#include <set>

#include "qmds/linalg.hpp"
#include "qmds/rs_family.hpp"
#include "support/naive_enum.hpp"
#include "support/random_codes.hpp"

using namespace qmds;

TEST_SUITE("linalg") {

TEST_CASE("rref basics") {
    FieldPtr f3 = Field::get(3, 1);
    Mat id = Mat::identity(f3, 4);
    RrefResult r = rref(id);
    CHECK(r.rank == 4);
    CHECK(r.mat == id);

    Mat zero(f3, 3, 5);
    CHECK(rref(zero).rank == 0);
}

TEST_CASE("rref rank of the (3,1) power generator is 2") {
    FieldPtr f3 = Field::get(3, 1);
    Mat g = rs_generator_matrix(f3, 1);  // rows (1,1,1), (1,alpha,0)
    CHECK(rref(g).rank == 2);

    // verify by spanning all 3^2 combinations and counting distinct words
    LinearCode c(g);
    auto words = qmds_test::all_codewords(c);
    std::set<std::vector<felem>> distinct;
    for (const auto& w : words) distinct.insert(w.e);
    CHECK(distinct.size() == 9);
}

TEST_CASE("kernel dimensions and annihilation") {
    FieldPtr f5 = Field::get(5, 1);
    Mat sq = Mat::identity(f5, 3);
    CHECK(kernel(sq).rows == 0);

    Mat ones(f5, 1, 5);
    for (int j = 0; j < 5; ++j) ones(0, j) = 1;
    Mat k = kernel(ones);
    CHECK(k.rows == 4);

    std::mt19937_64 rng(7);
    for (int t = 0; t < 20; ++t) {
        Mat m = qmds_test::random_matrix(f5, 3, 6, rng);
        Mat km = kernel(m);
        CHECK(km.rows == 6 - rref(m).rank);
        Mat prod = mat_mul(m, transpose(km));
        for (felem x : prod.a) CHECK(x == 0);
        // double dual: kernel of the kernel spans the original row space
        CHECK(LinearCode(kernel(km)) == LinearCode(m));
    }
}

TEST_CASE("products and dot") {
    FieldPtr f4 = Field::get(2, 2);
    std::mt19937_64 rng(11);
    Mat a = qmds_test::random_matrix(f4, 3, 4, rng);
    Mat b = qmds_test::random_matrix(f4, 4, 2, rng);
    Mat ab = mat_mul(a, b);
    CHECK(ab.rows == 3);
    CHECK(ab.cols == 2);
    CHECK(transpose(transpose(a)) == a);

    Vec v(f4, {1, 2, 3, 0});
    Vec av = mat_vec(a, v);
    for (int i = 0; i < 3; ++i) CHECK(av[i] == dot(a.row(i), v));
}

}  // TEST_SUITE
