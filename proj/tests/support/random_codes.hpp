#pragma once

#include <random>

#include "qmds/codes.hpp"

namespace qmds_test {

inline qmds::Mat random_matrix(const qmds::FieldPtr& f, int rows, int cols, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> pick(0, f->q() - 1);
    qmds::Mat m(f, rows, cols);
    for (auto& x : m.a) x = qmds::felem(pick(rng));
    return m;
}

inline qmds::LinearCode random_code(const qmds::FieldPtr& f, int k, int n, std::mt19937_64& rng) {
    return qmds::LinearCode(random_matrix(f, k, n, rng));
}

inline qmds::PairCode random_pair_code(const qmds::FieldPtr& f, int r, int n, std::mt19937_64& rng) {
    return qmds::PairCode(f, n, random_matrix(f, r, 2 * n, rng));
}

}  // namespace qmds_test
