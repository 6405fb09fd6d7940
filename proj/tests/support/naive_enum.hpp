#pragma once

#include <cstdint>
#include <vector>

#include "qmds/codes.hpp"

// Brute-force oracles, deliberately independent of the production
// enumeration: every message is re-encoded from scratch by plain
// matrix-vector products, no Gray stepping, no incremental weights.
namespace qmds_test {

// all q^k codewords, in message-lexicographic order (digit 0 most significant)
std::vector<qmds::Vec> all_codewords(const qmds::LinearCode& c);
std::vector<qmds::Vec> all_pair_words(const qmds::PairCode& c);

std::vector<std::uint64_t> naive_hamming_histogram(const qmds::LinearCode& c);
std::vector<std::uint64_t> naive_symplectic_histogram(const qmds::PairCode& c);

int naive_min_distance(const qmds::LinearCode& c);
int naive_min_symplectic_distance(const qmds::PairCode& c);

}  // namespace qmds_test
