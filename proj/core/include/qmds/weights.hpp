#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "qmds/codes.hpp"

namespace qmds {

/// Default cap on exhaustively enumerated codewords.
inline constexpr std::uint64_t kDefaultBudget = std::uint64_t(1) << 31;

/// Knobs for the exhaustive / sampled enumeration paths.  Enumeration
/// partitions the message space into disjoint prefix chunks when workers > 1;
/// results never depend on the chunk count.
struct EnumOptions {
    std::uint64_t budget = kDefaultBudget;
    int workers = 0;  // 0: one per hardware thread
    std::uint64_t samples = 100000;
    std::uint64_t seed = 0x51ab5eed;
};

enum class WeightKind { hamming, symplectic };

/// Codeword counts by weight, A_0..A_n.  Exact big-integer counts: dual
/// distributions reach q^k for codes far beyond direct enumeration.
struct WeightDistribution {
    WeightKind kind = WeightKind::hamming;
    std::vector<mpz_class> counts;

    int length() const { return static_cast<int>(counts.size()) - 1; }
    mpz_class total() const;
    /// Weights with nonzero count, ascending (0 included when A_0 > 0).
    std::vector<int> support() const;
    /// Smallest positive weight with nonzero count; -1 for the zero code.
    int min_nonzero() const;
};

/// base^exp, saturating at 2^64 - 1.
std::uint64_t saturating_pow(std::uint64_t base, int exp);

/// Exact Hamming weight distribution by Gray-order exhaustive enumeration.
/// Throws budget_error when q^k exceeds opt.budget.
WeightDistribution weight_distribution(const LinearCode& c, const EnumOptions& opt = {});

/// Exact symplectic weight distribution of a pair code (q^dim words).
WeightDistribution weight_distribution(const PairCode& c, const EnumOptions& opt = {});

/// Minimum nonzero (Hamming / symplectic) weight, by enumeration.
/// Throws qmds::error for the zero code.
int min_distance(const LinearCode& c, const EnumOptions& opt = {});
int min_distance(const PairCode& c, const EnumOptions& opt = {});

/// The q-ary MacWilliams identity: distribution of the dual of an [n, k]_q
/// code from the code's own exact distribution.  Exact integer arithmetic;
/// throws qmds::error when the input is inconsistent (non-integer or negative
/// output, or counts not summing to q^k).
WeightDistribution macwilliams_transform(const WeightDistribution& w, int n, int k, int q);

/// Minimum symplectic weight over words of `space` that are outside the
/// subcode `excluded`, plus whether that minimum already occurs over all
/// nonzero words of `space` (purity).  Requires excluded strictly contained
/// in space.
struct ExcludedMinWeight {
    int d = 0;
    bool pure = false;
};
ExcludedMinWeight min_weight_outside(const PairCode& space, const PairCode& excluded,
                                     const EnumOptions& opt = {});

/// Achievable weights of a code, with the route that produced them:
///   enumeration      -- exact, q^k within budget
///   dual-macwilliams -- exact, via the dual distribution (q^(n-k) in budget)
///   sampled          -- observed weights only, flagged inexact
struct WeightSupport {
    std::vector<int> weights;  // ascending, 0 included
    bool exact = false;
    std::string method;
};
WeightSupport weight_support(const LinearCode& c, const EnumOptions& opt = {});

/// First codeword of weight r in message-lexicographic order (deterministic
/// witness for shortening).  r >= 1.  Falls back to seeded random sampling
/// when q^k exceeds the budget; throws budget_error when no witness turns up
/// within opt.samples draws, qmds::error when r is provably not achieved.
Vec weight_witness(const LinearCode& c, int r, const EnumOptions& opt = {});

}  // namespace qmds
