#pragma once

#include "splitfactor/natural.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace splitfactor {

// n = 2^exponent + tail with 0 <= tail < 2^exponent.
struct BaseTwoAnchor {
    unsigned exponent = 0;
    Natural tail;
    bool operator==(const BaseTwoAnchor&) const = default;
};

// Floor-log2 exponents of the two sought factors, `high` belonging to the
// larger one. enumerate_splits only produces high >= low >= 1.
struct SplitExponents {
    unsigned high = 1;
    unsigned low = 1;
    bool operator==(const SplitExponents&) const = default;
};

// Canonical mixed-radix digits of a tail value at radix positions 2^high,
// 2^low and 1:
//   value = high_digit*2^high + low_digit*2^low + residual
// with 0 <= low_digit < 2^(high-low) and 0 <= residual < 2^low.
struct TailDecomposition {
    Natural high_digit;
    Natural low_digit;
    Natural residual;
    bool operator==(const TailDecomposition&) const = default;
};

// Digits after moving units out of the high position; the low digit is no
// longer bounded by 2^(high-low), the represented value is unchanged.
struct TransferredDigits {
    Natural high_digit;
    Natural low_digit;
    Natural residual;
    bool operator==(const TransferredDigits&) const = default;
};

// A fully determined factor candidate for a split: p = 2^high + p_offset,
// q = 2^low + q_offset, with product = q_offset * p_offset matching the
// 2^0 digit of the searched value.
struct CandidateCoefficients {
    Natural q_offset;
    Natural p_offset;
    Natural product;
};

// Nontrivial factorization n = p * q, stored with p >= q.
struct FactorPair {
    Natural p;
    Natural q;
    FactorPair(Natural a, Natural b);
    bool operator==(const FactorPair&) const = default;
};

// Instrumentation counters owned by a single search invocation.
// inner_iterations counts trial q-offset values, the unit the complexity
// claim is stated in; split_pairs_examined counts (high, low) pairs.
struct SearchStats {
    std::uint64_t split_pairs_examined = 0;
    std::uint64_t inner_iterations = 0;
    std::chrono::nanoseconds elapsed{0};
};

enum class FactorResult { Found, NoNontrivialFactor, TrivialEven };

struct FactorOutcome {
    FactorResult result = FactorResult::NoNontrivialFactor;
    std::optional<FactorPair> factors;  // present unless NoNontrivialFactor
    SearchStats stats;
};

// The split search claims an input is prime but the oracle disagrees.
class InternalInconsistencyError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

/// Leading-power-of-two form of n (n >= 2): k = floor_log2(n), tail = n - 2^k.
BaseTwoAnchor anchor(const Natural& n);

/// All (high, low) exponent pairs with high >= low >= 1 and
/// high + low in {k, k-1}. Family k comes first, then k-1; within a family
/// `high` descends. Empty for k < 2 (no split with low >= 1 exists).
std::vector<SplitExponents> enumerate_splits(unsigned k);

/// Unique mixed-radix digits of `value` >= 0 at the split's radix positions.
TailDecomposition decompose_tail(const Natural& value, SplitExponents split);

/// Moves `amount` units (0 <= amount <= high_digit) from the high digit into
/// the low digit: low gains amount*2^(high-low), the value is preserved.
TransferredDigits transfer_coefficient(const TailDecomposition& digits, const Natural& amount,
                                       SplitExponents split);

/// Solves q_offset*(low_digit - d) = residual + d*2^low for d >= 0.
/// Absent when no non-negative integral solution exists; q_offset must be
/// >= 1. The returned d always satisfies d <= low_digit.
std::optional<Natural> solve_offset(const Natural& q_offset, const Natural& low_digit,
                                    const Natural& residual, unsigned low);

/// Checks p = 2^high + p_offset, q = 2^low + q_offset against n. Returns the
/// pair exactly when q_offset < 2^low, p_offset < 2^high and p*q = n.
std::optional<FactorPair> validate_candidate(const Natural& q_offset, const Natural& p_offset,
                                             SplitExponents split, const Natural& n);

/// Scans one split: decomposes n - 2^(high+low), walks the q offset from
/// min(high_digit, 2^low - 1) down to 1, and returns the first valid pair.
/// Expects n odd, n >= 9 and high + low <= floor_log2(n). Each trial offset
/// bumps stats.inner_iterations.
std::optional<FactorPair> search_split(const Natural& n, SplitExponents split, SearchStats& stats);

/// One factoring step for n >= 2: even n short-circuits to (n/2, 2), odd
/// n < 9 gets a direct trial check, everything else runs the split search
/// over enumerate_splits. Stats are populated in every outcome.
FactorOutcome factor_step(const Natural& n);

/// Prime multiset of n (ascending, with multiplicity). Repeated factor_step;
/// a NoNontrivialFactor leaf is accepted as prime only after the oracle
/// primality test agrees, otherwise InternalInconsistencyError is thrown.
std::vector<Natural> full_factorize(const Natural& n);
std::vector<Natural> full_factorize(const Natural& n, SearchStats& accumulated);

}  // namespace splitfactor
