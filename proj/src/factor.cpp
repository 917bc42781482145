#include "splitfactor/factor.hpp"

#include "splitfactor/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <utility>

namespace splitfactor {

namespace mp = boost::multiprecision;

FactorPair::FactorPair(Natural a, Natural b) : p(std::move(a)), q(std::move(b)) {
    if (p < q) {
        std::swap(p, q);
    }
}

BaseTwoAnchor anchor(const Natural& n) {
    if (n < 2) {
        throw std::domain_error("anchor: n must be >= 2");
    }
    const unsigned k = floor_log2(n);
    return BaseTwoAnchor{k, n - pow2(k)};
}

std::vector<SplitExponents> enumerate_splits(unsigned k) {
    std::vector<SplitExponents> splits;
    if (k < 2) {
        return splits;
    }
    // Family high+low = k, then high+low = k-1; inside a family the high
    // exponent descends, so the cheap small-low scans come first.
    for (unsigned family : {k, k - 1}) {
        const unsigned high_min = (family + 1) / 2;
        for (unsigned high = family - 1; high >= high_min; --high) {
            splits.push_back(SplitExponents{high, family - high});
        }
    }
    return splits;
}

TailDecomposition decompose_tail(const Natural& value, SplitExponents split) {
    if (value < 0) {
        throw std::domain_error("decompose_tail: value must be >= 0");
    }
    TailDecomposition digits;
    digits.high_digit = value >> split.high;
    const Natural below_high = value - (digits.high_digit << split.high);
    digits.low_digit = below_high >> split.low;
    digits.residual = below_high - (digits.low_digit << split.low);
    return digits;
}

TransferredDigits transfer_coefficient(const TailDecomposition& digits, const Natural& amount,
                                       SplitExponents split) {
    if (amount < 0 || amount > digits.high_digit) {
        throw std::domain_error("transfer_coefficient: amount must lie in [0, high_digit]");
    }
    TransferredDigits moved;
    moved.high_digit = digits.high_digit - amount;
    moved.low_digit = digits.low_digit + (amount << (split.high - split.low));
    moved.residual = digits.residual;
    return moved;
}

std::optional<Natural> solve_offset(const Natural& q_offset, const Natural& low_digit,
                                    const Natural& residual, unsigned low) {
    if (q_offset < 1) {
        throw std::domain_error("solve_offset: q_offset must be >= 1");
    }
    Natural numerator = q_offset * low_digit;
    if (numerator < residual) {
        return std::nullopt;
    }
    numerator -= residual;
    const Natural denominator = q_offset + pow2(low);
    Natural offset, remainder;
    mp::divide_qr(numerator, denominator, offset, remainder);
    if (remainder != 0 || offset > low_digit) {
        return std::nullopt;
    }
    return offset;
}

std::optional<FactorPair> validate_candidate(const Natural& q_offset, const Natural& p_offset,
                                             SplitExponents split, const Natural& n) {
    if (q_offset < 0 || p_offset < 0) {
        return std::nullopt;
    }
    if (q_offset >= pow2(split.low) || p_offset >= pow2(split.high)) {
        return std::nullopt;
    }
    Natural p = pow2(split.high) + p_offset;
    Natural q = pow2(split.low) + q_offset;
    if (p * q != n) {
        return std::nullopt;
    }
    return FactorPair(std::move(p), std::move(q));
}

std::optional<FactorPair> search_split(const Natural& n, SplitExponents split,
                                       SearchStats& stats) {
    const Natural tail = n - pow2(split.high + split.low);
    const TailDecomposition digits = decompose_tail(tail, split);

    // q = 2^low + q_offset stays below 2^(low+1), so the scan is clamped at
    // 2^low - 1 even when the high digit is larger (high+low = k-1 family).
    const Natural cap = pow2(split.low) - 1;
    Natural q_offset = std::min(digits.high_digit, cap);
    for (; q_offset >= 1; --q_offset) {
        ++stats.inner_iterations;
        const TransferredDigits moved =
            transfer_coefficient(digits, digits.high_digit - q_offset, split);
        const std::optional<Natural> offset =
            solve_offset(moved.high_digit, moved.low_digit, moved.residual, split.low);
        if (!offset) {
            continue;
        }
        CandidateCoefficients candidate{moved.high_digit, moved.low_digit - *offset, Natural(0)};
        candidate.product = candidate.q_offset * candidate.p_offset;
        assert(candidate.product == moved.residual + (*offset << split.low));
        if (std::optional<FactorPair> pair =
                validate_candidate(candidate.q_offset, candidate.p_offset, split, n)) {
            return pair;
        }
    }
    return std::nullopt;
}

FactorOutcome factor_step(const Natural& n) {
    if (n < 2) {
        throw std::domain_error("factor_step: n must be >= 2");
    }
    const auto started = std::chrono::steady_clock::now();
    FactorOutcome outcome;
    const auto finish = [&](FactorResult result, std::optional<FactorPair> pair) {
        outcome.result = result;
        outcome.factors = std::move(pair);
        auto elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(
            std::chrono::steady_clock::now() - started);
        outcome.stats.elapsed = elapsed.count() > 0 ? elapsed : std::chrono::nanoseconds(1);
        return outcome;
    };

    if (n == 2) {
        // Prime; no pair with q >= 2 exists.
        return finish(FactorResult::NoNontrivialFactor, std::nullopt);
    }
    if (!mp::bit_test(n, 0)) {
        return finish(FactorResult::TrivialEven, FactorPair(n >> 1, Natural(2)));
    }
    if (n < 9) {
        // 3, 5, 7: the scan needs a split with low >= 1 and none fits, so
        // settle these by direct trial check.
        for (Natural d = 3; d * d <= n; d += 2) {
            if (n % d == 0) {
                return finish(FactorResult::Found, FactorPair(n / d, d));
            }
        }
        return finish(FactorResult::NoNontrivialFactor, std::nullopt);
    }

    const unsigned k = floor_log2(n);
    for (const SplitExponents split : enumerate_splits(k)) {
        ++outcome.stats.split_pairs_examined;
        if (std::optional<FactorPair> pair = search_split(n, split, outcome.stats)) {
            return finish(FactorResult::Found, std::move(*pair));
        }
    }
    return finish(FactorResult::NoNontrivialFactor, std::nullopt);
}

std::vector<Natural> full_factorize(const Natural& n) {
    SearchStats stats;
    return full_factorize(n, stats);
}

std::vector<Natural> full_factorize(const Natural& n, SearchStats& accumulated) {
    if (n < 2) {
        throw std::domain_error("full_factorize: n must be >= 2");
    }
    std::vector<Natural> primes;
    std::vector<Natural> pending{n};
    while (!pending.empty()) {
        Natural current = std::move(pending.back());
        pending.pop_back();
        const FactorOutcome outcome = factor_step(current);
        accumulated.split_pairs_examined += outcome.stats.split_pairs_examined;
        accumulated.inner_iterations += outcome.stats.inner_iterations;
        accumulated.elapsed += outcome.stats.elapsed;
        switch (outcome.result) {
        case FactorResult::Found:
        case FactorResult::TrivialEven:
            pending.push_back(outcome.factors->p);
            pending.push_back(outcome.factors->q);
            break;
        case FactorResult::NoNontrivialFactor:
            if (!oracle::is_prime(current)) {
                throw InternalInconsistencyError("split search found no factor of composite " +
                                                 current.str());
            }
            primes.push_back(std::move(current));
            break;
        }
    }
    std::sort(primes.begin(), primes.end());
    return primes;
}

}  // namespace splitfactor
