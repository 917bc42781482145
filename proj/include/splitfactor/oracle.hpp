#pragma once

#include "splitfactor/natural.hpp"

#include <optional>
#include <vector>

namespace splitfactor::oracle {

// Prime, or composite together with the smallest prime factor.
struct PrimalityVerdict {
    bool prime = false;
    Natural witness;  // divides the tested n, 1 < witness < n; zero when prime

    static PrimalityVerdict Prime() { return {true, Natural(0)}; }
    static PrimalityVerdict Composite(Natural factor) { return {false, std::move(factor)}; }
    bool operator==(const PrimalityVerdict&) const = default;
};

/// Smallest prime factor by trial division (2, 3, then 6k+-1 up to sqrt(n)).
/// n >= 2.
PrimalityVerdict trial_division_smallest_factor(const Natural& n);

/// Exact for all 64-bit inputs via a deterministic strong-pseudoprime test
/// over the first twelve prime bases; larger inputs fall back to trial
/// division, so keep them small-factored. 0 and 1 are not prime.
bool is_prime(const Natural& n);

/// Nontrivial factor of an odd composite via Pollard's rho with fixed
/// seeding (x0 = 2, polynomial constant 1, 2, ... on retry), so results are
/// reproducible. Absent after the retry budget is exhausted; callers fall
/// back to trial division.
std::optional<Natural> pollard_rho(const Natural& n);

/// Ascending prime multiset of n >= 2 by repeated trial division.
std::vector<Natural> factorize(const Natural& n);

}  // namespace splitfactor::oracle
