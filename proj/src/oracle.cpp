#include "splitfactor/oracle.hpp"

#include <array>
#include <bit>
#include <cstdint>
#include <limits>

namespace splitfactor::oracle {

namespace mp = boost::multiprecision;

namespace {

std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t acc = 1;
    base %= m;
    while (exp != 0) {
        if (exp & 1u) {
            acc = mulmod64(acc, base, m);
        }
        base = mulmod64(base, base, m);
        exp >>= 1;
    }
    return acc;
}

// First twelve primes: a strong-pseudoprime base set exact for every
// 64-bit input (Sorenson-Webster bound).
constexpr std::array<std::uint64_t, 12> kWitnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

bool miller_rabin64(std::uint64_t n) {
    // n odd, n >= 5
    const int twos = std::countr_zero(n - 1);
    const std::uint64_t odd_part = (n - 1) >> twos;
    for (std::uint64_t witness : kWitnesses) {
        if (witness % n == 0) {
            continue;
        }
        std::uint64_t x = powmod64(witness, odd_part, n);
        if (x == 1 || x == n - 1) {
            continue;
        }
        bool witnessed_composite = true;
        for (int round = 1; round < twos; ++round) {
            x = mulmod64(x, x, n);
            if (x == n - 1) {
                witnessed_composite = false;
                break;
            }
        }
        if (witnessed_composite) {
            return false;
        }
    }
    return true;
}

}  // namespace

PrimalityVerdict trial_division_smallest_factor(const Natural& n) {
    if (n < 2) {
        throw std::domain_error("trial_division_smallest_factor: n must be >= 2");
    }
    if (n % 2 == 0) {
        return n == 2 ? PrimalityVerdict::Prime() : PrimalityVerdict::Composite(Natural(2));
    }
    if (n % 3 == 0) {
        return n == 3 ? PrimalityVerdict::Prime() : PrimalityVerdict::Composite(Natural(3));
    }
    for (Natural d = 5; d * d <= n; d += 6) {
        if (n % d == 0) {
            return PrimalityVerdict::Composite(d);
        }
        if (n % (d + 2) == 0) {
            return PrimalityVerdict::Composite(d + 2);
        }
    }
    return PrimalityVerdict::Prime();
}

bool is_prime(const Natural& n) {
    if (n < 2) {
        return false;
    }
    if (n == 2 || n == 3) {
        return true;
    }
    if (n % 2 == 0) {
        return false;
    }
    if (n <= std::numeric_limits<std::uint64_t>::max()) {
        return miller_rabin64(n.convert_to<std::uint64_t>());
    }
    return trial_division_smallest_factor(n).prime;
}

std::optional<Natural> pollard_rho(const Natural& n) {
    if (n < 4) {
        return std::nullopt;
    }
    constexpr int kMaxAttempts = 24;
    // Expected cycle length is around n^(1/4); give each attempt slack.
    const Natural fourth_root = isqrt_ceil(isqrt_ceil(n));
    const std::uint64_t step_budget =
        fourth_root > 1'000'000'000 ? 8'000'000'256
                                    : 256 + 8 * fourth_root.convert_to<std::uint64_t>();

    for (int constant = 1; constant <= kMaxAttempts; ++constant) {
        Natural x = 2;
        Natural y = 2;
        Natural d = 1;
        std::uint64_t steps = 0;
        while (d == 1 && steps < step_budget) {
            x = (x * x + constant) % n;
            y = (y * y + constant) % n;
            y = (y * y + constant) % n;
            d = mp::gcd(x >= y ? Natural(x - y) : Natural(y - x), n);
            ++steps;
        }
        if (d != 1 && d != n) {
            return d;
        }
        // Collided into the trivial cycle (d == n) or ran out of steps;
        // retry with the next polynomial constant.
    }
    return std::nullopt;
}

std::vector<Natural> factorize(const Natural& n) {
    if (n < 2) {
        throw std::domain_error("factorize: n must be >= 2");
    }
    std::vector<Natural> primes;
    Natural rest = n;
    while (rest > 1) {
        const PrimalityVerdict verdict = trial_division_smallest_factor(rest);
        if (verdict.prime) {
            primes.push_back(rest);
            break;
        }
        primes.push_back(verdict.witness);
        rest /= verdict.witness;
    }
    return primes;  // ascending: smallest factors strip off first
}

}  // namespace splitfactor::oracle
