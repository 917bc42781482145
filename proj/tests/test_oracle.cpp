#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "splitfactor/oracle.hpp"
#include "test_support.hpp"

#include <random>
#include <vector>

using namespace splitfactor;
using oracle::PrimalityVerdict;
using testsupport::random_below_bits;
using testsupport::random_in;

TEST_CASE("trial division smallest factor") {
    CHECK(oracle::trial_division_smallest_factor(Natural(125)) ==
          PrimalityVerdict::Composite(Natural(5)));
    CHECK(oracle::trial_division_smallest_factor(Natural(2)) == PrimalityVerdict::Prime());
    CHECK(oracle::trial_division_smallest_factor(Natural(8051)) ==
          PrimalityVerdict::Composite(Natural(83)));
    CHECK(oracle::trial_division_smallest_factor(Natural(3)) == PrimalityVerdict::Prime());
    CHECK(oracle::trial_division_smallest_factor(Natural(4)) ==
          PrimalityVerdict::Composite(Natural(2)));
    CHECK(oracle::trial_division_smallest_factor(Natural(9)) ==
          PrimalityVerdict::Composite(Natural(3)));
    CHECK(oracle::trial_division_smallest_factor(Natural(49)) ==
          PrimalityVerdict::Composite(Natural(7)));
    CHECK_THROWS_AS(oracle::trial_division_smallest_factor(Natural(1)), std::domain_error);
    CHECK_THROWS_AS(oracle::trial_division_smallest_factor(Natural(0)), std::domain_error);
}

TEST_CASE("trial division witness is the smallest prime factor") {
    std::mt19937_64 rng(61);
    for (int i = 0; i < 200; ++i) {
        const Natural n = Natural(random_in(rng, 2, 1u << 20));
        const PrimalityVerdict verdict = oracle::trial_division_smallest_factor(n);
        if (verdict.prime) {
            for (Natural d = 2; d * d <= n; ++d) {
                CHECK(n % d != 0);
            }
        } else {
            CHECK(n % verdict.witness == 0);
            CHECK(verdict.witness > 1);
            CHECK(verdict.witness < n);
            for (Natural d = 2; d < verdict.witness; ++d) {
                CHECK(n % d != 0);
            }
        }
    }
}

TEST_CASE("is_prime examples") {
    CHECK_FALSE(oracle::is_prime(Natural(0)));
    CHECK_FALSE(oracle::is_prime(Natural(1)));
    CHECK(oracle::is_prime(Natural(2)));
    CHECK(oracle::is_prime(Natural(3)));
    CHECK_FALSE(oracle::is_prime(Natural(4)));
    CHECK(oracle::is_prime(Natural(97)));
    CHECK_FALSE(oracle::is_prime(Natural(561)));  // Carmichael number, 3 * 187
    CHECK(Natural(561) % 3 == 0);
    CHECK(oracle::is_prime(pow2(61) - 1));  // Mersenne prime
    CHECK(oracle::is_prime(Natural("18446744073709551557")));  // largest 64-bit prime
    CHECK_FALSE(oracle::is_prime(Natural("18446744073709551615")));
    // Above 64 bits the oracle only handles small-factored inputs.
    CHECK_FALSE(oracle::is_prime((pow2(64) + 1) * 3));
    CHECK_FALSE(oracle::is_prime(pow2(70)));
}

TEST_CASE("is_prime agrees with trial division up to one million") {
    for (Natural n = 2; n <= 1000000; ++n) {
        const bool by_division = oracle::trial_division_smallest_factor(n).prime;
        REQUIRE_MESSAGE(oracle::is_prime(n) == by_division, "disagreement at n=", n.str());
    }
}

TEST_CASE("pollard rho finds nontrivial factors") {
    const auto factor8051 = oracle::pollard_rho(Natural(8051));
    REQUIRE(factor8051.has_value());
    CHECK(Natural(8051) % *factor8051 == 0);
    CHECK((*factor8051 == 83 || *factor8051 == 97));
    CHECK(oracle::factorize(Natural(8051)) == std::vector<Natural>{83, 97});

    const auto factor25 = oracle::pollard_rho(Natural(25));
    REQUIRE(factor25.has_value());
    CHECK(*factor25 == 5);

    const auto factor10403 = oracle::pollard_rho(Natural(10403));
    REQUIRE(factor10403.has_value());
    CHECK((*factor10403 == 101 || *factor10403 == 103));
    CHECK(oracle::factorize(Natural(10403)) == std::vector<Natural>{101, 103});
}

TEST_CASE("pollard rho is deterministic and gives up on primes") {
    const auto first = oracle::pollard_rho(Natural(10403));
    const auto second = oracle::pollard_rho(Natural(10403));
    CHECK(first == second);
    CHECK_FALSE(oracle::pollard_rho(Natural(97)).has_value());
    CHECK_FALSE(oracle::pollard_rho(Natural(3)).has_value());
}

TEST_CASE("pollard rho factors random odd composites") {
    std::mt19937_64 rng(67);
    int tested = 0;
    while (tested < 60) {
        const Natural n = (random_below_bits(rng, 28) | 1) + 2;
        if (oracle::is_prime(n) || n < 4) {
            continue;
        }
        ++tested;
        const auto factor = oracle::pollard_rho(n);
        REQUIRE_MESSAGE(factor.has_value(), "rho exhausted on n=", n.str());
        CHECK(*factor > 1);
        CHECK(*factor < n);
        CHECK(n % *factor == 0);
    }
}

TEST_CASE("oracle factorize") {
    CHECK(oracle::factorize(Natural(360)) == std::vector<Natural>{2, 2, 2, 3, 3, 5});
    CHECK(oracle::factorize(Natural(2)) == std::vector<Natural>{2});
    CHECK(oracle::factorize(Natural(97)) == std::vector<Natural>{97});
    CHECK(oracle::factorize(Natural(720720)) ==
          std::vector<Natural>{2, 2, 2, 2, 3, 3, 5, 7, 11, 13});
    CHECK_THROWS_AS(oracle::factorize(Natural(1)), std::domain_error);

    std::mt19937_64 rng(71);
    for (int i = 0; i < 100; ++i) {
        const Natural n = Natural(random_in(rng, 2, 1u << 22));
        Natural product = 1;
        for (const Natural& prime : oracle::factorize(n)) {
            CHECK(oracle::is_prime(prime));
            product *= prime;
        }
        CHECK(product == n);
    }
}
