#include "splitfactor/bench.hpp"
#include "splitfactor/factor.hpp"
#include "splitfactor/natural.hpp"
#include "splitfactor/oracle.hpp"
#include "splitfactor/report.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace splitfactor;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

int run_factor(const std::string& n_text, bool as_json) {
    Natural n;
    try {
        n = parse_natural(n_text);
    } catch (const std::invalid_argument& error) {
        std::cerr << "error: " << error.what() << '\n';
        return kExitUsage;
    }
    if (n < 2) {
        std::cerr << "error: n must be >= 2\n";
        return kExitUsage;
    }
    SearchStats stats;
    const std::vector<Natural> factors = full_factorize(n, stats);
    if (as_json) {
        std::cout << report::factor_json(n, factors, stats) << '\n';
    } else {
        std::cout << report::factor_text(n, factors) << '\n';
        std::cout << "inner_iterations=" << stats.inner_iterations
                  << " split_pairs_examined=" << stats.split_pairs_examined
                  << " elapsed_ns=" << stats.elapsed.count() << '\n';
    }
    return kExitOk;
}

int run_verify(const std::string& max_text) {
    Natural max;
    try {
        max = parse_natural(max_text);
    } catch (const std::invalid_argument& error) {
        std::cerr << "error: " << error.what() << '\n';
        return kExitUsage;
    }
    if (max < 9) {
        std::cerr << "error: --max must be >= 9\n";
        return kExitUsage;
    }
    for (Natural n = 2; n <= max; ++n) {
        std::vector<Natural> expected;
        std::vector<Natural> actual;
        try {
            expected = oracle::factorize(n);
            actual = full_factorize(n);
        } catch (const InternalInconsistencyError& error) {
            std::cout << "mismatch at n=" << n.str() << ": " << error.what() << '\n';
            return kExitCheckFailed;
        }
        if (actual != expected) {
            std::cout << "mismatch at n=" << n.str() << '\n';
            return kExitCheckFailed;
        }
    }
    std::cout << max.str() << " checked, 0 mismatches\n";
    return kExitOk;
}

struct BenchOptions {
    std::string bits = "16..40";
    std::size_t samples = 50;
    std::string csv_path;
    std::vector<std::string> algorithm_labels{"split-search"};
    std::uint64_t seed = 1;
};

bool parse_bit_range(const std::string& text, unsigned& lo, unsigned& hi) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        return false;
    }
    try {
        std::size_t used = 0;
        const unsigned long lo_raw = std::stoul(text.substr(0, dots), &used);
        if (used != dots) {
            return false;
        }
        const std::string hi_text = text.substr(dots + 2);
        const unsigned long hi_raw = std::stoul(hi_text, &used);
        if (used != hi_text.size()) {
            return false;
        }
        lo = static_cast<unsigned>(lo_raw);
        hi = static_cast<unsigned>(hi_raw);
    } catch (const std::exception&) {
        return false;
    }
    return lo >= 4 && hi >= lo && hi <= 128;
}

int run_bench(const BenchOptions& options) {
    unsigned bit_lo = 0;
    unsigned bit_hi = 0;
    if (!parse_bit_range(options.bits, bit_lo, bit_hi)) {
        std::cerr << "error: --bits must look like 16..40 with 4 <= lo <= hi <= 128\n";
        return kExitUsage;
    }
    std::vector<bench::Algorithm> algorithms;
    try {
        for (const std::string& label : options.algorithm_labels) {
            algorithms.push_back(bench::algorithm_from_label(label));
        }
        if (algorithms.empty()) {
            throw std::invalid_argument("no algorithm selected");
        }
    } catch (const std::invalid_argument& error) {
        std::cerr << "error: " << error.what() << '\n';
        return kExitUsage;
    }

    const std::vector<Natural> corpus =
        bench::balanced_semiprimes(bit_lo, bit_hi, options.samples, options.seed);
    const std::vector<bench::BenchRecord> records = bench::run_benchmark(corpus, algorithms);
    try {
        bench::write_records(records, options.csv_path);
    } catch (const std::runtime_error& error) {
        std::cerr << "error: " << error.what() << '\n';
        return kExitIo;
    }
    std::cout << "wrote " << records.size() << " records to " << options.csv_path << '\n';
    if (const auto fit = bench::fit_complexity(records, bench::Algorithm::SplitSearch)) {
        std::cout << "split-search fit: slope=" << fit->slope << " intercept=" << fit->intercept
                  << " samples=" << fit->sample_count << '\n';
    } else {
        std::cout << "split-search fit unavailable (need >= 10 found-outcome records with "
                     "varying n)\n";
    }
    return kExitOk;
}

int run_selftest() {
    int failures = 0;
    const auto check = [&failures](const char* name, bool ok) {
        std::cout << (ok ? "ok   " : "FAIL ") << name << '\n';
        if (!ok) {
            ++failures;
        }
    };

    // Pinned 125 pipeline: every intermediate of the working decomposition.
    const Natural n = 125;
    const BaseTwoAnchor base = anchor(n);
    check("anchor-125", base.exponent == 6 && base.tail == 61);

    const SplitExponents split{4, 2};
    const TailDecomposition digits = decompose_tail(base.tail, split);
    check("decompose-tail-125",
          digits == TailDecomposition{Natural(3), Natural(3), Natural(1)});

    const TransferredDigits moved = transfer_coefficient(digits, Natural(2), split);
    check("transfer-coefficient-125",
          moved.high_digit == 1 && moved.low_digit == 11 && moved.residual == 1);

    const std::optional<Natural> offset = solve_offset(Natural(1), Natural(11), Natural(1), 2);
    check("offset-solve-125", offset.has_value() && *offset == 2);

    // The sign tripwire: an additive residual in the numerator has no
    // integral solution here (12/5), the subtractive one gives 2.
    check("offset-sign-tripwire", (Natural(1) * 11 + 1) % (Natural(1) + 4) != 0);

    const std::optional<FactorPair> candidate = validate_candidate(Natural(1), Natural(9), split, n);
    check("validate-candidate-125", candidate && candidate->p == 25 && candidate->q == 5);

    const FactorOutcome outcome = factor_step(n);
    check("factor-step-125", outcome.result == FactorResult::Found &&
                                 outcome.factors == FactorPair(Natural(25), Natural(5)) &&
                                 outcome.stats.inner_iterations == 4 &&
                                 outcome.stats.split_pairs_examined == 2);

    // Exhaustive anchor-exponent bound for all factor pairs up to 2^10.
    bool bounds_hold = true;
    for (Natural p = 2; p <= 1024 && bounds_hold; ++p) {
        const unsigned high = floor_log2(p);
        for (Natural q = 2; q <= p; ++q) {
            const unsigned span = high + floor_log2(q);
            const unsigned k = floor_log2(Natural(p * q));
            if (k != span && k != span + 1) {
                bounds_hold = false;
                break;
            }
        }
    }
    check("exponent-bound-1024", bounds_hold);

    // Iteration budget: the scan must stay within 16*ceil(sqrt(n)).
    bool budget_holds = true;
    const auto within_budget = [](const Natural& value) {
        const FactorOutcome result = factor_step(value);
        return Natural(result.stats.inner_iterations) <= 16 * isqrt_ceil(value);
    };
    for (Natural odd = 9; odd <= 4095; odd += 2) {
        if (!within_budget(odd)) {
            budget_holds = false;
            break;
        }
    }
    budget_holds = budget_holds && within_budget(Natural(101) * 103) &&
                   within_budget(Natural(1019) * 1021) && within_budget(Natural(65519) * 65521);
    check("iteration-budget", budget_holds);

    if (failures != 0) {
        std::cout << failures << " check(s) failed\n";
        return kExitCheckFailed;
    }
    std::cout << "all checks passed\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"base-2 split integer factorization toolkit"};
    app.require_subcommand(1);

    std::string factor_n;
    bool factor_json = false;
    CLI::App* factor_cmd = app.add_subcommand("factor", "factor an integer");
    factor_cmd->add_option("n", factor_n, "integer to factor (decimal)")->required();
    factor_cmd->add_flag("--json", factor_json, "emit a single JSON object");

    std::string verify_max;
    CLI::App* verify_cmd =
        app.add_subcommand("verify", "compare against the trial division oracle over [2, max]");
    verify_cmd->add_option("--max", verify_max, "inclusive upper bound (decimal, >= 9)")
        ->required();

    BenchOptions bench_options;
    CLI::App* bench_cmd = app.add_subcommand("bench", "run the instrumented benchmark corpus");
    bench_cmd->add_option("--csv", bench_options.csv_path, "output CSV path")->required();
    bench_cmd->add_option("--bits", bench_options.bits, "semiprime bit-length range (default 16..40)");
    bench_cmd->add_option("--samples", bench_options.samples, "number of semiprimes (default 50)");
    bench_cmd
        ->add_option("--algorithms", bench_options.algorithm_labels,
                     "comma-separated: split-search,trial-division,pollard-rho")
        ->delimiter(',');
    bench_cmd->add_option("--seed", bench_options.seed, "corpus RNG seed (default 1)");

    CLI::App* selftest_cmd = app.add_subcommand("selftest", "run the pinned example suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);  // --help and friends
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (factor_cmd->parsed()) {
            return run_factor(factor_n, factor_json);
        }
        if (verify_cmd->parsed()) {
            return run_verify(verify_max);
        }
        if (bench_cmd->parsed()) {
            return run_bench(bench_options);
        }
        if (selftest_cmd->parsed()) {
            return run_selftest();
        }
    } catch (const InternalInconsistencyError& error) {
        std::cerr << "error: " << error.what() << '\n';
        return kExitCheckFailed;
    } catch (const std::domain_error& error) {
        std::cerr << "error: " << error.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& error) {
        std::cerr << "error: " << error.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& error) {
        std::cerr << "error: " << error.what() << '\n';
        return kExitIo;
    }
    return kExitUsage;
}
