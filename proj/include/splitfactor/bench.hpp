#pragma once

#include "splitfactor/factor.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace splitfactor::bench {

enum class Algorithm { SplitSearch, TrialDivision, PollardRho };
enum class RunOutcome { Found, NoFactor, Even };

std::string to_label(Algorithm algorithm);
std::string to_label(RunOutcome outcome);
Algorithm algorithm_from_label(const std::string& label);  // throws std::invalid_argument
RunOutcome outcome_from_label(const std::string& label);

// One instrumented run. inner_iterations and split_pairs_examined are zero
// for the non-split algorithms (fields reserved).
struct BenchRecord {
    Natural n;
    unsigned bits = 0;
    Algorithm algorithm = Algorithm::SplitSearch;
    std::uint64_t inner_iterations = 0;
    std::uint64_t split_pairs_examined = 0;
    std::uint64_t elapsed_ns = 0;
    RunOutcome outcome = RunOutcome::Found;
    bool operator==(const BenchRecord&) const = default;
};

/// One cold-started record per (n, algorithm) pair, in input order.
/// All n must be >= 2 and at least one algorithm must be selected; both are
/// checked before any run starts.
std::vector<BenchRecord> run_benchmark(const std::vector<Natural>& inputs,
                                       const std::vector<Algorithm>& algorithms);

// log2(inner_iterations) ~ slope * log2(n) + intercept. A slope near 0.5
// corresponds to square-root growth of the iteration count.
struct ComplexityFit {
    double slope = 0;
    double intercept = 0;
    std::size_t sample_count = 0;
};

/// Least-squares fit over the given algorithm's found-outcome records.
/// Unavailable with fewer than 10 such records or a zero-variance n set;
/// a meaningful slope needs the inputs to span ten or more bits.
std::optional<ComplexityFit> fit_complexity(const std::vector<BenchRecord>& records,
                                            Algorithm algorithm);

inline constexpr char kCsvHeader[] =
    "n,bits,algorithm,inner_iterations,split_pairs_examined,elapsed_ns,outcome";

/// CSV with the exact header above, one row per record, n in decimal,
/// LF line endings. The path overloads throw std::runtime_error naming the
/// destination on I/O failure; read_records also throws on malformed input.
void write_records(const std::vector<BenchRecord>& records, std::ostream& out);
void write_records(const std::vector<BenchRecord>& records, const std::filesystem::path& destination);
std::vector<BenchRecord> read_records(std::istream& in);
std::vector<BenchRecord> read_records(const std::filesystem::path& source);

/// `count` semiprimes p*q with p, q prime and of equal bit length, the worst
/// case for the split search. Product bit lengths cycle through
/// [bit_lo, bit_hi] (bit_lo >= 4). Deterministic in seed.
std::vector<Natural> balanced_semiprimes(unsigned bit_lo, unsigned bit_hi, std::size_t count,
                                         std::uint64_t seed);

}  // namespace splitfactor::bench
