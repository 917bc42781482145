#include "splitfactor/bench.hpp"

#include "splitfactor/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace splitfactor::bench {

namespace mp = boost::multiprecision;

std::string to_label(Algorithm algorithm) {
    switch (algorithm) {
    case Algorithm::SplitSearch:
        return "split-search";
    case Algorithm::TrialDivision:
        return "trial-division";
    case Algorithm::PollardRho:
        return "pollard-rho";
    }
    throw std::logic_error("to_label: bad algorithm");
}

std::string to_label(RunOutcome outcome) {
    switch (outcome) {
    case RunOutcome::Found:
        return "found";
    case RunOutcome::NoFactor:
        return "no-factor";
    case RunOutcome::Even:
        return "even";
    }
    throw std::logic_error("to_label: bad outcome");
}

Algorithm algorithm_from_label(const std::string& label) {
    if (label == "split-search") {
        return Algorithm::SplitSearch;
    }
    if (label == "trial-division") {
        return Algorithm::TrialDivision;
    }
    if (label == "pollard-rho") {
        return Algorithm::PollardRho;
    }
    throw std::invalid_argument("unknown algorithm label: '" + label + "'");
}

RunOutcome outcome_from_label(const std::string& label) {
    if (label == "found") {
        return RunOutcome::Found;
    }
    if (label == "no-factor") {
        return RunOutcome::NoFactor;
    }
    if (label == "even") {
        return RunOutcome::Even;
    }
    throw std::invalid_argument("unknown outcome label: '" + label + "'");
}

namespace {

std::uint64_t elapsed_ns_since(std::chrono::steady_clock::time_point start) {
    const auto ns = std::chrono::duration_cast<std::chrono::nanoseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    return ns > 0 ? static_cast<std::uint64_t>(ns) : 1;
}

BenchRecord run_split_search(const Natural& n) {
    BenchRecord record;
    const FactorOutcome outcome = factor_step(n);
    record.inner_iterations = outcome.stats.inner_iterations;
    record.split_pairs_examined = outcome.stats.split_pairs_examined;
    record.elapsed_ns = outcome.stats.elapsed.count() > 0
                            ? static_cast<std::uint64_t>(outcome.stats.elapsed.count())
                            : 1;
    switch (outcome.result) {
    case FactorResult::Found:
        record.outcome = RunOutcome::Found;
        break;
    case FactorResult::NoNontrivialFactor:
        record.outcome = RunOutcome::NoFactor;
        break;
    case FactorResult::TrivialEven:
        record.outcome = RunOutcome::Even;
        break;
    }
    return record;
}

BenchRecord run_trial_division(const Natural& n) {
    BenchRecord record;
    const auto start = std::chrono::steady_clock::now();
    const oracle::PrimalityVerdict verdict = oracle::trial_division_smallest_factor(n);
    record.elapsed_ns = elapsed_ns_since(start);
    record.outcome = verdict.prime ? RunOutcome::NoFactor : RunOutcome::Found;
    return record;
}

BenchRecord run_pollard_rho(const Natural& n) {
    BenchRecord record;
    const auto start = std::chrono::steady_clock::now();
    if (!mp::bit_test(n, 0)) {
        record.outcome = RunOutcome::Even;  // outside rho's domain, skipped
    } else if (oracle::is_prime(n)) {
        record.outcome = RunOutcome::NoFactor;
    } else if (oracle::pollard_rho(n)) {
        record.outcome = RunOutcome::Found;
    } else {
        // Rho exhausted its retries; trial division settles the composite.
        oracle::trial_division_smallest_factor(n);
        record.outcome = RunOutcome::Found;
    }
    record.elapsed_ns = elapsed_ns_since(start);
    return record;
}

}  // namespace

std::vector<BenchRecord> run_benchmark(const std::vector<Natural>& inputs,
                                       const std::vector<Algorithm>& algorithms) {
    if (algorithms.empty()) {
        throw std::invalid_argument("run_benchmark: no algorithm selected");
    }
    for (const Natural& n : inputs) {
        if (n < 2) {
            throw std::domain_error("run_benchmark: every input must be >= 2");
        }
    }
    std::vector<BenchRecord> records;
    records.reserve(inputs.size() * algorithms.size());
    for (const Natural& n : inputs) {
        for (const Algorithm algorithm : algorithms) {
            BenchRecord record;
            switch (algorithm) {
            case Algorithm::SplitSearch:
                record = run_split_search(n);
                break;
            case Algorithm::TrialDivision:
                record = run_trial_division(n);
                break;
            case Algorithm::PollardRho:
                record = run_pollard_rho(n);
                break;
            }
            record.n = n;
            record.bits = bit_length(n);
            record.algorithm = algorithm;
            records.push_back(std::move(record));
        }
    }
    return records;
}

std::optional<ComplexityFit> fit_complexity(const std::vector<BenchRecord>& records,
                                            Algorithm algorithm) {
    std::vector<double> xs;
    std::vector<double> ys;
    for (const BenchRecord& record : records) {
        if (record.algorithm != algorithm || record.outcome != RunOutcome::Found ||
            record.inner_iterations == 0) {
            continue;
        }
        xs.push_back(std::log2(record.n.convert_to<double>()));
        ys.push_back(std::log2(static_cast<double>(record.inner_iterations)));
    }
    if (xs.size() < 10) {
        return std::nullopt;
    }
    const auto [min_x, max_x] = std::minmax_element(xs.begin(), xs.end());
    if (*min_x == *max_x) {
        return std::nullopt;  // degenerate: all inputs identical
    }
    double mean_x = 0;
    double mean_y = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mean_x += xs[i];
        mean_y += ys[i];
    }
    mean_x /= static_cast<double>(xs.size());
    mean_y /= static_cast<double>(xs.size());
    double sxx = 0;
    double sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - mean_x) * (xs[i] - mean_x);
        sxy += (xs[i] - mean_x) * (ys[i] - mean_y);
    }
    ComplexityFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = mean_y - fit.slope * mean_x;
    fit.sample_count = xs.size();
    return fit;
}

void write_records(const std::vector<BenchRecord>& records, std::ostream& out) {
    out << kCsvHeader << '\n';
    for (const BenchRecord& record : records) {
        out << record.n.str() << ',' << record.bits << ',' << to_label(record.algorithm) << ','
            << record.inner_iterations << ',' << record.split_pairs_examined << ','
            << record.elapsed_ns << ',' << to_label(record.outcome) << '\n';
    }
}

void write_records(const std::vector<BenchRecord>& records,
                   const std::filesystem::path& destination) {
    std::ofstream out(destination, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open for writing: " + destination.string());
    }
    write_records(records, out);
    out.flush();
    if (!out) {
        throw std::runtime_error("write failed: " + destination.string());
    }
}

namespace {

std::uint64_t parse_counter(const std::string& field) {
    std::size_t consumed = 0;
    const std::uint64_t value = std::stoull(field, &consumed);
    if (consumed != field.size()) {
        throw std::invalid_argument("trailing garbage in numeric field: '" + field + "'");
    }
    return value;
}

BenchRecord parse_record_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string::size_type start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        fields.push_back(line.substr(start, comma == std::string::npos ? comma : comma - start));
        if (comma == std::string::npos) {
            break;
        }
        start = comma + 1;
    }
    if (fields.size() != 7) {
        throw std::runtime_error("expected 7 fields, got " + std::to_string(fields.size()) +
                                 ": '" + line + "'");
    }
    BenchRecord record;
    record.n = parse_natural(fields[0]);
    record.bits = static_cast<unsigned>(parse_counter(fields[1]));
    record.algorithm = algorithm_from_label(fields[2]);
    record.inner_iterations = parse_counter(fields[3]);
    record.split_pairs_examined = parse_counter(fields[4]);
    record.elapsed_ns = parse_counter(fields[5]);
    record.outcome = outcome_from_label(fields[6]);
    return record;
}

}  // namespace

std::vector<BenchRecord> read_records(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != kCsvHeader) {
        throw std::runtime_error("missing or malformed record header");
    }
    std::vector<BenchRecord> records;
    while (std::getline(in, line)) {
        try {
            records.push_back(parse_record_line(line));
        } catch (const std::exception& error) {
            throw std::runtime_error("bad record on line " +
                                     std::to_string(records.size() + 2) + ": " + error.what());
        }
    }
    return records;
}

std::vector<BenchRecord> read_records(const std::filesystem::path& source) {
    std::ifstream in(source, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open for reading: " + source.string());
    }
    try {
        return read_records(in);
    } catch (const std::exception& error) {
        throw std::runtime_error(source.string() + ": " + error.what());
    }
}

namespace {

Natural random_odd_with_bits(unsigned bits, std::mt19937_64& rng) {
    Natural value = 0;
    for (unsigned produced = 0; produced < bits; produced += 64) {
        value <<= 64;
        value |= Natural(rng());
    }
    value &= pow2(bits) - 1;
    mp::bit_set(value, bits - 1);
    mp::bit_set(value, 0);
    return value;
}

}  // namespace

std::vector<Natural> balanced_semiprimes(unsigned bit_lo, unsigned bit_hi, std::size_t count,
                                         std::uint64_t seed) {
    if (bit_lo < 4 || bit_hi < bit_lo) {
        throw std::invalid_argument("balanced_semiprimes: need 4 <= bit_lo <= bit_hi");
    }
    std::mt19937_64 rng(seed);
    std::vector<Natural> out;
    out.reserve(count);
    unsigned target = bit_lo;
    while (out.size() < count) {
        const unsigned half = (target + 1) / 2;
        for (int attempt = 0;; ++attempt) {
            if (attempt > 200000) {
                throw std::logic_error("balanced_semiprimes: rejection sampling stalled");
            }
            const Natural p = random_odd_with_bits(half, rng);
            const Natural q = random_odd_with_bits(half, rng);
            if (!oracle::is_prime(p) || !oracle::is_prime(q)) {
                continue;
            }
            Natural n = p * q;
            if (bit_length(n) != target) {
                continue;
            }
            out.push_back(std::move(n));
            break;
        }
        target = target == bit_hi ? bit_lo : target + 1;
    }
    return out;
}

}  // namespace splitfactor::bench
