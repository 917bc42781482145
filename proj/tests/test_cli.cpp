#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "splitfactor/bench.hpp"

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

// Runs the installed binary with stderr dropped; stdout is captured.
RunResult run_cli(const std::string& args) {
    const std::string command = std::string("'") + SPLITFACTOR_BIN_PATH + "' " + args +
                                " 2>/dev/null";
    FILE* pipe = ::popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    char buffer[4096];
    std::size_t got = 0;
    while ((got = std::fread(buffer, 1, sizeof buffer, pipe)) > 0) {
        result.output.append(buffer, got);
    }
    const int status = ::pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::filesystem::path temp_csv(const std::string& stem) {
    return std::filesystem::temp_directory_path() /
           (stem + "-" + std::to_string(::getpid()) + ".csv");
}

}  // namespace

TEST_CASE("factor command") {
    const RunResult ok = run_cli("factor 125");
    CHECK(ok.exit_code == 0);
    CHECK(ok.output.find("125 = 5 * 5 * 5") == 0);
    CHECK(ok.output.find("inner_iterations=") != std::string::npos);

    CHECK(run_cli("factor 1").exit_code == 2);
    CHECK(run_cli("factor 0").exit_code == 2);
    CHECK(run_cli("factor -5").exit_code == 2);
    CHECK(run_cli("factor twelve").exit_code == 2);
    CHECK(run_cli("factor").exit_code == 2);
}

TEST_CASE("factor --json emits exactly one object") {
    const RunResult result = run_cli("factor 97 --json");
    CHECK(result.exit_code == 0);
    REQUIRE(!result.output.empty());
    // one line, one object, nothing else
    const auto newline = result.output.find('\n');
    REQUIRE(newline != std::string::npos);
    CHECK(newline == result.output.size() - 1);
    const auto doc = nlohmann::json::parse(result.output);
    CHECK(doc.at("n") == "97");
    CHECK(doc.at("factors") == nlohmann::json::array({"97"}));

    const auto composite = nlohmann::json::parse(run_cli("factor 360 --json").output);
    CHECK(composite.at("factors") ==
          nlohmann::json::array({"2", "2", "2", "3", "3", "5"}));
    CHECK(composite.at("inner_iterations").is_number_unsigned());
    CHECK(composite.at("split_pairs_examined").is_number_unsigned());
    CHECK(composite.at("elapsed_ns").is_number_unsigned());
}

TEST_CASE("verify command") {
    const RunResult small = run_cli("verify --max 1000");
    CHECK(small.exit_code == 0);
    CHECK(small.output.find("1000 checked, 0 mismatches") != std::string::npos);

    CHECK(run_cli("verify --max 10").exit_code == 0);
    CHECK(run_cli("verify --max 8").exit_code == 2);
    CHECK(run_cli("verify --max nope").exit_code == 2);
    CHECK(run_cli("verify").exit_code == 2);
}

TEST_CASE("selftest command") {
    const RunResult result = run_cli("selftest");
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("all checks passed") != std::string::npos);
    CHECK(result.output.find("FAIL") == std::string::npos);
}

TEST_CASE("bench command writes csv and prints the fit") {
    const auto path = temp_csv("splitfactor-cli-bench");
    const RunResult result =
        run_cli("bench --bits 16..26 --samples 12 --seed 3 --csv " + path.string());
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("slope=") != std::string::npos);
    const auto records = splitfactor::bench::read_records(path);
    CHECK(records.size() == 12);
    std::filesystem::remove(path);
}

TEST_CASE("bench command empty corpus") {
    const auto path = temp_csv("splitfactor-cli-bench-empty");
    const RunResult result = run_cli("bench --samples 0 --csv " + path.string());
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("fit unavailable") != std::string::npos);
    CHECK(splitfactor::bench::read_records(path).empty());
    std::filesystem::remove(path);
}

TEST_CASE("bench command error paths") {
    CHECK(run_cli("bench --csv /nonexistent-dir/out.csv --samples 0").exit_code == 3);
    const auto path = temp_csv("splitfactor-cli-bench-err");
    CHECK(run_cli("bench --algorithms quantum --csv " + path.string()).exit_code == 2);
    CHECK(run_cli("bench --bits 40..16 --samples 1 --csv " + path.string()).exit_code == 2);
    CHECK(run_cli("bench").exit_code == 2);
    std::filesystem::remove(path);
}

TEST_CASE("usage and help exit codes") {
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("conjure 125").exit_code == 2);
    CHECK(run_cli("factor 125 --frobnicate").exit_code == 2);
    CHECK(run_cli("--help").exit_code == 0);
}
