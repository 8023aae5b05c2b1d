#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/stat.h>
#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "blackbox.hpp"

#ifndef SBOC_CLI_PATH
#error "SBOC_CLI_PATH must point at the command-line binary"
#endif
#ifndef SBOC_TEST_DATA_DIR
#error "SBOC_TEST_DATA_DIR must point at the fixture directory"
#endif

namespace {

struct CommandResult {
    int exit_code = -1;
    std::string output;  // standard output only
};

CommandResult run_command(const std::string& command) {
    CommandResult result;
    FILE* pipe = popen((command + " 2>/dev/null").c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buffer[4096];
    while (std::fgets(buffer, sizeof(buffer), pipe)) result.output += buffer;
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

/// Scratch directory shared by every case in this binary.
const std::string& scratch_dir() {
    static const std::string dir = [] {
        std::string templ = "/tmp/sboc-cli-XXXXXX";
        char* made = mkdtemp(templ.data());
        REQUIRE(made != nullptr);
        return std::string(made);
    }();
    return dir;
}

std::string write_script(const std::string& name, const std::string& body) {
    const std::string path = scratch_dir() + "/" + name;
    {
        std::ofstream file(path);
        REQUIRE(file.good());
        file << "#!/bin/sh\n" << body;
    }
    REQUIRE(::chmod(path.c_str(), 0755) == 0);
    return path;
}

std::string read_file(const std::string& path) {
    std::ifstream file(path);
    REQUIRE(file.good());
    std::ostringstream text;
    text << file.rdbuf();
    return text.str();
}

/// Extracts the numbers following "name:" in the CLI's run output.
std::vector<double> parse_field(const std::string& output, const std::string& name) {
    const auto at = output.find(name + ":");
    REQUIRE(at != std::string::npos);
    const auto end = output.find('\n', at);
    std::istringstream row(output.substr(at + name.size() + 1, end - at - name.size() - 1));
    std::vector<double> values;
    double v = 0.0;
    while (row >> v) values.push_back(v);
    return values;
}

const std::string kCli = SBOC_CLI_PATH;
const std::string kDataDir = SBOC_TEST_DATA_DIR;

Eigen::VectorXd vec1(double a) {
    Eigen::VectorXd v(1);
    v << a;
    return v;
}

}  // namespace

// ---------------------------------------------------------------------------
// External-evaluator protocol, exercised in-process.

TEST_CASE("per-call evaluator computes and counts") {
    const std::string script = write_script("sum.sh", "echo \"$1 $2\" | awk '{print $1 + $2}'\n");
    sboc::tools::BlackBoxEvaluator evaluator(script);
    Eigen::VectorXd x(2);
    x << 1.5, 2.5;
    CHECK(evaluator.evaluate(x) == 4.0);
    CHECK(evaluator.evaluate(x) == 4.0);
    CHECK(evaluator.call_count() == 2);
}

TEST_CASE("coordinates survive the argument round-trip exactly") {
    const std::string script = write_script("echoback.sh", "echo \"$1\"\n");
    sboc::tools::BlackBoxEvaluator evaluator(script);
    for (double value : {0.12345678901234567, -1.0 / 3.0, 1e-12, 17.0}) {
        CHECK(evaluator.evaluate(vec1(value)) == value);
    }
}

TEST_CASE("non-numeric output is rejected") {
    const std::string nan_script = write_script("nan.sh", "echo nan\n");
    sboc::tools::BlackBoxEvaluator nan_eval(nan_script);
    CHECK_THROWS_AS(nan_eval.evaluate(vec1(0.5)), sboc::tools::NonNumericOutput);

    const std::string words = write_script("words.sh", "echo not a number\n");
    sboc::tools::BlackBoxEvaluator words_eval(words);
    CHECK_THROWS_AS(words_eval.evaluate(vec1(0.5)), sboc::tools::NonNumericOutput);

    const std::string two = write_script("two.sh", "echo 1.0 2.0\n");
    sboc::tools::BlackBoxEvaluator two_eval(two);
    CHECK_THROWS_AS(two_eval.evaluate(vec1(0.5)), sboc::tools::NonNumericOutput);

    CHECK(nan_eval.call_count() == 0);  // failures do not count
}

TEST_CASE("a silent child runs into the timeout") {
    const std::string script = write_script("slow.sh", "sleep 5\necho 1.0\n");
    sboc::tools::BlackBoxOptions options;
    options.timeout_seconds = 0.2;
    sboc::tools::BlackBoxEvaluator evaluator(script, options);
    CHECK_THROWS_AS(evaluator.evaluate(vec1(0.5)), sboc::tools::Timeout);
}

TEST_CASE("a non-zero exit status is an objective failure") {
    const std::string script = write_script("fail.sh", "exit 3\n");
    sboc::tools::BlackBoxEvaluator evaluator(script);
    CHECK_THROWS_AS(evaluator.evaluate(vec1(0.5)), sboc::tools::NonZeroExit);
}

TEST_CASE("persistent mode exchanges lines over one process") {
    const std::string script = write_script(
        "persist.sh", "while read a b; do echo \"$a $b\" | awk '{print $1 * $2}'; done\n");
    sboc::tools::BlackBoxOptions options;
    options.mode = sboc::tools::InvocationMode::Persistent;
    sboc::tools::BlackBoxEvaluator evaluator(script, options);
    Eigen::VectorXd x(2);
    x << 3.0, 4.0;
    CHECK(evaluator.evaluate(x) == 12.0);
    x << 0.5, 0.5;
    CHECK(evaluator.evaluate(x) == 0.25);
    CHECK(evaluator.call_count() == 2);
}

TEST_CASE("a persistent child dying mid-session is reported") {
    const std::string script = write_script("once.sh", "read a\necho 5.0\n");
    sboc::tools::BlackBoxOptions options;
    options.mode = sboc::tools::InvocationMode::Persistent;
    options.timeout_seconds = 2.0;
    sboc::tools::BlackBoxEvaluator evaluator(script, options);
    CHECK(evaluator.evaluate(vec1(0.5)) == 5.0);
    CHECK_THROWS_AS(evaluator.evaluate(vec1(0.6)), sboc::ObjectiveFailure);
}

// ---------------------------------------------------------------------------
// The command-line binary.

TEST_CASE("run on a named function writes a reproducible trace") {
    const std::string t1 = scratch_dir() + "/t1.csv";
    const std::string t2 = scratch_dir() + "/t2.csv";
    const std::string base = kCli + " run --fn 1 --kmax 30 --seed 3 --trace ";

    const CommandResult first = run_command(base + t1);
    CHECK(first.exit_code == 0);
    CHECK(first.output.find("status: success") != std::string::npos);
    REQUIRE(parse_field(first.output, "fbest").size() == 1);
    CHECK(parse_field(first.output, "xbest").size() == 2);

    const CommandResult second = run_command(base + t2);
    CHECK(second.exit_code == 0);

    const std::string trace1 = read_file(t1);
    CHECK(trace1 == read_file(t2));  // byte-identical reruns
    CHECK(trace1.rfind("iter,K,strategy,x1,x2,f,xbest1,xbest2,fbest\n", 0) == 0);
}

TEST_CASE("run reports original-unit coordinates") {
    // Function 1 lives on [-2,2] x [-1,1]; its best point must stay inside.
    const CommandResult result = run_command(kCli + " run --fn 1 --kmax 40 --seed 9");
    CHECK(result.exit_code == 0);
    const auto xbest = parse_field(result.output, "xbest");
    REQUIRE(xbest.size() == 2);
    CHECK(xbest[0] >= -2.0);
    CHECK(xbest[0] <= 2.0);
    CHECK(xbest[1] >= -1.0);
    CHECK(xbest[1] <= 1.0);
    const auto fbest = parse_field(result.output, "fbest");
    REQUIRE(fbest.size() == 1);
    CHECK(fbest[0] < 0.0);  // well below the function's mean level by then
}

TEST_CASE("a full-budget run converges on the classic 2D valley") {
    const CommandResult result = run_command(kCli + " run --fn branin --kmax 200 --seed 1");
    CHECK(result.exit_code == 0);
    const auto fbest = parse_field(result.output, "fbest");
    REQUIRE(fbest.size() == 1);
    // Nothing can undercut the true optimum; a sane run gets close to it.
    CHECK(fbest[0] >= 0.3978873577297);
    CHECK(fbest[0] <= 0.41);
}

TEST_CASE("run drives an external evaluator within its declared bounds") {
    const std::string log = scratch_dir() + "/args.log";
    const std::string script = write_script(
        "logger.sh", "echo \"$1\" >> " + log + "\necho \"$1\"\n");
    const CommandResult result = run_command(
        kCli + " run --exec " + script + " --bounds \"-2,3\" --kmax 15 --seed 4");
    CHECK(result.exit_code == 0);

    std::istringstream lines(read_file(log));
    std::string line;
    int rows = 0;
    while (std::getline(lines, line)) {
        if (line.empty()) continue;
        ++rows;
        const double v = std::stod(line);
        CHECK(v >= -2.0 - 1e-9);
        CHECK(v <= 3.0 + 1e-9);
    }
    CHECK(rows >= 15);
}

TEST_CASE("run minimizes a linear external objective to its corner") {
    const std::string script = write_script("identity.sh", "echo \"$1\"\n");
    const CommandResult result = run_command(
        kCli + " run --exec " + script + " --bounds \"0,1\" --kmax 25 --seed 2");
    CHECK(result.exit_code == 0);
    const auto xbest = parse_field(result.output, "xbest");
    REQUIRE(xbest.size() == 1);
    CHECK(xbest[0] <= 0.01);
}

TEST_CASE("run supports the persistent line protocol end to end") {
    const std::string script = write_script(
        "persist1.sh", "while read a; do echo \"$a\" | awk '{print $1 * $1}'; done\n");
    const CommandResult result = run_command(
        kCli + " run --exec " + script + " --persistent --bounds \"-1,1\" --kmax 20 --seed 6");
    CHECK(result.exit_code == 0);
    const auto xbest = parse_field(result.output, "xbest");
    REQUIRE(xbest.size() == 1);
    CHECK(std::abs(xbest[0]) < 0.05);  // x^2 bottoms out at the origin
}

TEST_CASE("a user-supplied initial design seeds the archive verbatim") {
    const std::string trace = scratch_dir() + "/fixture.csv";
    const CommandResult result = run_command(
        kCli + " run --fn 1 --init-points " + kDataDir + "/init_points_2d.txt" +
        " --kmax 12 --seed 5 --trace " + trace);
    CHECK(result.exit_code == 0);

    std::istringstream lines(read_file(trace));
    std::string line;
    REQUIRE(std::getline(lines, line));  // header
    REQUIRE(std::getline(lines, line));  // first evaluation
    std::stringstream row(line);
    std::string cell;
    std::vector<std::string> cells;
    while (std::getline(row, cell, ',')) cells.push_back(cell);
    REQUIRE(cells.size() == 9);
    CHECK(cells[2] == "initial");
    CHECK(std::abs(std::stod(cells[3]) - 0.55780029033203926) < 1e-11);
    CHECK(std::abs(std::stod(cells[4]) - 0.97480034102225621) < 1e-11);

    int rows = 1;
    while (std::getline(lines, line)) {
        if (!line.empty()) ++rows;
    }
    CHECK(rows >= 12);
}

TEST_CASE("objective failures exit with the objective status code") {
    const std::string nan_script = write_script("cli_nan.sh", "echo nan\n");
    const CommandResult bad = run_command(
        kCli + " run --exec " + nan_script + " --bounds \"0,1\" --kmax 20 --seed 1");
    CHECK(bad.exit_code == 3);
    CHECK(bad.output.find("status: objective-failure") != std::string::npos);

    const std::string exit_script = write_script("cli_fail.sh", "exit 7\n");
    const CommandResult dead = run_command(
        kCli + " run --exec " + exit_script + " --bounds \"0,1\" --kmax 20 --seed 1");
    CHECK(dead.exit_code == 3);

    const std::string slow_script = write_script("cli_slow.sh", "sleep 5\necho 1\n");
    const CommandResult late = run_command(
        kCli + " run --exec " + slow_script +
        " --bounds \"0,1\" --kmax 20 --seed 1 --timeout 0.3");
    CHECK(late.exit_code == 3);
}

TEST_CASE("argument errors exit with status 2") {
    CHECK(run_command(kCli + " run --kmax 10").exit_code == 2);  // no objective
    CHECK(run_command(kCli + " run --fn no-such-function --kmax 10").exit_code == 2);
    CHECK(run_command(kCli + " run --fn 1 --surrogate bogus").exit_code == 2);
    CHECK(run_command(kCli + " run --exec /bin/true").exit_code == 2);  // bounds missing
    CHECK(run_command(kCli + " bench --suite bogus").exit_code == 2);
    CHECK(run_command(kCli).exit_code == 2);  // a subcommand is required
    CHECK(run_command(kCli + " run --fn 1 --kmax 0").exit_code == 2);
}

TEST_CASE("help exits cleanly") {
    const CommandResult help = run_command(kCli + " --help");
    CHECK(help.exit_code == 0);
    CHECK(help.output.find("run") != std::string::npos);
    CHECK(help.output.find("bench") != std::string::npos);
}

TEST_CASE("the kriging family is selectable end to end") {
    const CommandResult result = run_command(
        kCli + " run --fn 1 --surrogate kriging --kmax 15 --seed 1");
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("status: success") != std::string::npos);
}

TEST_CASE("bench writes the report and the table") {
    const std::string json_path = scratch_dir() + "/report.json";
    const std::string csv_path = scratch_dir() + "/report.csv";
    const CommandResult result = run_command(
        kCli + " bench --ids 1 --runs 2 --seed 1 --kmax 25 --out " + json_path +
        " --csv " + csv_path);
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("success rate:") != std::string::npos);

    const std::string json_text = read_file(json_path);
    CHECK(json_text.find("\"format\": \"sboc-benchmark-report\"") != std::string::npos);
    CHECK(json_text.find("\"six-hump-camel-back\"") != std::string::npos);

    const std::string csv_text = read_file(csv_path);
    CHECK(csv_text.rfind("id,name,dimension,motf,budget,seed,status,", 0) == 0);
}

TEST_CASE("the 2d suite selector expands to its eight functions") {
    const std::string json_path = scratch_dir() + "/suite2d.json";
    // One run at a tiny budget keeps this a wiring check, not a benchmark.
    const CommandResult result = run_command(
        kCli + " bench --suite 2d --runs 1 --seed 2 --kmax 12 --out " + json_path);
    CHECK(result.exit_code == 0);
    const std::string text = read_file(json_path);
    for (const char* name : {"six-hump-camel-back", "beale", "branin", "goldstein-price",
                             "levy-13", "booth", "exponential-2d", "hosaki"}) {
        CHECK(text.find(name) != std::string::npos);
    }
}
