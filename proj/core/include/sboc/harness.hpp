#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "sboc/engine.hpp"
#include "sboc/metrics.hpp"

namespace sboc {

struct SuiteConfig {
    std::vector<int> function_ids;  // empty selects the whole registry
    int runs = 10;
    std::uint64_t seed = 0;        // run r uses seed + r
    int budget_override = 0;       // 0 means 100 evaluations per dimension
    double threshold = kSuccessThreshold;
    SurrogateSpec surrogate;
    CompassOptions surrogate_search;
};

struct SuiteRunRecord {
    std::uint64_t seed = 0;
    RunStatus status = RunStatus::Success;
    std::string message;     // failure detail, empty for finished runs
    RunMetrics metrics;      // meaningful only for finished runs
    double best_f = 0.0;
    double wall_seconds = 0.0;
};

struct FunctionSummary {
    int id = 0;
    std::string name;
    int dimension = 0;
    bool midpoint_optimal = false;
    int budget = 0;
    std::vector<SuiteRunRecord> runs;
    int failed_runs = 0;
    // Medians over finished runs; NaN when every run failed.
    double median_delta_x = 0.0;
    double median_delta_f = 0.0;
    double median_gamma = 0.0;
    bool success = false;  // median_delta_f at or below the threshold
};

struct GroupStats {
    int functions = 0;
    int successes = 0;
    double rate = 0.0;
};

struct BenchmarkReport {
    int schema_version = 1;
    std::uint64_t master_seed = 0;
    int runs_per_function = 0;
    double threshold = kSuccessThreshold;
    std::string surrogate;  // "rbf", "kriging", or "custom"
    double success_rate = 0.0;  // fraction of functions marked success
    std::vector<FunctionSummary> functions;
    std::map<int, GroupStats> by_dimension;
    std::map<std::string, GroupStats> by_midpoint_class;  // "motf" / "non-motf"
};

/// Runs the whole benchmark protocol: per function and per seed one
/// independent optimizer run with budget 100N (unless overridden), metrics
/// per run, order-statistic medians per function, and aggregate success
/// rates.  Failed runs are excluded from medians but counted and reported.
BenchmarkReport run_suite(const SuiteConfig& config);

/// Versioned JSON report: summary block, per-function records with per-run
/// metrics, and the registry discrepancy list.
void write_report_json(std::ostream& out, const BenchmarkReport& report);

/// Flat delimited table, one row per (function, run), for spreadsheet use.
void write_report_csv(std::ostream& out, const BenchmarkReport& report);

/// Human-readable summary: overall success rate, group breakdowns, and one
/// success flag per function.
void print_summary(std::ostream& out, const BenchmarkReport& report);

}  // namespace sboc
