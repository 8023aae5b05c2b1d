#include "sboc/harness.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "json.hpp"

namespace sboc {

namespace {

const char* status_name(RunStatus status) {
    switch (status) {
        case RunStatus::Success:
            return "success";
        case RunStatus::ObjectiveFailure:
            return "objective-failure";
        case RunStatus::SurrogateFailure:
            return "surrogate-failure";
    }
    return "unknown";
}

const char* surrogate_name(SurrogateKind kind) {
    switch (kind) {
        case SurrogateKind::Rbf:
            return "rbf";
        case SurrogateKind::Kriging:
            return "kriging";
        case SurrogateKind::Custom:
            return "custom";
    }
    return "unknown";
}

GroupStats& bump(GroupStats& stats, bool success) {
    ++stats.functions;
    if (success) ++stats.successes;
    stats.rate = static_cast<double>(stats.successes) / stats.functions;
    return stats;
}

nlohmann::json run_to_json(const SuiteRunRecord& record) {
    nlohmann::json j;
    j["seed"] = record.seed;
    j["status"] = status_name(record.status);
    j["wall_seconds"] = record.wall_seconds;
    if (record.status == RunStatus::Success) {
        j["best_f"] = record.best_f;
        j["delta_x"] = record.metrics.delta_x;
        j["delta_f"] = record.metrics.delta_f;
        j["gamma"] = record.metrics.gamma;
        j["k_star"] = record.metrics.k_star;
        j["k_final"] = record.metrics.k_final;
    } else {
        j["message"] = record.message;
    }
    return j;
}

nlohmann::json group_to_json(const GroupStats& stats) {
    return {{"functions", stats.functions},
            {"successes", stats.successes},
            {"rate", stats.rate}};
}

}  // namespace

BenchmarkReport run_suite(const SuiteConfig& config) {
    if (config.runs < 1) throw std::invalid_argument("at least one run per function");
    if (!(config.threshold > 0.0)) throw std::invalid_argument("threshold must be positive");

    std::vector<const TestFunction*> selection;
    if (config.function_ids.empty()) {
        for (const auto& fn : function_registry()) selection.push_back(&fn);
    } else {
        for (int id : config.function_ids) {
            const TestFunction* fn = find_function(std::to_string(id));
            if (!fn) throw std::invalid_argument("unknown function id " + std::to_string(id));
            selection.push_back(fn);
        }
    }

    BenchmarkReport report;
    report.master_seed = config.seed;
    report.runs_per_function = config.runs;
    report.threshold = config.threshold;
    report.surrogate = surrogate_name(config.surrogate.kind);

    int successes = 0;
    for (const TestFunction* fn : selection) {
        FunctionSummary summary;
        summary.id = fn->id;
        summary.name = fn->name;
        summary.dimension = fn->dimension;
        summary.midpoint_optimal = fn->midpoint_optimal;
        summary.budget =
            config.budget_override > 0 ? config.budget_override : 100 * fn->dimension;

        const Objective objective = [fn](const Eigen::VectorXd& u) {
            return evaluate_normalized(*fn, u);
        };

        std::vector<double> dx, df, gamma;
        for (int r = 0; r < config.runs; ++r) {
            SbocConfig engine_config;
            engine_config.seed = config.seed + static_cast<std::uint64_t>(r);
            engine_config.max_evaluations = summary.budget;
            engine_config.surrogate = config.surrogate;
            engine_config.surrogate_search = config.surrogate_search;

            SuiteRunRecord record;
            record.seed = engine_config.seed;
            const auto started = std::chrono::steady_clock::now();
            const RunResult result = run(objective, fn->dimension, engine_config);
            record.wall_seconds =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
                    .count();
            record.status = result.status;
            record.message = result.message;
            if (result.status == RunStatus::Success) {
                record.best_f = result.best_y;
                record.metrics =
                    compute_metrics(result, *fn, summary.budget, config.threshold);
                dx.push_back(record.metrics.delta_x);
                df.push_back(record.metrics.delta_f);
                gamma.push_back(record.metrics.gamma);
            } else {
                ++summary.failed_runs;
            }
            summary.runs.push_back(std::move(record));
        }

        if (!df.empty()) {
            summary.median_delta_x = median(dx);
            summary.median_delta_f = median(df);
            summary.median_gamma = median(gamma);
            summary.success = summary.median_delta_f <= config.threshold;
        } else {
            summary.median_delta_x = std::nan("");
            summary.median_delta_f = std::nan("");
            summary.median_gamma = std::nan("");
            summary.success = false;
        }

        if (summary.success) ++successes;
        bump(report.by_dimension[summary.dimension], summary.success);
        bump(report.by_midpoint_class[summary.midpoint_optimal ? "motf" : "non-motf"],
             summary.success);
        report.functions.push_back(std::move(summary));
    }
    report.success_rate =
        report.functions.empty()
            ? 0.0
            : static_cast<double>(successes) / static_cast<double>(report.functions.size());
    return report;
}

void write_report_json(std::ostream& out, const BenchmarkReport& report) {
    nlohmann::json doc;
    doc["format"] = "sboc-benchmark-report";
    doc["schema_version"] = report.schema_version;
    doc["master_seed"] = report.master_seed;
    doc["runs_per_function"] = report.runs_per_function;
    doc["success_threshold"] = report.threshold;
    doc["surrogate"] = report.surrogate;
    doc["success_rate"] = report.success_rate;

    nlohmann::json by_dimension = nlohmann::json::object();
    for (const auto& [dimension, stats] : report.by_dimension) {
        by_dimension[std::to_string(dimension)] = group_to_json(stats);
    }
    nlohmann::json by_class = nlohmann::json::object();
    for (const auto& [name, stats] : report.by_midpoint_class) {
        by_class[name] = group_to_json(stats);
    }
    doc["summary"] = {{"by_dimension", by_dimension}, {"by_motf_class", by_class}};

    nlohmann::json discrepancies = nlohmann::json::array();
    for (const auto& entry : registry_discrepancies()) {
        discrepancies.push_back({{"id", entry.id},
                                 {"name", entry.name},
                                 {"listed", entry.listed},
                                 {"computed", entry.computed}});
    }
    doc["registry_discrepancies"] = discrepancies;

    nlohmann::json functions = nlohmann::json::array();
    for (const auto& summary : report.functions) {
        nlohmann::json j;
        j["id"] = summary.id;
        j["name"] = summary.name;
        j["dimension"] = summary.dimension;
        j["motf"] = summary.midpoint_optimal;
        j["budget"] = summary.budget;
        j["failed_runs"] = summary.failed_runs;
        j["median_delta_x"] = summary.median_delta_x;
        j["median_delta_f"] = summary.median_delta_f;
        j["median_gamma"] = summary.median_gamma;
        j["success"] = summary.success;
        nlohmann::json runs = nlohmann::json::array();
        for (const auto& record : summary.runs) runs.push_back(run_to_json(record));
        j["runs"] = runs;
        functions.push_back(std::move(j));
    }
    doc["functions"] = functions;

    out << doc.dump(2) << '\n';
}

void write_report_csv(std::ostream& out, const BenchmarkReport& report) {
    out << "id,name,dimension,motf,budget,seed,status,best_f,delta_x,delta_f,gamma,k_star,"
           "k_final,wall_seconds\n";
    char buffer[512];
    for (const auto& summary : report.functions) {
        for (const auto& record : summary.runs) {
            if (record.status == RunStatus::Success) {
                std::snprintf(buffer, sizeof(buffer),
                              "%d,%s,%d,%d,%d,%llu,%s,%.12g,%.12g,%.12g,%.12g,%d,%d,%.3f\n",
                              summary.id, summary.name.c_str(), summary.dimension,
                              summary.midpoint_optimal ? 1 : 0, summary.budget,
                              static_cast<unsigned long long>(record.seed),
                              status_name(record.status), record.best_f,
                              record.metrics.delta_x, record.metrics.delta_f,
                              record.metrics.gamma, record.metrics.k_star,
                              record.metrics.k_final, record.wall_seconds);
            } else {
                std::snprintf(buffer, sizeof(buffer), "%d,%s,%d,%d,%d,%llu,%s,,,,,,,%.3f\n",
                              summary.id, summary.name.c_str(), summary.dimension,
                              summary.midpoint_optimal ? 1 : 0, summary.budget,
                              static_cast<unsigned long long>(record.seed),
                              status_name(record.status), record.wall_seconds);
            }
            out << buffer;
        }
    }
}

void print_summary(std::ostream& out, const BenchmarkReport& report) {
    char buffer[256];
    std::snprintf(buffer, sizeof(buffer),
                  "success rate: %.4f (%d runs/function, threshold %.3g)\n",
                  report.success_rate, report.runs_per_function, report.threshold);
    out << buffer;
    for (const auto& [dimension, stats] : report.by_dimension) {
        std::snprintf(buffer, sizeof(buffer), "  N=%d: %d/%d\n", dimension, stats.successes,
                      stats.functions);
        out << buffer;
    }
    for (const auto& [name, stats] : report.by_midpoint_class) {
        std::snprintf(buffer, sizeof(buffer), "  %s: %d/%d\n", name.c_str(), stats.successes,
                      stats.functions);
        out << buffer;
    }
    for (const auto& summary : report.functions) {
        std::snprintf(buffer, sizeof(buffer), "%3d %-22s %s  median_df=%.6g\n", summary.id,
                      summary.name.c_str(), summary.success ? "pass" : "fail",
                      summary.median_delta_f);
        out << buffer;
    }
}

}  // namespace sboc
