#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "sboc/domain.hpp"
#include "sboc/engine.hpp"
#include "sboc/functions.hpp"
#include "sboc/harness.hpp"

#include "blackbox.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitArguments = 2;
constexpr int kExitObjectiveFailure = 3;
constexpr int kExitSurrogateFailure = 4;

/// The eight 2D benchmark functions used by the desk-scale suite.
const std::vector<int> k2dSuite = {1, 4, 5, 9, 24, 28, 43, 44};

struct RunArgs {
    std::string fn;
    std::string exec;
    std::string bounds;
    std::string surrogate = "rbf";
    int kmax = 0;
    int k0 = 0;
    std::uint64_t seed = 0;
    std::string trace_path;
    std::string init_points_path;
    bool persistent = false;
    double timeout = 30.0;
};

struct BenchArgs {
    std::string suite = "all";
    std::string ids;
    int runs = 10;
    std::uint64_t seed = 0;
    std::string out_path = "report.json";
    std::string csv_path;
    std::string surrogate = "rbf";
    int kmax = 0;
};

sboc::SurrogateSpec surrogate_from_name(const std::string& name) {
    sboc::SurrogateSpec spec;
    spec.kind = name == "kriging" ? sboc::SurrogateKind::Kriging : sboc::SurrogateKind::Rbf;
    return spec;
}

sboc::BoxDomain parse_bounds(const std::string& text) {
    std::vector<double> lower, upper;
    std::stringstream stream(text);
    std::string pair;
    while (std::getline(stream, pair, ';')) {
        const auto comma = pair.find(',');
        if (comma == std::string::npos) {
            throw std::invalid_argument("bounds must look like \"l1,u1;l2,u2\"");
        }
        lower.push_back(std::stod(pair.substr(0, comma)));
        upper.push_back(std::stod(pair.substr(comma + 1)));
    }
    if (lower.empty()) throw std::invalid_argument("empty bounds");
    return sboc::BoxDomain(
        Eigen::Map<const Eigen::VectorXd>(lower.data(), static_cast<Eigen::Index>(lower.size())),
        Eigen::Map<const Eigen::VectorXd>(upper.data(), static_cast<Eigen::Index>(upper.size())));
}

/// Reads one raw-unit point per non-empty line (values separated by spaces
/// or commas) and normalizes each into the unit cube.
std::vector<Eigen::VectorXd> read_init_points(const std::string& path,
                                              const sboc::BoxDomain& domain) {
    std::ifstream file(path);
    if (!file) throw std::invalid_argument("cannot open init-points file: " + path);
    std::vector<Eigen::VectorXd> points;
    std::string line;
    while (std::getline(file, line)) {
        for (char& c : line) {
            if (c == ',') c = ' ';
        }
        std::istringstream row(line);
        std::vector<double> values;
        double v = 0.0;
        while (row >> v) values.push_back(v);
        if (values.empty()) continue;
        if (static_cast<int>(values.size()) != domain.dimension()) {
            throw std::invalid_argument("init point dimension mismatch in " + path);
        }
        points.push_back(domain.normalize(Eigen::Map<const Eigen::VectorXd>(
            values.data(), static_cast<Eigen::Index>(values.size()))));
    }
    if (points.empty()) throw std::invalid_argument("no points in " + path);
    return points;
}

void print_run_result(const sboc::RunResult& result, const sboc::BoxDomain& domain) {
    const char* status = result.status == sboc::RunStatus::Success ? "success"
                         : result.status == sboc::RunStatus::ObjectiveFailure
                             ? "objective-failure"
                             : "surrogate-failure";
    std::printf("status: %s\n", status);
    std::printf("evaluations: %zu\n", result.trace.size());
    if (result.best_x.size() > 0) {
        const Eigen::VectorXd raw = domain.denormalize(result.best_x);
        std::printf("xbest:");
        for (Eigen::Index d = 0; d < raw.size(); ++d) std::printf(" %.12g", raw[d]);
        std::printf("\nfbest: %.12g\n", result.best_y);
    }
}

int cmd_run(const RunArgs& args) {
    try {
        std::unique_ptr<sboc::BoxDomain> domain;
        sboc::Objective objective;
        std::unique_ptr<sboc::tools::BlackBoxEvaluator> evaluator;
        int dimension = 0;

        if (!args.fn.empty()) {
            const sboc::TestFunction* fn = sboc::find_function(args.fn);
            if (!fn) {
                std::cerr << "unknown function: " << args.fn << "\n";
                return kExitArguments;
            }
            dimension = fn->dimension;
            domain = std::make_unique<sboc::BoxDomain>(fn->domain());
            objective = [fn](const Eigen::VectorXd& u) {
                return sboc::evaluate_normalized(*fn, u);
            };
        } else {
            domain = std::make_unique<sboc::BoxDomain>(parse_bounds(args.bounds));
            dimension = domain->dimension();
            sboc::tools::BlackBoxOptions options;
            options.mode = args.persistent ? sboc::tools::InvocationMode::Persistent
                                           : sboc::tools::InvocationMode::PerCall;
            options.timeout_seconds = args.timeout;
            evaluator =
                std::make_unique<sboc::tools::BlackBoxEvaluator>(args.exec, options);
            const sboc::BoxDomain* box = domain.get();
            auto* child = evaluator.get();
            objective = [box, child](const Eigen::VectorXd& u) {
                return child->evaluate(box->denormalize(u));
            };
        }

        sboc::SbocConfig config;
        config.seed = args.seed;
        config.max_evaluations = args.kmax > 0 ? args.kmax : 100 * dimension;
        config.initial_points = args.k0;
        config.surrogate = surrogate_from_name(args.surrogate);
        if (!args.init_points_path.empty()) {
            config.initial_design = read_init_points(args.init_points_path, *domain);
        }

        const sboc::RunResult result = sboc::run(objective, dimension, config);

        if (!args.trace_path.empty()) {
            std::ofstream trace(args.trace_path);
            if (!trace) {
                std::cerr << "cannot write trace file: " << args.trace_path << "\n";
                return kExitArguments;
            }
            sboc::write_trace(trace, result);
        }
        print_run_result(result, *domain);
        if (evaluator && static_cast<std::size_t>(evaluator->call_count()) !=
                             result.trace.size()) {
            std::cerr << "internal error: evaluator call count diverged from the trace\n";
            return kExitObjectiveFailure;
        }
        if (result.status == sboc::RunStatus::ObjectiveFailure) {
            std::cerr << "objective failure: " << result.message << "\n";
            return kExitObjectiveFailure;
        }
        if (result.status == sboc::RunStatus::SurrogateFailure) {
            std::cerr << "surrogate failure: " << result.message << "\n";
            return kExitSurrogateFailure;
        }
        return kExitOk;
    } catch (const sboc::ObjectiveFailure& failure) {
        std::cerr << "objective failure: " << failure.what() << "\n";
        return kExitObjectiveFailure;
    } catch (const sboc::SurrogateFailure& failure) {
        std::cerr << "surrogate failure: " << failure.what() << "\n";
        return kExitSurrogateFailure;
    } catch (const std::exception& error) {
        std::cerr << "error: " << error.what() << "\n";
        return kExitArguments;
    }
}

int cmd_bench(const BenchArgs& args) {
    try {
        sboc::SuiteConfig config;
        if (!args.ids.empty()) {
            std::stringstream stream(args.ids);
            std::string token;
            while (std::getline(stream, token, ',')) {
                if (!token.empty()) config.function_ids.push_back(std::stoi(token));
            }
        } else if (args.suite == "2d") {
            config.function_ids = k2dSuite;
        } else if (args.suite != "all") {
            std::cerr << "unknown suite: " << args.suite << "\n";
            return kExitArguments;
        }
        config.runs = args.runs;
        config.seed = args.seed;
        config.budget_override = args.kmax;
        config.surrogate = surrogate_from_name(args.surrogate);

        const sboc::BenchmarkReport report = sboc::run_suite(config);

        std::ofstream out(args.out_path);
        if (!out) {
            std::cerr << "cannot write report file: " << args.out_path << "\n";
            return kExitArguments;
        }
        sboc::write_report_json(out, report);
        if (!args.csv_path.empty()) {
            std::ofstream csv(args.csv_path);
            if (!csv) {
                std::cerr << "cannot write table file: " << args.csv_path << "\n";
                return kExitArguments;
            }
            sboc::write_report_csv(csv, report);
        }
        sboc::print_summary(std::cout, report);
        return kExitOk;
    } catch (const std::exception& error) {
        std::cerr << "error: " << error.what() << "\n";
        return kExitArguments;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"surrogate-based black-box optimizer"};
    app.require_subcommand(1);

    RunArgs run_args;
    CLI::App* run = app.add_subcommand("run", "optimize one objective");
    auto* fn_opt = run->add_option("--fn", run_args.fn, "benchmark function name or id");
    auto* exec_opt =
        run->add_option("--exec", run_args.exec, "external evaluator executable");
    auto* bounds_opt = run->add_option("--bounds", run_args.bounds,
                                       "box bounds as \"l1,u1;l2,u2;...\" (with --exec)");
    fn_opt->excludes(exec_opt);
    exec_opt->needs(bounds_opt);
    run->add_option("--surrogate", run_args.surrogate, "model family")
        ->check(CLI::IsMember({"rbf", "kriging"}));
    run->add_option("--kmax", run_args.kmax, "evaluation budget (default 100 per dimension)")
        ->check(CLI::PositiveNumber);
    run->add_option("--k0", run_args.k0, "initial design size (default 5 per dimension)")
        ->check(CLI::PositiveNumber);
    run->add_option("--seed", run_args.seed, "random seed");
    run->add_option("--trace", run_args.trace_path, "write the evaluation trace CSV here");
    run->add_option("--init-points", run_args.init_points_path,
                    "file of raw-unit initial points, one per line");
    run->add_flag("--persistent", run_args.persistent,
                  "keep one evaluator process alive (line protocol)");
    run->add_option("--timeout", run_args.timeout, "evaluator timeout in seconds")
        ->check(CLI::PositiveNumber);

    BenchArgs bench_args;
    CLI::App* bench = app.add_subcommand("bench", "run the benchmark suite");
    bench->add_option("--suite", bench_args.suite, "all or 2d")
        ->check(CLI::IsMember({"all", "2d"}));
    bench->add_option("--ids", bench_args.ids, "comma-separated function ids");
    bench->add_option("--runs", bench_args.runs, "runs per function")
        ->check(CLI::PositiveNumber);
    bench->add_option("--seed", bench_args.seed, "master seed; run r uses seed + r");
    bench->add_option("--out", bench_args.out_path, "JSON report path");
    bench->add_option("--csv", bench_args.csv_path, "also write a flat CSV table here");
    bench->add_option("--surrogate", bench_args.surrogate, "model family")
        ->check(CLI::IsMember({"rbf", "kriging"}));
    bench->add_option("--kmax", bench_args.kmax, "budget override (default 100 per dimension)")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitArguments;
    }

    if (run->parsed()) {
        if (run_args.fn.empty() == run_args.exec.empty()) {
            std::cerr << "exactly one of --fn or --exec is required\n";
            return kExitArguments;
        }
        return cmd_run(run_args);
    }
    return cmd_bench(bench_args);
}
