#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "sboc/dataset.hpp"
#include "sboc/minimize.hpp"
#include "sboc/surrogate.hpp"

namespace sboc {

/// How an evaluated point was proposed.
enum class Strategy { Initial, SurrogateMin, Explore, Exploit };

const char* strategy_name(Strategy strategy);

/// Objective over the unit cube.  Throw ObjectiveFailure (or return a
/// non-finite value) to abort the run with a partial trace.
using Objective = std::function<double(const Eigen::VectorXd&)>;

struct SbocConfig {
    std::uint64_t seed = 0;
    int max_evaluations = 0;  // evaluation budget; termination is checked at
                              // iteration end, so up to two extra
                              // evaluations may land past it
    int initial_points = 0;   // 0 means five per dimension
    SurrogateSpec surrogate;
    double separation = 0.0;  // duplicate screen; 0 means the default radius
    double neighborhood_fraction = 0.2;  // share of the archive pooled by
                                         // the exploitation step
    double elbow_threshold = 0.10;       // relative dispersion-drop cutoff
    std::vector<double> eta_schedule = {0.5, 1.5, 2.5, 5.0, 10.0};
    CompassOptions surrogate_search;  // per-start budget for the model search
    std::vector<Eigen::VectorXd> initial_design;  // optional normalized points
                                                  // evaluated instead of the
                                                  // generated design
};

struct PointRecord {
    int iteration = 0;  // 0 for the initial design
    Strategy strategy = Strategy::Initial;
    Eigen::VectorXd x;  // normalized
    double y = 0.0;
    Eigen::VectorXd best_x;  // incumbent after this evaluation
    double best_y = 0.0;
};

struct IterationRecord {
    int iteration = 0;  // 1-based
    double eta = 0.0;
    int cluster_count = 0;       // selected partition size
    int neighborhood_size = 0;   // points pooled by the exploitation step
    bool surrogate_point_added = false;  // false when screened as a duplicate
    bool explore_point_added = false;
    bool exploit_point_added = false;
    double best_y_end = 0.0;  // incumbent value when the iteration closed
};

enum class RunStatus { Success, ObjectiveFailure, SurrogateFailure };

struct RunResult {
    RunStatus status = RunStatus::Success;
    std::string message;  // failure detail, empty on success
    Dataset data;
    std::vector<PointRecord> trace;
    std::vector<IterationRecord> iterations;
    Eigen::VectorXd best_x;
    double best_y = 0.0;
};

/// Runs the surrogate-driven optimizer on the unit cube.
///
/// Every iteration trains one global model and proposes up to three points:
/// the model's multi-start minimizer, an exploration midpoint between the
/// most separated neighboring clusters, and an exploitation average of the
/// incumbent's neighborhood weighted toward low values.  Candidates that sit
/// within the duplicate-screening radius of an archived point are skipped.
/// The run stops once the archive reaches the evaluation budget.
RunResult run(const Objective& objective, int dimension, const SbocConfig& config);

/// Greediness schedule: cycles over {0.5, 1.5, 2.5, 5, 10} by iteration
/// (1-based).  Small values concentrate exploitation near the incumbent.
double eta_for_iteration(int iteration);

/// Indices of the `count` archive points nearest to the incumbent (always
/// including the incumbent itself); ties prefer earlier insertion.
std::vector<std::size_t> local_neighborhood(const Dataset& data, std::size_t count);

/// Normalized weights exp(-sqrt(max(0, (value - reference) / eta))) used by
/// the exploitation average.  Falls back to uniform weights if every
/// exponent underflows.
Eigen::VectorXd exploitation_weights(const std::vector<double>& values, double reference,
                                     double eta);

/// Weighted average of the given points; weights must be normalized.
Eigen::VectorXd exploitation_point(const std::vector<Eigen::VectorXd>& points,
                                   const Eigen::VectorXd& weights);

/// The full exploitation proposal: pools the ceil(fraction * K) archive
/// points nearest the incumbent, weights them by closeness of their value to
/// the incumbent's under `eta`, and returns the weighted average — or
/// nothing when the average falls inside the duplicate-screening radius.
std::optional<Eigen::VectorXd> exploitation_candidate(const Dataset& data, double eta,
                                                      double fraction, double separation);

/// Writes the evaluation log as CSV with the header
///   iter,K,strategy,x1..xN,f,xbest1..xbestN,fbest
/// one row per evaluation, coordinates normalized, 12 significant digits.
void write_trace(std::ostream& out, const RunResult& result);

}  // namespace sboc
