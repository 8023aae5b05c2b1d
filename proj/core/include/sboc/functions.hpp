#pragma once

#include <functional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "sboc/domain.hpp"

namespace sboc {

/// One benchmark objective: closed form over its original box, published
/// minimizers (normalized to the unit cube), and the published optimum.
struct TestFunction {
    int id = 0;            // stable 1-based registry position
    std::string name;      // kebab-case slug, unique
    int dimension = 0;
    Eigen::VectorXd lower;
    Eigen::VectorXd upper;
    std::function<double(const Eigen::VectorXd&)> raw;  // original-unit input
    std::vector<Eigen::VectorXd> minimizers;            // normalized
    double f_listed = 0.0;        // published optimum value
    bool midpoint_optimal = false;  // optimum exactly at the domain center
    bool unimodal = false;

    BoxDomain domain() const { return BoxDomain(lower, upper); }
};

/// All 52 benchmark functions, ordered by id.
const std::vector<TestFunction>& function_registry();

/// Lookup by slug or decimal id; nullptr when unknown.
const TestFunction* find_function(const std::string& key);

/// Denormalizes the unit-cube point into the function's box and evaluates.
double evaluate_normalized(const TestFunction& fn, const Eigen::VectorXd& u);

/// Outcome of validating one function's implementation against its
/// published optimum at the published minimizers.
struct SelfCheckEntry {
    int id = 0;
    std::string name;
    bool passed = false;
    double listed = 0.0;    // published optimum
    double computed = 0.0;  // best implemented value over listed minimizers
};

/// Validates every function: passes when the best value over its listed
/// minimizers is within max(1e-3, 1e-3 |listed|) of the published optimum.
const std::vector<SelfCheckEntry>& registry_self_check();

/// Self-check failures only — functions whose published optimum disagrees
/// with the standard closed form.
std::vector<SelfCheckEntry> registry_discrepancies();

/// Reference optimum for gap metrics: the published value when the
/// self-check passes, otherwise the implemented value at the listed
/// minimizers (metrics must match the code's own landscape).
double fstar_metric(const TestFunction& fn);

/// Lower bound no legitimate run can beat: the minimum of the published
/// value, the value at the listed minimizers, and a local refinement from
/// each minimizer, extended by a small safety margin.  Values below this
/// indicate a broken objective, not a good run.
double fstar_floor(const TestFunction& fn);

}  // namespace sboc
