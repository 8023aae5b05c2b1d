#pragma once

#include <string>

#include <Eigen/Core>

#include "sboc/errors.hpp"

namespace sboc::tools {

/// The evaluator child failed to answer within the configured timeout.
class Timeout : public ObjectiveFailure {
    using ObjectiveFailure::ObjectiveFailure;
};

/// The evaluator's output could not be parsed as exactly one finite real.
class NonNumericOutput : public ObjectiveFailure {
    using ObjectiveFailure::ObjectiveFailure;
};

/// The evaluator exited with a non-zero status or died mid-protocol.
class NonZeroExit : public ObjectiveFailure {
    using ObjectiveFailure::ObjectiveFailure;
};

enum class InvocationMode {
    PerCall,     // one process per evaluation, coordinates as arguments
    Persistent,  // one long-lived process, line-based exchange on its stdio
};

struct BlackBoxOptions {
    InvocationMode mode = InvocationMode::PerCall;
    double timeout_seconds = 30.0;
};

/// Runs an external executable as an objective function over original
/// (denormalized) coordinates.
///
/// Per-call mode invokes `executable x1 x2 ... xN` and reads one real from
/// its standard output.  Persistent mode starts the executable once, writes
/// one space-separated coordinate line per evaluation to its standard input
/// and reads one value line back.  All coordinates are formatted with 17
/// significant digits so the child sees the engine's iterate exactly.
class BlackBoxEvaluator {
public:
    explicit BlackBoxEvaluator(std::string executable, BlackBoxOptions options = {});
    ~BlackBoxEvaluator();

    BlackBoxEvaluator(const BlackBoxEvaluator&) = delete;
    BlackBoxEvaluator& operator=(const BlackBoxEvaluator&) = delete;

    /// One protocol exchange; throws Timeout / NonNumericOutput /
    /// NonZeroExit (all ObjectiveFailure) on a broken exchange.
    double evaluate(const Eigen::VectorXd& x_raw);

    /// Successful evaluations so far.
    long call_count() const { return calls_; }

    const std::string& executable() const { return executable_; }

private:
    double evaluate_per_call(const Eigen::VectorXd& x_raw);
    double evaluate_persistent(const Eigen::VectorXd& x_raw);
    void ensure_child();
    void stop_child();

    std::string executable_;
    BlackBoxOptions options_;
    long calls_ = 0;

    // persistent-mode child state
    int child_pid_ = -1;
    int child_stdin_ = -1;
    int child_stdout_ = -1;
    std::string pending_;  // bytes read past the last newline
};

}  // namespace sboc::tools
