#pragma once

#include <vector>

#include <Eigen/Core>

#include "sboc/engine.hpp"
#include "sboc/functions.hpp"

namespace sboc {

/// Success threshold on the relative objective gap.
constexpr double kSuccessThreshold = 0.01;

/// Per-run quality metrics, each confined to [0, 1].
struct RunMetrics {
    double delta_x = 1.0;  // normalized distance to the nearest optimum
    double delta_f = 1.0;  // relative objective gap
    double gamma = 1.0;    // normalized evaluation effort
    int k_star = 0;        // evaluations to first reach the gap threshold
    int k_final = 0;       // total evaluations of the run
};

/// Normalized distance from the estimate to the nearest listed minimizer:
/// min over minimizers of |x - x*| / sqrt(N).  Inputs are normalized.
double delta_x(const Eigen::VectorXd& x_hat, const TestFunction& fn);

/// Relative gap between the achieved value and the reference optimum:
/// (f - f*)/|f*| for f* != 0, min(1, f) for f* = 0; clamped to [0, 1].
/// Throws BelowOptimum when f undercuts the function's refined lower bound
/// beyond round-off — that indicates a broken objective, not a good run.
double delta_f(double f_hat, const TestFunction& fn);

struct EffortResult {
    double gamma = 1.0;
    int k_star = 0;  // first 1-based evaluation index hitting the threshold,
                     // or the budget when never reached
};

/// Evaluation effort: walks the per-evaluation value history, finds the
/// first index whose running best satisfies delta_f <= threshold, and
/// normalizes by the budget (capped at 1).
EffortResult effort(const std::vector<double>& value_history, const TestFunction& fn,
                    int budget, double threshold = kSuccessThreshold);

/// Standard order-statistic median; even counts average the central pair.
double median(std::vector<double> values);

/// All metrics of one finished run against the given budget.
RunMetrics compute_metrics(const RunResult& result, const TestFunction& fn, int budget,
                           double threshold = kSuccessThreshold);

}  // namespace sboc
