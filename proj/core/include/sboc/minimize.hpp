#pragma once

#include <functional>
#include <vector>

#include <Eigen/Core>

#include "sboc/model.hpp"

namespace sboc {

struct CompassOptions {
    int max_evaluations = 0;       // 0 means "choose from the dimension"
    double initial_step = 0.25;    // fraction of each coordinate range
    double step_tolerance = 1e-8;  // stop once the step fraction falls below
};

struct CompassResult {
    Eigen::VectorXd x;
    double value = 0.0;
    int evaluations = 0;
};

/// Derivative-free box-constrained descent: sweeps the coordinate directions
/// at the current step size, moves on the first strict improvement, and
/// halves the step after a full sweep without one.  Deterministic.
CompassResult compass_minimize(const std::function<double(const Eigen::VectorXd&)>& objective,
                               const Eigen::VectorXd& lower, const Eigen::VectorXd& upper,
                               const Eigen::VectorXd& start, const CompassOptions& options = {});

/// Multi-start surrogate minimization over the unit cube: one compass run
/// from every start, keeping the lowest predicted value (ties: earliest
/// start).  The default per-start budget is 200 evaluations per dimension.
CompassResult minimize_surrogate(const SurrogateModel& model,
                                 const std::vector<Eigen::VectorXd>& starts,
                                 const CompassOptions& options = {});

}  // namespace sboc
