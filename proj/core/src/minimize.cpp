#include "sboc/minimize.hpp"

#include <algorithm>
#include <stdexcept>

namespace sboc {

CompassResult compass_minimize(const std::function<double(const Eigen::VectorXd&)>& objective,
                               const Eigen::VectorXd& lower, const Eigen::VectorXd& upper,
                               const Eigen::VectorXd& start, const CompassOptions& options) {
    const Eigen::Index dim = start.size();
    if (lower.size() != dim || upper.size() != dim) {
        throw std::invalid_argument("bounds must match the start dimension");
    }
    for (Eigen::Index d = 0; d < dim; ++d) {
        if (!(lower[d] < upper[d])) throw std::invalid_argument("lower bound must be below upper");
    }
    const int budget =
        options.max_evaluations > 0 ? options.max_evaluations : 200 * static_cast<int>(dim);
    const Eigen::VectorXd range = upper - lower;

    CompassResult result;
    result.x = start.cwiseMax(lower).cwiseMin(upper);
    result.value = objective(result.x);
    result.evaluations = 1;

    double step = options.initial_step;
    while (step >= options.step_tolerance && result.evaluations < budget) {
        bool improved = false;
        for (Eigen::Index d = 0; d < dim && result.evaluations < budget; ++d) {
            for (double sign : {+1.0, -1.0}) {
                Eigen::VectorXd candidate = result.x;
                candidate[d] =
                    std::clamp(result.x[d] + sign * step * range[d], lower[d], upper[d]);
                if (candidate[d] == result.x[d]) continue;  // pinned at the boundary
                const double value = objective(candidate);
                ++result.evaluations;
                if (value < result.value) {
                    result.x = std::move(candidate);
                    result.value = value;
                    improved = true;
                    break;
                }
                if (result.evaluations >= budget) break;
            }
        }
        if (!improved) step *= 0.5;
    }
    return result;
}

CompassResult minimize_surrogate(const SurrogateModel& model,
                                 const std::vector<Eigen::VectorXd>& starts,
                                 const CompassOptions& options) {
    if (starts.empty()) throw std::invalid_argument("at least one start point required");
    const int dim = model.dimension();
    const Eigen::VectorXd lower = Eigen::VectorXd::Zero(dim);
    const Eigen::VectorXd upper = Eigen::VectorXd::Ones(dim);
    const auto objective = [&model](const Eigen::VectorXd& x) { return model.predict(x); };

    CompassResult best;
    bool have_best = false;
    int total_evaluations = 0;
    for (const auto& start : starts) {
        CompassResult candidate = compass_minimize(objective, lower, upper, start, options);
        total_evaluations += candidate.evaluations;
        if (!have_best || candidate.value < best.value) {
            best = std::move(candidate);
            have_best = true;
        }
    }
    best.evaluations = total_evaluations;
    return best;
}

}  // namespace sboc
