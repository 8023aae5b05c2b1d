#include "sboc/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "sboc/errors.hpp"

namespace sboc {

double delta_x(const Eigen::VectorXd& x_hat, const TestFunction& fn) {
    if (x_hat.size() != fn.dimension) throw std::invalid_argument("dimension mismatch");
    double nearest = std::numeric_limits<double>::infinity();
    for (const auto& minimizer : fn.minimizers) {
        nearest = std::min(nearest, (x_hat - minimizer).norm());
    }
    return std::min(1.0, nearest / std::sqrt(static_cast<double>(fn.dimension)));
}

double delta_f(double f_hat, const TestFunction& fn) {
    const double floor = fstar_floor(fn);
    if (f_hat < floor - 1e-9 * (1.0 + std::abs(floor))) {
        char message[160];
        std::snprintf(message, sizeof(message),
                      "value %.17g undercuts the reference optimum bound %.17g for %s", f_hat,
                      floor, fn.name.c_str());
        throw BelowOptimum(message);
    }
    const double reference = fstar_metric(fn);
    double gap;
    if (reference != 0.0) {
        gap = (f_hat - reference) / std::abs(reference);
    } else {
        gap = f_hat;
    }
    return std::clamp(gap, 0.0, 1.0);
}

EffortResult effort(const std::vector<double>& value_history, const TestFunction& fn,
                    int budget, double threshold) {
    if (value_history.empty()) throw std::invalid_argument("empty evaluation history");
    if (budget < 1) throw std::invalid_argument("budget must be positive");
    if (!(threshold > 0.0)) throw std::invalid_argument("threshold must be positive");

    EffortResult result;
    result.k_star = budget;
    double running_best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < value_history.size(); ++i) {
        running_best = std::min(running_best, value_history[i]);
        if (delta_f(running_best, fn) <= threshold) {
            result.k_star = static_cast<int>(i) + 1;
            break;
        }
    }
    result.gamma = static_cast<double>(std::min(result.k_star, budget)) / budget;
    return result;
}

double median(std::vector<double> values) {
    if (values.empty()) throw std::invalid_argument("median of an empty set");
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    if (n % 2 == 1) return values[n / 2];
    return 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

RunMetrics compute_metrics(const RunResult& result, const TestFunction& fn, int budget,
                           double threshold) {
    if (result.trace.empty()) throw std::invalid_argument("run produced no evaluations");
    RunMetrics metrics;
    metrics.k_final = static_cast<int>(result.trace.size());
    metrics.delta_x = delta_x(result.best_x, fn);
    metrics.delta_f = delta_f(result.best_y, fn);
    std::vector<double> history;
    history.reserve(result.trace.size());
    for (const auto& record : result.trace) history.push_back(record.y);
    const EffortResult e = effort(history, fn, budget, threshold);
    metrics.gamma = e.gamma;
    metrics.k_star = e.k_star;
    return metrics;
}

}  // namespace sboc
