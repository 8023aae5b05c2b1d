#include "sboc/domain.hpp"

#include <cstdio>
#include <string>
#include <utility>

#include "sboc/errors.hpp"

namespace sboc {

BoxDomain::BoxDomain(Eigen::VectorXd lower, Eigen::VectorXd upper)
    : lower_(std::move(lower)), upper_(std::move(upper)) {
    if (lower_.size() == 0 || lower_.size() != upper_.size()) {
        throw std::invalid_argument("BoxDomain: bounds must be non-empty and of equal length");
    }
    for (int i = 0; i < lower_.size(); ++i) {
        if (!(lower_[i] < upper_[i])) {
            throw std::invalid_argument("BoxDomain: lower bound must be strictly below upper on axis " +
                                        std::to_string(i));
        }
    }
}

Eigen::VectorXd BoxDomain::normalize(const Eigen::VectorXd& raw) const {
    if (raw.size() != lower_.size()) {
        throw std::invalid_argument("BoxDomain::normalize: dimension mismatch");
    }
    Eigen::VectorXd unit(raw.size());
    for (int i = 0; i < raw.size(); ++i) {
        const double range = upper_[i] - lower_[i];
        const double slack = 1e-12 * range;
        if (raw[i] < lower_[i] - slack || raw[i] > upper_[i] + slack) {
            char msg[160];
            std::snprintf(msg, sizeof(msg),
                          "coordinate %d = %.17g outside [%.17g, %.17g]", i, raw[i],
                          lower_[i], upper_[i]);
            throw OutOfBounds(msg);
        }
        double u = (raw[i] - lower_[i]) / range;
        if (u < 0.0) u = 0.0;
        if (u > 1.0) u = 1.0;
        unit[i] = u;
    }
    return unit;
}

Eigen::VectorXd BoxDomain::denormalize(const Eigen::VectorXd& unit) const {
    if (unit.size() != lower_.size()) {
        throw std::invalid_argument("BoxDomain::denormalize: dimension mismatch");
    }
    Eigen::VectorXd raw(unit.size());
    for (int i = 0; i < unit.size(); ++i) {
        raw[i] = lower_[i] + unit[i] * (upper_[i] - lower_[i]);
    }
    return raw;
}

BoxDomain BoxDomain::unit_cube(int dimension) {
    return BoxDomain(Eigen::VectorXd::Zero(dimension), Eigen::VectorXd::Ones(dimension));
}

}  // namespace sboc
