#pragma once

#include <Eigen/Core>

namespace sboc {

/// A trained predictor over the unit cube.  Implementations are immutable
/// after construction and safe to share across readers.
class SurrogateModel {
public:
    virtual ~SurrogateModel() = default;

    /// Predicted objective value at a normalized point.
    virtual double predict(const Eigen::VectorXd& x) const = 0;

    /// Input dimension the model was trained on.
    virtual int dimension() const = 0;
};

}  // namespace sboc
