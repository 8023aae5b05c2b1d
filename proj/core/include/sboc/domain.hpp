#pragma once

#include <Eigen/Core>

namespace sboc {

/// Axis-aligned box of search bounds with mapping to/from the unit cube.
///
/// All internal optimizer state lives in normalized [0, 1]^N coordinates;
/// objective evaluators see original units.  normalize() tolerates round-off
/// up to 1e-12 of the per-axis range (values are clamped); anything farther
/// outside throws OutOfBounds.
class BoxDomain {
public:
    BoxDomain(Eigen::VectorXd lower, Eigen::VectorXd upper);

    int dimension() const { return static_cast<int>(lower_.size()); }
    const Eigen::VectorXd& lower() const { return lower_; }
    const Eigen::VectorXd& upper() const { return upper_; }

    /// Map a raw-unit point into [0, 1]^N.
    Eigen::VectorXd normalize(const Eigen::VectorXd& raw) const;

    /// Map a unit-cube point back to raw units.
    Eigen::VectorXd denormalize(const Eigen::VectorXd& unit) const;

    /// The unit cube itself (identity mapping), for objectives that are
    /// already normalized.
    static BoxDomain unit_cube(int dimension);

private:
    Eigen::VectorXd lower_;
    Eigen::VectorXd upper_;
};

}  // namespace sboc
