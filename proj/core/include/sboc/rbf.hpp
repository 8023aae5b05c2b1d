#pragma once

#include <memory>

#include <Eigen/Core>

#include "sboc/dataset.hpp"
#include "sboc/model.hpp"
#include "sboc/rng.hpp"

namespace sboc {

struct RbfOptions {
    int shape_candidates = 10;       // equi-spaced shape values tried on [1/K, 1]
    double holdout_fraction = 0.2;   // validation share of the shape selection split
    double ridge_factor = 1e-10;     // first nonzero rung of the ridge ladder,
                                     // relative to trace(Phi)/K
};

/// Multiquadric interpolant with an affine tail:
///   S(x) = sum_k beta_k * sqrt(|x - c_k|^2 + shape^2) + offset + linear . x
/// The weights satisfy the moment conditions sum beta = 0 and sum beta c = 0,
/// so affine data is reproduced exactly by the tail.
class RbfModel : public SurrogateModel {
public:
    RbfModel(Eigen::MatrixXd centers, Eigen::VectorXd weights, double offset,
             Eigen::VectorXd linear, double shape);

    double predict(const Eigen::VectorXd& x) const override;
    int dimension() const override { return static_cast<int>(centers_.cols()); }

    const Eigen::MatrixXd& centers() const { return centers_; }
    const Eigen::VectorXd& weights() const { return weights_; }
    double offset() const { return offset_; }
    const Eigen::VectorXd& linear() const { return linear_; }
    double shape() const { return shape_; }

private:
    Eigen::MatrixXd centers_;  // one center per row
    Eigen::VectorXd weights_;
    double offset_;
    Eigen::VectorXd linear_;
    double shape_;
};

/// Fits an RbfModel to the dataset (needs at least N + 2 points).  The shape
/// parameter is chosen by holdout error over equi-spaced candidates on
/// [1/K, 1] using an rng-driven split, then the model is refit on all
/// points.  Throws SingularSystem when the interpolation system cannot be
/// solved acceptably even with the strongest ridge of the retry ladder.
std::unique_ptr<RbfModel> train_rbf(const Dataset& data, const RngStream& rng,
                                    const RbfOptions& options = {});

}  // namespace sboc
