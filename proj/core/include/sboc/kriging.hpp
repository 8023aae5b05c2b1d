#pragma once

#include <memory>

#include <Eigen/Core>

#include "sboc/dataset.hpp"
#include "sboc/model.hpp"
#include "sboc/rng.hpp"

namespace sboc {

struct KrigingOptions {
    int multistarts = 5;           // correlation-length searches from random starts
    int search_budget = 200;       // likelihood evaluations per search
    double log10_theta_min = -3.0; // search box for log10 of each length scale
    double log10_theta_max = 3.0;
};

/// Gaussian-process regressor with a full quadratic trend and squared
/// exponential correlation exp(-sum_d theta_d (x_d - x'_d)^2).  Prediction is
///   y(x) = basis(x) . trend + sum_k weights_k * corr(x, c_k).
class KrigingModel : public SurrogateModel {
public:
    KrigingModel(Eigen::MatrixXd centers, Eigen::VectorXd theta, Eigen::VectorXd trend,
                 Eigen::VectorXd weights, double nugget, double variance);

    double predict(const Eigen::VectorXd& x) const override;
    int dimension() const override { return static_cast<int>(centers_.cols()); }

    const Eigen::MatrixXd& centers() const { return centers_; }
    const Eigen::VectorXd& theta() const { return theta_; }
    const Eigen::VectorXd& trend() const { return trend_; }
    const Eigen::VectorXd& weights() const { return weights_; }
    double nugget() const { return nugget_; }
    double variance() const { return variance_; }

    /// Number of quadratic-trend terms in N dimensions: (N+1)(N+2)/2.
    static int trend_size(int dimension);

    /// Quadratic feature vector [1, x_d, x_d * x_e (d <= e)].
    static Eigen::VectorXd trend_basis(const Eigen::VectorXd& x);

private:
    Eigen::MatrixXd centers_;  // one training point per row
    Eigen::VectorXd theta_;
    Eigen::VectorXd trend_;
    Eigen::VectorXd weights_;
    double nugget_;
    double variance_;
};

/// Fits a KrigingModel (needs at least (N+1)(N+2)/2 + 1 points).  Length
/// scales are chosen by multi-start compass search on the concentrated
/// log-likelihood in log10 space; the final factorization escalates through
/// a small nugget ladder and throws IllConditioned when even the largest
/// nugget cannot stabilize it.
std::unique_ptr<KrigingModel> train_kriging(const Dataset& data, const RngStream& rng,
                                            const KrigingOptions& options = {});

}  // namespace sboc
