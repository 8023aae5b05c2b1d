#include "sboc/kriging.hpp"

#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <utility>

#include <Eigen/Dense>

#include "sboc/errors.hpp"
#include "sboc/minimize.hpp"

namespace sboc {

namespace {

constexpr double kSearchNugget = 1e-10;
constexpr double kNuggetLadder[] = {1e-10, 1e-8, 1e-6};
constexpr double kVarianceFloor = 1e-30;

Eigen::MatrixXd correlation_matrix(const Eigen::MatrixXd& coords, const Eigen::VectorXd& theta) {
    const Eigen::Index k = coords.rows();
    Eigen::MatrixXd r(k, k);
    for (Eigen::Index i = 0; i < k; ++i) {
        r(i, i) = 1.0;
        for (Eigen::Index j = i + 1; j < k; ++j) {
            const Eigen::VectorXd diff = (coords.row(i) - coords.row(j)).transpose();
            r(i, j) = std::exp(-diff.array().square().matrix().dot(theta));
            r(j, i) = r(i, j);
        }
    }
    return r;
}

struct GlsFit {
    Eigen::VectorXd trend;    // generalized least squares trend coefficients
    Eigen::VectorXd weights;  // R^-1 (y - F b)
    double variance = 0.0;
    double log_det = 0.0;     // log det of the (nugget-shifted) correlation
};

/// Trend + correlation-weight fit at fixed length scales via one Cholesky
/// factorization.  Returns nothing when the factorization or the normal
/// equations fail.
std::optional<GlsFit> gls_fit(const Eigen::MatrixXd& coords, const Eigen::VectorXd& values,
                              const Eigen::MatrixXd& basis, const Eigen::VectorXd& theta,
                              double nugget) {
    const Eigen::Index k = coords.rows();
    Eigen::MatrixXd corr = correlation_matrix(coords, theta);
    corr.diagonal().array() += nugget;

    Eigen::LLT<Eigen::MatrixXd> llt(corr);
    if (llt.info() != Eigen::Success) return std::nullopt;

    const Eigen::MatrixXd corr_inv_basis = llt.solve(basis);
    const Eigen::VectorXd corr_inv_values = llt.solve(values);
    const Eigen::MatrixXd normal = basis.transpose() * corr_inv_basis;
    Eigen::LDLT<Eigen::MatrixXd> ldlt(normal);
    if (ldlt.info() != Eigen::Success) return std::nullopt;

    GlsFit fit;
    fit.trend = ldlt.solve(basis.transpose() * corr_inv_values);
    const Eigen::VectorXd residual = values - basis * fit.trend;
    fit.weights = llt.solve(residual);
    fit.variance = std::max(residual.dot(fit.weights) / static_cast<double>(k), kVarianceFloor);
    fit.log_det = 2.0 * llt.matrixL().toDenseMatrix().diagonal().array().log().sum();
    if (!fit.trend.allFinite() || !fit.weights.allFinite() || !std::isfinite(fit.log_det)) {
        return std::nullopt;
    }
    return fit;
}

}  // namespace

KrigingModel::KrigingModel(Eigen::MatrixXd centers, Eigen::VectorXd theta, Eigen::VectorXd trend,
                           Eigen::VectorXd weights, double nugget, double variance)
    : centers_(std::move(centers)),
      theta_(std::move(theta)),
      trend_(std::move(trend)),
      weights_(std::move(weights)),
      nugget_(nugget),
      variance_(variance) {
    if (centers_.rows() != weights_.size() || centers_.cols() != theta_.size() ||
        trend_.size() != trend_size(static_cast<int>(centers_.cols()))) {
        throw std::invalid_argument("inconsistent model sizes");
    }
}

int KrigingModel::trend_size(int dimension) {
    return (dimension + 1) * (dimension + 2) / 2;
}

Eigen::VectorXd KrigingModel::trend_basis(const Eigen::VectorXd& x) {
    const Eigen::Index n = x.size();
    Eigen::VectorXd features(trend_size(static_cast<int>(n)));
    Eigen::Index at = 0;
    features[at++] = 1.0;
    for (Eigen::Index d = 0; d < n; ++d) features[at++] = x[d];
    for (Eigen::Index d = 0; d < n; ++d) {
        for (Eigen::Index e = d; e < n; ++e) features[at++] = x[d] * x[e];
    }
    return features;
}

double KrigingModel::predict(const Eigen::VectorXd& x) const {
    if (x.size() != centers_.cols()) throw std::invalid_argument("dimension mismatch");
    double value = trend_basis(x).dot(trend_);
    for (Eigen::Index i = 0; i < centers_.rows(); ++i) {
        const Eigen::VectorXd diff = centers_.row(i).transpose() - x;
        value += weights_[i] * std::exp(-diff.array().square().matrix().dot(theta_));
    }
    return value;
}

std::unique_ptr<KrigingModel> train_kriging(const Dataset& data, const RngStream& rng,
                                            const KrigingOptions& options) {
    const int n = data.dimension();
    const int k = static_cast<int>(data.size());
    const int q = KrigingModel::trend_size(n);
    if (k < q + 1) throw TooFewPoints("quadratic-trend fit needs more points than trend terms");
    if (options.multistarts < 1) throw std::invalid_argument("need at least one start");
    if (!(options.log10_theta_min < options.log10_theta_max)) {
        throw std::invalid_argument("length-scale search box is empty");
    }

    Eigen::MatrixXd coords(k, n);
    Eigen::VectorXd values(k);
    for (int i = 0; i < k; ++i) {
        coords.row(i) = data[i].x.transpose();
        values[i] = data[i].y;
    }
    Eigen::MatrixXd basis(k, q);
    for (int i = 0; i < k; ++i) basis.row(i) = KrigingModel::trend_basis(data[i].x).transpose();

    // Concentrated negative log-likelihood over log10 length scales.
    const auto objective = [&](const Eigen::VectorXd& tau) {
        const Eigen::VectorXd theta = Eigen::pow(10.0, tau.array());
        const auto fit = gls_fit(coords, values, basis, theta, kSearchNugget);
        if (!fit) return std::numeric_limits<double>::infinity();
        return static_cast<double>(k) * std::log(fit->variance) + fit->log_det;
    };

    const Eigen::VectorXd lower = Eigen::VectorXd::Constant(n, options.log10_theta_min);
    const Eigen::VectorXd upper = Eigen::VectorXd::Constant(n, options.log10_theta_max);
    CompassOptions search;
    search.max_evaluations = options.search_budget;

    Eigen::VectorXd best_tau = Eigen::VectorXd::Zero(n);
    double best_value = std::numeric_limits<double>::infinity();
    RngStream start_rng = rng.derive("theta-start");
    for (int s = 0; s < options.multistarts; ++s) {
        Eigen::VectorXd start(n);
        if (s == 0) {
            start.setZero();  // theta = 1 in every coordinate
        } else {
            for (int d = 0; d < n; ++d) {
                start[d] = lower[d] + (upper[d] - lower[d]) * start_rng.uniform01();
            }
        }
        const CompassResult result = compass_minimize(objective, lower, upper, start, search);
        if (result.value < best_value) {
            best_value = result.value;
            best_tau = result.x;
        }
    }

    const Eigen::VectorXd theta = Eigen::pow(10.0, best_tau.array());
    for (double nugget : kNuggetLadder) {
        if (auto fit = gls_fit(coords, values, basis, theta, nugget)) {
            return std::make_unique<KrigingModel>(std::move(coords), theta, std::move(fit->trend),
                                                  std::move(fit->weights), nugget, fit->variance);
        }
    }
    throw IllConditioned("correlation matrix not factorizable even with the largest nugget");
}

}  // namespace sboc
