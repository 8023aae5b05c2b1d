#include "sboc/rbf.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "sboc/errors.hpp"

namespace sboc {

namespace {

struct RbfFit {
    Eigen::VectorXd weights;
    double offset = 0.0;
    Eigen::VectorXd linear;
};

/// Solves the bordered interpolation system
///   [Phi P; P^T 0] [beta; a] = [y; 0],  P = [1 X],
/// climbing a ladder of diagonal ridge boosts until the solution's residual
/// against the unmodified system is acceptably small.  Nearly coincident
/// centers (legal down to the duplicate-screening radius) make the plain
/// system arbitrarily ill-conditioned, so a hard invertibility gate would
/// abort fits that a lightly regularized solve handles fine.
std::optional<RbfFit> solve_rbf(const Eigen::MatrixXd& centers, const Eigen::VectorXd& values,
                                double shape, double ridge_factor) {
    const Eigen::Index k = centers.rows();
    const Eigen::Index n = centers.cols();
    const Eigen::Index m = k + n + 1;

    Eigen::MatrixXd phi(k, k);
    for (Eigen::Index i = 0; i < k; ++i) {
        phi(i, i) = shape;  // sqrt(0 + shape^2)
        for (Eigen::Index j = i + 1; j < k; ++j) {
            const double d2 = (centers.row(i) - centers.row(j)).squaredNorm();
            phi(i, j) = std::sqrt(d2 + shape * shape);
            phi(j, i) = phi(i, j);
        }
    }

    Eigen::MatrixXd system = Eigen::MatrixXd::Zero(m, m);
    system.topLeftCorner(k, k) = phi;
    system.block(0, k, k, 1).setOnes();
    system.block(0, k + 1, k, n) = centers;
    system.block(k, 0, 1, k).setOnes();
    system.block(k + 1, 0, n, k) = centers.transpose();

    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(m);
    rhs.head(k) = values;
    const double rhs_scale = std::max(rhs.norm(), 1.0);
    const double diagonal_scale = phi.trace() / static_cast<double>(k);

    RbfFit best;
    double best_residual = std::numeric_limits<double>::infinity();
    for (int rung = 0; rung < 5; ++rung) {
        Eigen::MatrixXd work = system;
        if (rung > 0) {
            const double ridge =
                ridge_factor * std::pow(100.0, rung - 1) * diagonal_scale;
            work.topLeftCorner(k, k).diagonal().array() += ridge;
        }
        const Eigen::VectorXd solution = Eigen::FullPivLU<Eigen::MatrixXd>(work).solve(rhs);
        if (!solution.allFinite()) continue;
        const double residual = (system * solution - rhs).norm() / rhs_scale;
        if (residual < best_residual) {
            best_residual = residual;
            best.weights = solution.head(k);
            best.offset = solution[k];
            best.linear = solution.tail(n);
        }
        if (residual <= 1e-8) break;  // interpolation-grade, stop early
    }
    if (best_residual <= 1e-3) return best;  // degraded fits still guide the search
    return std::nullopt;
}

}  // namespace

RbfModel::RbfModel(Eigen::MatrixXd centers, Eigen::VectorXd weights, double offset,
                   Eigen::VectorXd linear, double shape)
    : centers_(std::move(centers)),
      weights_(std::move(weights)),
      offset_(offset),
      linear_(std::move(linear)),
      shape_(shape) {
    if (centers_.rows() != weights_.size() || centers_.cols() != linear_.size()) {
        throw std::invalid_argument("inconsistent model sizes");
    }
}

double RbfModel::predict(const Eigen::VectorXd& x) const {
    if (x.size() != centers_.cols()) throw std::invalid_argument("dimension mismatch");
    double value = offset_ + linear_.dot(x);
    for (Eigen::Index i = 0; i < centers_.rows(); ++i) {
        const double d2 = (centers_.row(i).transpose() - x).squaredNorm();
        value += weights_[i] * std::sqrt(d2 + shape_ * shape_);
    }
    return value;
}

std::unique_ptr<RbfModel> train_rbf(const Dataset& data, const RngStream& rng,
                                    const RbfOptions& options) {
    const int n = data.dimension();
    const int k = static_cast<int>(data.size());
    if (k < n + 2) throw TooFewPoints("multiquadric fit needs at least N + 2 points");
    if (options.shape_candidates < 1) throw std::invalid_argument("need at least one candidate");

    Eigen::MatrixXd coords(k, n);
    Eigen::VectorXd values(k);
    for (int i = 0; i < k; ++i) {
        coords.row(i) = data[i].x.transpose();
        values[i] = data[i].y;
    }

    // Equi-spaced shape candidates on [1/K, 1], smallest first.
    std::vector<double> candidates;
    const double low = 1.0 / static_cast<double>(k);
    const int m = options.shape_candidates;
    for (int j = 0; j < m; ++j) {
        candidates.push_back(m == 1 ? low : low + (1.0 - low) * j / (m - 1));
    }

    const int train_size =
        std::min(k, std::max(static_cast<int>(std::floor((1.0 - options.holdout_fraction) * k)),
                             n + 2));
    double chosen = candidates.front();
    if (train_size < k) {
        std::vector<int> order(k);
        std::iota(order.begin(), order.end(), 0);
        RngStream split_rng = rng.derive("shape-split");
        for (int i = k - 1; i > 0; --i) {
            const int j = static_cast<int>(split_rng.uniform_int(i + 1));
            std::swap(order[i], order[j]);
        }
        Eigen::MatrixXd train_coords(train_size, n);
        Eigen::VectorXd train_values(train_size);
        for (int i = 0; i < train_size; ++i) {
            train_coords.row(i) = coords.row(order[i]);
            train_values[i] = values[order[i]];
        }

        double best_rmse = std::numeric_limits<double>::infinity();
        for (double shape : candidates) {
            const auto fit = solve_rbf(train_coords, train_values, shape, options.ridge_factor);
            if (!fit) continue;
            const RbfModel h(train_coords, fit->weights, fit->offset, fit->linear, shape);
            double sse = 0.0;
            for (int i = train_size; i < k; ++i) {
                const double e = h.predict(coords.row(order[i]).transpose()) - values[order[i]];
                sse += e * e;
            }
            const double rmse = std::sqrt(sse / (k - train_size));
            if (rmse < best_rmse) {  // ties keep the smaller shape
                best_rmse = rmse;
                chosen = shape;
            }
        }
    }

    auto fit = solve_rbf(coords, values, chosen, options.ridge_factor);
    if (!fit) throw SingularSystem("multiquadric interpolation system is singular");
    return std::make_unique<RbfModel>(std::move(coords), std::move(fit->weights), fit->offset,
                                      std::move(fit->linear), chosen);
}

}  // namespace sboc
