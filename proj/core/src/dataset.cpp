#include "sboc/dataset.hpp"

#include <cmath>
#include <string>

#include "sboc/errors.hpp"

namespace sboc {

void Dataset::insert(SamplePoint point) {
    if (dimension_ == 0) {
        dimension_ = static_cast<int>(point.x.size());
    }
    if (point.x.size() != dimension_) {
        throw std::invalid_argument("Dataset::insert: dimension mismatch");
    }
    if (!std::isfinite(point.y)) {
        throw std::invalid_argument("Dataset::insert: non-finite objective value");
    }
    for (int i = 0; i < point.x.size(); ++i) {
        if (!(point.x[i] >= 0.0 && point.x[i] <= 1.0)) {
            throw OutOfBounds("Dataset::insert: coordinate " + std::to_string(i) +
                              " not in [0, 1]");
        }
    }
    for (const SamplePoint& existing : points_) {
        if (existing.x == point.x) {
            throw std::invalid_argument("Dataset::insert: duplicate point");
        }
    }
    // Strict comparison keeps the earliest sample on ties.
    if (points_.empty() || point.y < points_[best_].y) {
        best_ = points_.size();
    }
    points_.push_back(std::move(point));
}

std::size_t Dataset::best_index() const {
    if (points_.empty()) {
        throw EmptyDataset("Dataset::best_index on empty dataset");
    }
    return best_;
}

const SamplePoint& Dataset::best() const { return points_[best_index()]; }

std::vector<Eigen::VectorXd> Dataset::coordinates() const {
    std::vector<Eigen::VectorXd> out;
    out.reserve(points_.size());
    for (const SamplePoint& p : points_) out.push_back(p.x);
    return out;
}

std::vector<double> Dataset::values() const {
    std::vector<double> out;
    out.reserve(points_.size());
    for (const SamplePoint& p : points_) out.push_back(p.y);
    return out;
}

std::pair<Eigen::VectorXd, double> incumbent(const Dataset& data) {
    const SamplePoint& best = data.best();
    return {best.x, best.y};
}

bool min_separation_ok(const Eigen::VectorXd& candidate, const Dataset& data,
                       double separation) {
    for (std::size_t i = 0; i < data.size(); ++i) {
        if ((data[i].x - candidate).norm() <= separation) return false;
    }
    return true;
}

double default_separation(int dimension) { return 1e-4 * std::sqrt(static_cast<double>(dimension)); }

}  // namespace sboc
