#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include <Eigen/Core>

namespace sboc {

/// One evaluated sample: unit-cube coordinates and the objective value.
struct SamplePoint {
    Eigen::VectorXd x;
    double y = 0.0;
};

/// Append-only archive of evaluated samples in normalized coordinates.
///
/// Points must be pairwise distinct and finite; the index of the best
/// (lowest-y) sample is maintained incrementally, with ties resolved in
/// favor of the earliest insertion.
class Dataset {
public:
    Dataset() = default;
    explicit Dataset(int dimension) : dimension_(dimension) {}

    void insert(SamplePoint point);

    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }
    int dimension() const { return dimension_; }

    const SamplePoint& operator[](std::size_t i) const { return points_[i]; }

    /// Index of the current best sample; throws EmptyDataset when empty.
    std::size_t best_index() const;
    const SamplePoint& best() const;

    /// Copies of all coordinates, e.g. as clustering input or search starts.
    std::vector<Eigen::VectorXd> coordinates() const;

    /// Copies of all objective values in insertion order.
    std::vector<double> values() const;

private:
    int dimension_ = 0;
    std::vector<SamplePoint> points_;
    std::size_t best_ = 0;
};

/// Best (x, y) pair of the archive; throws EmptyDataset when empty.
std::pair<Eigen::VectorXd, double> incumbent(const Dataset& data);

/// True when `candidate` keeps strictly more than `separation` Euclidean
/// distance from every archived point.
bool min_separation_ok(const Eigen::VectorXd& candidate, const Dataset& data,
                       double separation);

/// Default duplicate-screening radius for an N-dimensional unit cube.
double default_separation(int dimension);

}  // namespace sboc
