#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Core>

namespace sboc {

namespace detail {

/// Primitive polynomial (full bit encoding) and initial direction numbers
/// for one Sobol dimension, from the published Joe-Kuo table.
struct SobolDirectionRow {
    std::uint32_t poly;
    int degree;
    std::uint32_t m[18];
};

extern const SobolDirectionRow kSobolDirectionRows[];
extern const int kSobolMaxDimension;

}  // namespace detail

/// Incremental Sobol low-discrepancy generator (Gray-code order).
///
/// Supports up to 64 dimensions via an embedded direction-number table; see
/// scripts/gen_sobol_directions.py for the data provenance.  Index 0 of the
/// underlying sequence is the all-zeros point; constructing with skip = 1
/// (the usual choice for space-filling designs) starts at the first
/// non-trivial point.  Identical (dimension, skip) always reproduces the
/// identical sequence.
class SobolSequence {
public:
    explicit SobolSequence(int dimension, std::uint64_t skip = 1);

    int dimension() const { return dimension_; }

    /// Next point of the sequence, each coordinate in [0, 1).
    Eigen::VectorXd next();

    /// Index of the point next() will return.
    std::uint64_t index() const { return index_; }

private:
    void advance();

    int dimension_ = 0;
    std::uint64_t index_ = 0;                      // index of current state
    std::vector<std::uint64_t> state_;             // 53-bit fixed point per axis
    std::vector<std::vector<std::uint64_t>> dirs_; // direction values per axis
};

/// First `count` points of the Sobol sequence after skipping `skip` points.
std::vector<Eigen::VectorXd> sobol_points(int dimension, std::size_t count,
                                          std::uint64_t skip = 1);

}  // namespace sboc
