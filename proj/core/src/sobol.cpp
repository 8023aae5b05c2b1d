#include "sboc/sobol.hpp"

#include <bit>
#include <string>

#include "sboc/errors.hpp"

namespace sboc {
namespace {

constexpr int kBits = 53;  // fixed-point depth; 2^-53 grid is exact in doubles

// Direction values v_j = m_j * 2^(kBits - j) for one dimension, extending the
// initial m values with the classic primitive-polynomial recurrence
//   m_k = 2 a_1 m_{k-1} ^ 4 a_2 m_{k-2} ^ ... ^ 2^s m_{k-s} ^ m_{k-s}.
std::vector<std::uint64_t> build_directions(int dim_index) {
    std::vector<std::uint64_t> m(kBits);
    if (dim_index == 0) {
        // First dimension: van der Corput radical inverse, all m_j = 1.
        for (int j = 0; j < kBits; ++j) m[j] = 1;
    } else {
        const detail::SobolDirectionRow& row = detail::kSobolDirectionRows[dim_index - 1];
        const int s = row.degree;
        for (int j = 0; j < s; ++j) m[j] = row.m[j];
        for (int k = s; k < kBits; ++k) {
            std::uint64_t value = m[k - s] ^ (m[k - s] << s);
            for (int j = 1; j < s; ++j) {
                const std::uint32_t a = (row.poly >> (s - j)) & 1u;
                if (a) value ^= m[k - j] << j;
            }
            m[k] = value;
        }
    }
    std::vector<std::uint64_t> v(kBits);
    for (int j = 0; j < kBits; ++j) {
        v[j] = m[j] << (kBits - 1 - j);
    }
    return v;
}

}  // namespace

SobolSequence::SobolSequence(int dimension, std::uint64_t skip) : dimension_(dimension) {
    if (dimension < 1) {
        throw std::invalid_argument("SobolSequence: dimension must be >= 1");
    }
    if (dimension > detail::kSobolMaxDimension) {
        throw DimensionUnsupported("SobolSequence: dimension " + std::to_string(dimension) +
                                   " exceeds table limit of " +
                                   std::to_string(detail::kSobolMaxDimension));
    }
    dirs_.reserve(dimension);
    for (int d = 0; d < dimension; ++d) dirs_.push_back(build_directions(d));
    state_.assign(dimension, 0);
    for (std::uint64_t i = 0; i < skip; ++i) advance();
}

void SobolSequence::advance() {
    // Gray-code update: flip the direction value of the lowest zero bit of
    // the current index, i.e. the lowest set bit of index + 1.
    const int c = std::countr_zero(index_ + 1);
    for (int d = 0; d < dimension_; ++d) {
        state_[d] ^= dirs_[d][c];
    }
    ++index_;
}

Eigen::VectorXd SobolSequence::next() {
    Eigen::VectorXd point(dimension_);
    for (int d = 0; d < dimension_; ++d) {
        point[d] = static_cast<double>(state_[d]) * 0x1.0p-53;
    }
    advance();
    return point;
}

std::vector<Eigen::VectorXd> sobol_points(int dimension, std::size_t count, std::uint64_t skip) {
    SobolSequence seq(dimension, skip);
    std::vector<Eigen::VectorXd> points;
    points.reserve(count);
    for (std::size_t i = 0; i < count; ++i) points.push_back(seq.next());
    return points;
}

}  // namespace sboc
