#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include <Eigen/Core>

#include "doctest.h"

#include "sboc/errors.hpp"
#include "sboc/sobol.hpp"

using sboc::SobolSequence;
using sboc::sobol_points;

TEST_CASE("one-dimensional sequence matches the reference values") {
    const auto pts = sobol_points(1, 4, 1);
    REQUIRE(pts.size() == 4);
    CHECK(pts[0][0] == 0.5);
    CHECK(pts[1][0] == 0.75);
    CHECK(pts[2][0] == 0.25);
    CHECK(pts[3][0] == 0.375);
}

TEST_CASE("six-dimensional sequence matches the reference values") {
    const double expected[8][6] = {
        {0.5, 0.5, 0.5, 0.5, 0.5, 0.5},
        {0.75, 0.25, 0.25, 0.25, 0.75, 0.75},
        {0.25, 0.75, 0.75, 0.75, 0.25, 0.25},
        {0.375, 0.375, 0.625, 0.875, 0.375, 0.125},
        {0.875, 0.875, 0.125, 0.375, 0.875, 0.625},
        {0.625, 0.125, 0.875, 0.625, 0.625, 0.875},
        {0.125, 0.625, 0.375, 0.125, 0.125, 0.375},
        {0.1875, 0.3125, 0.9375, 0.4375, 0.5625, 0.3125},
    };
    const auto pts = sobol_points(6, 8, 1);
    REQUIRE(pts.size() == 8);
    for (int i = 0; i < 8; ++i) {
        for (int d = 0; d < 6; ++d) {
            CAPTURE(i);
            CAPTURE(d);
            CHECK(pts[i][d] == expected[i][d]);
        }
    }
}

TEST_CASE("points stay in [0,1) and are pairwise distinct") {
    const auto pts = sobol_points(2, 256, 1);
    std::set<std::pair<double, double>> seen;
    for (const auto& p : pts) {
        CHECK(p[0] >= 0.0);
        CHECK(p[0] < 1.0);
        CHECK(p[1] >= 0.0);
        CHECK(p[1] < 1.0);
        seen.insert({p[0], p[1]});
    }
    CHECK(seen.size() == pts.size());
}

TEST_CASE("aligned dyadic blocks are one-per-stratum on every axis") {
    // In any block of 2^m consecutive points starting at a multiple of 2^m,
    // each axis hits every dyadic interval of width 2^-m exactly once.
    const int m = 4;
    const int block = 1 << m;  // 16
    for (int dim : {1, 2, 3, 6}) {
        for (int block_index : {0, 1, 3}) {
            const auto pts =
                sobol_points(dim, block, static_cast<std::uint64_t>(block_index) * block);
            for (int d = 0; d < dim; ++d) {
                std::vector<int> strata;
                for (const auto& p : pts) {
                    strata.push_back(static_cast<int>(std::floor(p[d] * block)));
                }
                std::sort(strata.begin(), strata.end());
                for (int s = 0; s < block; ++s) {
                    CAPTURE(dim);
                    CAPTURE(block_index);
                    CAPTURE(d);
                    CHECK(strata[s] == s);
                }
            }
        }
    }
}

TEST_CASE("skipping is equivalent to discarding a prefix") {
    const auto skipped = sobol_points(3, 8, 5);
    const auto full = sobol_points(3, 13, 0);
    for (int i = 0; i < 8; ++i) {
        CHECK((skipped[i] - full[i + 5]).cwiseAbs().maxCoeff() == 0.0);
    }
}

TEST_CASE("the generator is incremental and restartable") {
    SobolSequence seq(4, 1);
    CHECK(seq.dimension() == 4);
    CHECK(seq.index() == 1);
    const Eigen::VectorXd first = seq.next();
    CHECK(seq.index() == 2);
    SobolSequence again(4, 1);
    CHECK((again.next() - first).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("dimensions beyond the table are rejected") {
    CHECK_THROWS_AS(SobolSequence(65, 1), sboc::DimensionUnsupported);
    CHECK_NOTHROW(SobolSequence(64, 1));
    CHECK_THROWS(SobolSequence(0, 1));
}
