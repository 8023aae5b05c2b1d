#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include <Eigen/Core>

#include "doctest.h"

#include "sboc/clustering.hpp"
#include "sboc/errors.hpp"
#include "sboc/rng.hpp"

using sboc::Clustering;
using sboc::RngStream;
using sboc::elbow_select;
using sboc::kmeans;
using sboc::kmeans_single;

namespace {

Eigen::VectorXd vec2(double a, double b) {
    Eigen::VectorXd v(2);
    v << a, b;
    return v;
}

Eigen::VectorXd vec1(double a) {
    Eigen::VectorXd v(1);
    v << a;
    return v;
}

/// Three tight, well-separated planar blobs with `per_blob` points each.
std::vector<Eigen::VectorXd> three_blobs(RngStream& gen, int per_blob) {
    const Eigen::VectorXd centers[3] = {vec2(0.15, 0.2), vec2(0.85, 0.25), vec2(0.5, 0.85)};
    std::vector<Eigen::VectorXd> points;
    for (int b = 0; b < 3; ++b) {
        for (int i = 0; i < per_blob; ++i) {
            points.push_back(centers[b] + 0.03 * vec2(gen.normal01(), gen.normal01()));
        }
    }
    return points;
}

/// The eleven-point planar fixture used by the exploration-step checks.
std::vector<Eigen::VectorXd> fixture_points() {
    return {
        vec2(0.55780029033203926, 0.97480034102225621),
        vec2(0.32325297764060462, 0.19730377977249863),
        vec2(0.81411267410572397, 0.48297458697109863),
        vec2(0.048349000000000003, 0.69013200113916084),
        vec2(0.74478862824812486, 0.023037844392571911),
        vec2(0.38527729216968915, 0.80829184096528839),
        vec2(0.87516550210353672, 0.53051593938035468),
        vec2(0.23440256381508548, 0.29989906913671027),
        vec2(0.61709506709393502, 0.37389794588683961),
        vec2(0.25759173897186061, 0.58099450456876855),
        vec2(0.0, 1.0),
    };
}

const std::vector<int> kFixtureLabels = {2, 1, 0, 2, 3, 2, 0, 1, 0, 2, 2};

}  // namespace

TEST_CASE("as many clusters as points yields singletons with zero spread") {
    const std::vector<Eigen::VectorXd> points = {vec2(0.1, 0.1), vec2(0.9, 0.1),
                                                 vec2(0.1, 0.9), vec2(0.9, 0.9)};
    const Clustering result = kmeans(points, 4, RngStream(1, "cluster-test"));
    CHECK(result.cluster_count == 4);
    CHECK(result.ticsd == 0.0);
    std::set<int> labels(result.labels.begin(), result.labels.end());
    CHECK(labels.size() == 4);
    CHECK(sboc::is_lloyd_fixed_point(result, points));
}

TEST_CASE("a collinear gap splits where the gap is") {
    const std::vector<Eigen::VectorXd> points = {vec1(0.0), vec1(0.1), vec1(0.9), vec1(1.0)};
    const Clustering result = kmeans(points, 2, RngStream(2, "cluster-test"));
    CHECK(result.labels[0] == result.labels[1]);
    CHECK(result.labels[2] == result.labels[3]);
    CHECK(result.labels[0] != result.labels[2]);
    CHECK(result.ticsd == doctest::Approx(0.2).epsilon(1e-12));
}

TEST_CASE("well-separated blobs are recovered and pass the invariants") {
    RngStream gen(33, "blob-data");
    const auto points = three_blobs(gen, 8);
    const Clustering result = kmeans(points, 3, RngStream(3, "cluster-test"));

    CHECK(sboc::is_lloyd_fixed_point(result, points));
    std::vector<int> counts(3, 0);
    for (int label : result.labels) {
        REQUIRE(label >= 0);
        REQUIRE(label < 3);
        ++counts[label];
    }
    for (int c : counts) CHECK(c == 8);  // no empty clusters, blobs intact
    // Every blob maps to a single label.
    for (int b = 0; b < 3; ++b) {
        for (int i = 1; i < 8; ++i) CHECK(result.labels[8 * b + i] == result.labels[8 * b]);
    }
    // Dispersions are consistent with the labels.
    double total = 0.0;
    for (double icsd : result.icsd) {
        CHECK(icsd >= 0.0);
        total += icsd;
    }
    CHECK(result.ticsd == doctest::Approx(total).epsilon(1e-12));
}

TEST_CASE("restarted k-means equals the best single run over its sub-streams") {
    RngStream gen(44, "restart-data");
    std::vector<Eigen::VectorXd> points;
    for (int i = 0; i < 30; ++i) points.push_back(vec2(gen.uniform01(), gen.uniform01()));

    const RngStream rng(4, "cluster-test");
    const Clustering best = kmeans(points, 4, rng);
    double manual_best = 1e300;
    for (int r = 0; r < 10; ++r) {
        manual_best =
            std::min(manual_best, kmeans_single(points, 4, rng.derive("restart", r)).ticsd);
    }
    CHECK(best.ticsd == manual_best);
}

TEST_CASE("k-means validates its inputs") {
    const std::vector<Eigen::VectorXd> two = {vec1(0.0), vec1(1.0)};
    CHECK_THROWS_AS(kmeans(two, 3, RngStream(1, "cluster-test")), sboc::TooFewPoints);
    CHECK_THROWS_AS(kmeans(two, 0, RngStream(1, "cluster-test")), std::invalid_argument);
}

TEST_CASE("the dispersion elbow finds three blobs") {
    RngStream gen(55, "elbow-data");
    const auto points = three_blobs(gen, 10);
    const auto result = elbow_select(points, RngStream(5, "cluster-test"));
    CHECK(result.cluster_count == 3);
    CHECK(result.clustering.cluster_count == 3);
    // The curve is evaluated lazily: entries for C = 1 .. C* + 1 only.
    CHECK(result.ticsd.size() == static_cast<std::size_t>(result.cluster_count + 1));
    // And it is non-increasing.
    for (std::size_t i = 1; i < result.ticsd.size(); ++i) {
        CHECK(result.ticsd[i] <= result.ticsd[i - 1]);
    }
}

TEST_CASE("degenerate spread is reported, tiny inputs are rejected") {
    const std::vector<Eigen::VectorXd> identical(5, vec2(0.5, 0.5));
    CHECK_THROWS_AS(elbow_select(identical, RngStream(6, "cluster-test")),
                    sboc::DegenerateSpread);

    const std::vector<Eigen::VectorXd> two = {vec2(0.0, 0.0), vec2(1.0, 1.0)};
    CHECK_THROWS_AS(elbow_select(two, RngStream(6, "cluster-test")), sboc::TooFewPoints);
}

TEST_CASE("inter-cluster distance is symmetric and exact on singletons") {
    const auto points = fixture_points();
    const Clustering clustering = sboc::clustering_from_labels(points, kFixtureLabels, 4);

    const auto uv = sboc::inter_cluster_distance(clustering, points, 0, 3);
    const auto vu = sboc::inter_cluster_distance(clustering, points, 3, 0);
    CHECK(uv.distance == vu.distance);
    CHECK(uv.point_u == vu.point_v);
    CHECK(uv.point_v == vu.point_u);

    // Cluster 3 is the singleton {p4}; its distance to cluster 0 is realized
    // by the nearest member of cluster 0, which is p8.
    CHECK(uv.point_v == 4);
    CHECK(uv.point_u == 8);
    CHECK(uv.distance == doctest::Approx((points[4] - points[8]).norm()).epsilon(1e-15));
}

TEST_CASE("the exploration midpoint matches the fixture") {
    const auto points = fixture_points();
    const Clustering clustering = sboc::clustering_from_labels(points, kFixtureLabels, 4);

    // The widest nearest-neighbor gap is between the singleton {p4} and
    // cluster 0, realized by the pair (p4, p8).
    const auto gap = sboc::inter_cluster_distance(clustering, points, 0, 3);
    CHECK(gap.distance == doctest::Approx(0.37337441848740344).epsilon(1e-12));

    const Eigen::VectorXd midpoint = sboc::exploration_point(clustering, points);
    CHECK(std::abs(midpoint[0] - 0.6810) < 5e-4);
    CHECK(std::abs(midpoint[1] - 0.1985) < 5e-4);
    // Exactly the average of the achieving pair.
    CHECK((midpoint - 0.5 * (points[4] + points[8])).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("clustering_from_labels reproduces centroids and dispersions") {
    const std::vector<Eigen::VectorXd> points = {vec1(0.0), vec1(0.2), vec1(0.9)};
    const Clustering view = sboc::clustering_from_labels(points, {0, 0, 1}, 2);
    CHECK(view.centroids[0][0] == doctest::Approx(0.1).epsilon(1e-15));
    CHECK(view.centroids[1][0] == doctest::Approx(0.9).epsilon(1e-15));
    CHECK(view.icsd[0] == doctest::Approx(0.2).epsilon(1e-12));
    CHECK(view.icsd[1] == 0.0);
    CHECK(view.ticsd == doctest::Approx(0.2).epsilon(1e-12));

    CHECK_THROWS_AS(sboc::clustering_from_labels(points, {0, 0, 0}, 2),
                    std::invalid_argument);  // empty cluster
    CHECK_THROWS_AS(sboc::clustering_from_labels(points, {0, 1}, 2),
                    std::invalid_argument);  // label count mismatch
}

TEST_CASE("random partitions never lose points or empty a cluster") {
    RngStream gen(77, "fuzz-data");
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Eigen::VectorXd> points;
        const int n = 5 + static_cast<int>(gen.uniform_int(20));
        for (int i = 0; i < n; ++i) points.push_back(vec2(gen.uniform01(), gen.uniform01()));
        const int c = 2 + static_cast<int>(gen.uniform_int(static_cast<std::uint64_t>(n - 1)));
        const Clustering result = kmeans(points, c, RngStream(trial, "cluster-test"));
        REQUIRE(result.labels.size() == points.size());
        std::vector<int> counts(c, 0);
        for (int label : result.labels) ++counts[label];
        for (int count : counts) CHECK(count > 0);
        CHECK(sboc::is_lloyd_fixed_point(result, points));
    }
}
