#include <cmath>
#include <memory>
#include <vector>

#include <Eigen/Core>

#include "doctest.h"

#include "sboc/errors.hpp"
#include "sboc/kriging.hpp"
#include "sboc/rng.hpp"
#include "sboc/sobol.hpp"

using sboc::Dataset;
using sboc::KrigingModel;
using sboc::RngStream;
using sboc::train_kriging;

namespace {

Eigen::VectorXd vec1(double a) {
    Eigen::VectorXd v(1);
    v << a;
    return v;
}

}  // namespace

TEST_CASE("quadratic trend bookkeeping") {
    CHECK(KrigingModel::trend_size(1) == 3);
    CHECK(KrigingModel::trend_size(2) == 6);
    CHECK(KrigingModel::trend_size(3) == 10);
    CHECK(KrigingModel::trend_size(6) == 28);

    Eigen::VectorXd x(2);
    x << 2.0, 3.0;
    const Eigen::VectorXd basis = KrigingModel::trend_basis(x);
    REQUIRE(basis.size() == 6);
    CHECK(basis[0] == 1.0);   // constant
    CHECK(basis[1] == 2.0);   // x1
    CHECK(basis[2] == 3.0);   // x2
    CHECK(basis[3] == 4.0);   // x1^2
    CHECK(basis[4] == 6.0);   // x1*x2
    CHECK(basis[5] == 9.0);   // x2^2
}

TEST_CASE("constant data predicts the constant everywhere") {
    Dataset data(1);
    for (double x : {0.0, 0.2, 0.45, 0.7, 0.85, 1.0}) data.insert({vec1(x), 5.0});
    const auto model = train_kriging(data, RngStream(2, "kriging-test"));
    for (double x : {0.05, 0.33, 0.5, 0.91}) {
        CHECK(std::abs(model->predict(vec1(x)) - 5.0) < 1e-6);
    }
}

TEST_CASE("training points are interpolated") {
    Dataset data(1);
    for (double x : {0.0, 0.15, 0.35, 0.55, 0.7, 0.85, 1.0}) {
        data.insert({vec1(x), std::sin(6.0 * x) + 0.5 * x});
    }
    const auto model = train_kriging(data, RngStream(4, "kriging-test"));
    for (std::size_t i = 0; i < data.size(); ++i) {
        const double err = std::abs(model->predict(data[i].x) - data[i].y);
        CHECK(err < 1e-6 * (1.0 + std::abs(data[i].y)));
    }
}

TEST_CASE("a pure quadratic is reproduced at unseen points") {
    const auto f = [](double x) { return x * x; };
    Dataset data(1);
    for (double x : {0.0, 0.1, 0.3, 0.45, 0.6, 0.75, 0.9, 1.0}) data.insert({vec1(x), f(x)});
    const auto model = train_kriging(data, RngStream(6, "kriging-test"));
    for (int i = 0; i < 20; ++i) {
        const double x = (i + 0.5) / 20.0;
        CHECK(std::abs(model->predict(vec1(x)) - f(x)) < 1e-4);
    }
}

TEST_CASE("prediction formula hand-checks") {
    // Zero correlation weights leave only the trend.
    {
        Eigen::MatrixXd centers(1, 1);
        centers << 0.5;
        Eigen::VectorXd trend(3);
        trend << 1.0, 2.0, 3.0;  // 1 + 2x + 3x^2
        const KrigingModel model(centers, vec1(1.0), trend, vec1(0.0), 0.0, 1.0);
        CHECK(model.predict(vec1(0.5)) ==
              doctest::Approx(1.0 + 2.0 * 0.5 + 3.0 * 0.25).epsilon(1e-14));
    }
    // One center, zero trend, weight 3, unit length scale: 3 exp(-d^2).
    {
        Eigen::MatrixXd centers(1, 1);
        centers << 0.2;
        const KrigingModel model(centers, vec1(1.0), Eigen::VectorXd::Zero(3), vec1(3.0),
                                 0.0, 1.0);
        const double d = 0.7 - 0.2;
        CHECK(model.predict(vec1(0.7)) ==
              doctest::Approx(3.0 * std::exp(-d * d)).epsilon(1e-14));
    }
}

TEST_CASE("two-dimensional smooth data trains and interpolates") {
    Dataset data(2);
    for (const auto& p : sboc::sobol_points(2, 10)) {
        data.insert({p, std::exp(-p.squaredNorm()) + p[0] * p[1]});
    }
    const auto model = train_kriging(data, RngStream(8, "kriging-test"));
    CHECK(model->dimension() == 2);
    CHECK(model->variance() > 0.0);
    CHECK(model->theta().size() == 2);
    for (std::size_t i = 0; i < data.size(); ++i) {
        const double err = std::abs(model->predict(data[i].x) - data[i].y);
        CHECK(err < 1e-5 * (1.0 + std::abs(data[i].y)));
    }
}

TEST_CASE("training is deterministic in the stream identity") {
    Dataset data(1);
    for (double x : {0.0, 0.2, 0.4, 0.6, 0.8, 1.0}) {
        data.insert({vec1(x), std::cos(3.0 * x)});
    }
    const auto a = train_kriging(data, RngStream(10, "kriging-test"));
    const auto b = train_kriging(data, RngStream(10, "kriging-test"));
    CHECK((a->theta() - b->theta()).cwiseAbs().maxCoeff() == 0.0);
    CHECK((a->trend() - b->trend()).cwiseAbs().maxCoeff() == 0.0);
    CHECK((a->weights() - b->weights()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("too few points for the quadratic trend are rejected") {
    Dataset data(1);  // needs at least (1+1)(1+2)/2 + 1 = 4 points
    data.insert({vec1(0.0), 1.0});
    data.insert({vec1(0.5), 2.0});
    data.insert({vec1(1.0), 3.0});
    CHECK_THROWS_AS(train_kriging(data, RngStream(1, "kriging-test")), sboc::TooFewPoints);
}
