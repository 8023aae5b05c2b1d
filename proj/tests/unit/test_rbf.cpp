#include <cmath>
#include <memory>
#include <vector>

#include <Eigen/Core>

#include "doctest.h"

#include "sboc/errors.hpp"
#include "sboc/rbf.hpp"
#include "sboc/rng.hpp"
#include "sboc/sobol.hpp"

using sboc::Dataset;
using sboc::RbfModel;
using sboc::RngStream;
using sboc::train_rbf;

namespace {

Eigen::VectorXd vec1(double a) {
    Eigen::VectorXd v(1);
    v << a;
    return v;
}

Dataset line_dataset(const std::vector<double>& xs, const std::function<double(double)>& f) {
    Dataset data(1);
    for (double x : xs) data.insert({vec1(x), f(x)});
    return data;
}

}  // namespace

TEST_CASE("three-point fit interpolates exactly") {
    Dataset data(1);
    data.insert({vec1(0.0), 0.0});
    data.insert({vec1(0.5), 1.0});
    data.insert({vec1(1.0), 0.0});
    const RngStream rng(1, "rbf-test");
    const auto model = train_rbf(data, rng);
    for (std::size_t i = 0; i < data.size(); ++i) {
        CHECK(std::abs(model->predict(data[i].x) - data[i].y) < 1e-6);
    }
}

TEST_CASE("affine data is reproduced everywhere by the tail") {
    const auto f = [](double x) { return 2.0 * x + 1.0; };
    const Dataset data = line_dataset({0.0, 0.2, 0.4, 0.6, 0.8, 1.0}, f);
    const RngStream rng(3, "rbf-test");
    const auto model = train_rbf(data, rng);
    for (int i = 0; i < 20; ++i) {
        const double x = (i + 0.5) / 20.0;
        CHECK(std::abs(model->predict(vec1(x)) - f(x)) < 1e-4);
    }
}

TEST_CASE("the chosen shape comes from the equi-spaced candidate grid") {
    // With ten points the candidate shapes are exactly 0.1, 0.2, ..., 1.0.
    const auto f = [](double x) { return std::sin(5.0 * x); };
    const Dataset data =
        line_dataset({0.05, 0.15, 0.25, 0.35, 0.45, 0.55, 0.65, 0.75, 0.85, 0.95}, f);
    const RngStream rng(7, "rbf-test");
    const auto model = train_rbf(data, rng);
    bool on_grid = false;
    for (int c = 1; c <= 10; ++c) {
        if (std::abs(model->shape() - 0.1 * c) < 1e-12) on_grid = true;
    }
    CHECK(on_grid);
    CHECK(model->shape() >= 0.1);
    CHECK(model->shape() <= 1.0);
}

TEST_CASE("prediction formula hand-checks") {
    // One center with weight c: at the center the kernel contributes
    // c * sqrt(0 + shape^2) = c * shape.
    {
        Eigen::MatrixXd centers(1, 1);
        centers << 0.4;
        const double c = 2.5, shape = 0.3;
        const RbfModel model(centers, vec1(c), 0.0, vec1(0.0), shape);
        CHECK(model.predict(vec1(0.4)) == doctest::Approx(c * shape).epsilon(1e-14));
    }
    // Zero kernel weights leave only the affine tail.
    {
        Eigen::MatrixXd centers(1, 1);
        centers << 0.9;
        const RbfModel model(centers, vec1(0.0), 1.0, vec1(2.0), 0.5);
        CHECK(model.predict(vec1(0.5)) == doctest::Approx(2.0).epsilon(1e-14));
    }
}

TEST_CASE("trained weights satisfy the moment conditions") {
    Dataset data(2);
    RngStream gen(11, "rbf-moment-data");
    for (const auto& p : sboc::sobol_points(2, 14)) {
        data.insert({p, std::sin(3.0 * p[0]) + p[1] * p[1] + 0.2 * gen.uniform01()});
    }
    const RngStream rng(5, "rbf-test");
    const auto model = train_rbf(data, rng);

    const Eigen::VectorXd& beta = model->weights();
    const double scale = beta.cwiseAbs().sum() + 1.0;
    CHECK(std::abs(beta.sum()) / scale < 1e-8);
    const Eigen::VectorXd first_moment = model->centers().transpose() * beta;
    CHECK(first_moment.cwiseAbs().maxCoeff() / scale < 1e-8);
}

TEST_CASE("training interpolates random smooth datasets") {
    for (int trial = 0; trial < 5; ++trial) {
        Dataset data(2);
        RngStream gen(100 + trial, "rbf-interp-data");
        for (int i = 0; i < 12; ++i) {
            Eigen::VectorXd x(2);
            x << gen.uniform01(), gen.uniform01();
            data.insert({x, std::cos(4.0 * x[0]) * x[1] + x[0]});
        }
        const RngStream rng(trial, "rbf-test");
        const auto model = train_rbf(data, rng);
        for (std::size_t i = 0; i < data.size(); ++i) {
            const double err = std::abs(model->predict(data[i].x) - data[i].y);
            CHECK(err < 1e-6 * (1.0 + std::abs(data[i].y)));
        }
    }
}

TEST_CASE("training is deterministic in the stream identity") {
    Dataset data(1);
    for (int i = 0; i < 8; ++i) data.insert({vec1(i / 7.0), std::sin(2.0 * i)});
    const auto a = train_rbf(data, RngStream(9, "rbf-test"));
    const auto b = train_rbf(data, RngStream(9, "rbf-test"));
    CHECK(a->shape() == b->shape());
    CHECK((a->weights() - b->weights()).cwiseAbs().maxCoeff() == 0.0);
    CHECK(a->offset() == b->offset());
    CHECK((a->linear() - b->linear()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("too few points are rejected") {
    Dataset data(2);  // needs at least N + 2 = 4
    Eigen::VectorXd a(2), b(2), c(2);
    a << 0.1, 0.1;
    b << 0.5, 0.6;
    c << 0.9, 0.2;
    data.insert({a, 1.0});
    data.insert({b, 2.0});
    data.insert({c, 3.0});
    CHECK_THROWS_AS(train_rbf(data, RngStream(1, "rbf-test")), sboc::TooFewPoints);
}
