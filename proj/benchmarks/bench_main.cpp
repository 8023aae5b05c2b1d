#include <memory>
#include <vector>

#include <benchmark/benchmark.h>

#include "sboc/clustering.hpp"
#include "sboc/dataset.hpp"
#include "sboc/kriging.hpp"
#include "sboc/rbf.hpp"
#include "sboc/rng.hpp"
#include "sboc/sobol.hpp"

namespace {

/// Builds a smooth synthetic dataset on the unit cube for model fitting.
sboc::Dataset make_dataset(int dimension, int count) {
    sboc::Dataset data;
    for (const Eigen::VectorXd& x : sboc::sobol_points(dimension, count)) {
        double y = 0.0;
        for (Eigen::Index d = 0; d < x.size(); ++d) {
            y += (x[d] - 0.3) * (x[d] - 0.3) + 0.1 * x[d] * x[(d + 1) % x.size()];
        }
        data.insert({x, y});
    }
    return data;
}

void BM_SobolPoints(benchmark::State& state) {
    const int dimension = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(sboc::sobol_points(dimension, 1024));
    }
}
BENCHMARK(BM_SobolPoints)->Arg(2)->Arg(10)->Arg(30);

void BM_RbfTrain(benchmark::State& state) {
    const int count = static_cast<int>(state.range(0));
    const sboc::Dataset data = make_dataset(4, count);
    const sboc::RngStream rng(7, "bench-rbf");
    for (auto _ : state) {
        benchmark::DoNotOptimize(sboc::train_rbf(data, rng));
    }
}
BENCHMARK(BM_RbfTrain)->Arg(20)->Arg(60)->Arg(120);

void BM_RbfPredict(benchmark::State& state) {
    const sboc::Dataset data = make_dataset(4, 120);
    const sboc::RngStream rng(7, "bench-rbf");
    const auto model = sboc::train_rbf(data, rng);
    const Eigen::VectorXd probe = Eigen::VectorXd::Constant(4, 0.37);
    for (auto _ : state) {
        benchmark::DoNotOptimize(model->predict(probe));
    }
}
BENCHMARK(BM_RbfPredict);

void BM_KrigingTrain(benchmark::State& state) {
    const int count = static_cast<int>(state.range(0));
    const sboc::Dataset data = make_dataset(2, count);
    const sboc::RngStream rng(7, "bench-kriging");
    for (auto _ : state) {
        benchmark::DoNotOptimize(sboc::train_kriging(data, rng));
    }
}
BENCHMARK(BM_KrigingTrain)->Arg(10)->Arg(40);

void BM_Kmeans(benchmark::State& state) {
    const int count = static_cast<int>(state.range(0));
    const std::vector<Eigen::VectorXd> points = sboc::sobol_points(3, count);
    const sboc::RngStream rng(7, "bench-kmeans");
    for (auto _ : state) {
        benchmark::DoNotOptimize(sboc::kmeans(points, 4, rng));
    }
}
BENCHMARK(BM_Kmeans)->Arg(50)->Arg(200);

}  // namespace

BENCHMARK_MAIN();
