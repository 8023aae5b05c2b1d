#include "sboc/engine.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <utility>

#include "sboc/clustering.hpp"
#include "sboc/errors.hpp"
#include "sboc/rng.hpp"
#include "sboc/sobol.hpp"

namespace sboc {

namespace {

constexpr int kMaxClusterSearch = 12;

/// Shared run state: archive plus the evaluation log.
struct RunState {
    RunResult result;
    const Objective* objective = nullptr;

    double evaluate(int iteration, Strategy strategy, const Eigen::VectorXd& x) {
        double y = (*objective)(x);
        if (!std::isfinite(y)) throw ObjectiveFailure("objective returned a non-finite value");
        result.data.insert({x, y});
        PointRecord record;
        record.iteration = iteration;
        record.strategy = strategy;
        record.x = x;
        record.y = y;
        const auto [best_x, best_y] = incumbent(result.data);
        record.best_x = best_x;
        record.best_y = best_y;
        result.trace.push_back(std::move(record));
        return y;
    }
};

void validate_config(int dimension, const SbocConfig& config) {
    if (dimension < 1) throw std::invalid_argument("dimension must be positive");
    if (config.max_evaluations < 1) throw std::invalid_argument("evaluation budget required");
    if (!(config.neighborhood_fraction > 0.0) || config.neighborhood_fraction > 1.0) {
        throw std::invalid_argument("neighborhood fraction must be in (0, 1]");
    }
    if (!(config.elbow_threshold > 0.0)) throw std::invalid_argument("elbow threshold");
    if (config.eta_schedule.empty()) throw std::invalid_argument("eta schedule is empty");
    for (double eta : config.eta_schedule) {
        if (!(eta > 0.0)) throw std::invalid_argument("eta values must be positive");
    }
    if (config.separation < 0.0) throw std::invalid_argument("separation must be non-negative");
}

/// Tops the archive up to `required` points with fresh quasi-random points
/// so an unidentifiable model can be retrained (skipping near-duplicates).
void augment_design(RunState& state, int dimension, int required, double separation) {
    SobolSequence sequence(dimension);
    int scanned = 0;
    const int scan_cap = 10 * required + 100;
    while (static_cast<int>(state.result.data.size()) < required && scanned < scan_cap) {
        const Eigen::VectorXd x = sequence.next();
        ++scanned;
        if (!min_separation_ok(x, state.result.data, separation)) continue;
        state.evaluate(0, Strategy::Initial, x);
    }
}

}  // namespace

const char* strategy_name(Strategy strategy) {
    switch (strategy) {
        case Strategy::Initial:
            return "initial";
        case Strategy::SurrogateMin:
            return "surrogate-min";
        case Strategy::Explore:
            return "explore";
        case Strategy::Exploit:
            return "exploit";
    }
    return "unknown";
}

double eta_for_iteration(int iteration) {
    static const double schedule[] = {0.5, 1.5, 2.5, 5.0, 10.0};
    if (iteration < 1) throw std::invalid_argument("iterations are 1-based");
    return schedule[(iteration - 1) % 5];
}

std::vector<std::size_t> local_neighborhood(const Dataset& data, std::size_t count) {
    if (count < 1 || count > data.size()) {
        throw std::invalid_argument("neighborhood size must be between 1 and the archive size");
    }
    const Eigen::VectorXd& center = data.best().x;
    std::vector<std::size_t> order(data.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return (data[a].x - center).squaredNorm() < (data[b].x - center).squaredNorm();
    });
    order.resize(count);
    return order;
}

Eigen::VectorXd exploitation_weights(const std::vector<double>& values, double reference,
                                     double eta) {
    if (values.empty()) throw std::invalid_argument("weights need at least one value");
    if (!(eta > 0.0)) throw std::invalid_argument("eta must be positive");
    Eigen::VectorXd weights(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        const double shifted = std::max(0.0, (values[i] - reference) / eta);
        weights[static_cast<Eigen::Index>(i)] = std::exp(-std::sqrt(shifted));
    }
    const double total = weights.sum();
    if (total > 0.0 && std::isfinite(total)) return weights / total;
    return Eigen::VectorXd::Constant(values.size(), 1.0 / static_cast<double>(values.size()));
}

Eigen::VectorXd exploitation_point(const std::vector<Eigen::VectorXd>& points,
                                   const Eigen::VectorXd& weights) {
    if (points.empty() || weights.size() != static_cast<Eigen::Index>(points.size())) {
        throw std::invalid_argument("one weight per point required");
    }
    Eigen::VectorXd average = Eigen::VectorXd::Zero(points.front().size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        average += weights[static_cast<Eigen::Index>(i)] * points[i];
    }
    return average;
}

std::optional<Eigen::VectorXd> exploitation_candidate(const Dataset& data, double eta,
                                                      double fraction, double separation) {
    if (data.size() < 2) throw std::invalid_argument("exploitation needs at least two points");
    if (!(fraction > 0.0) || fraction > 1.0) throw std::invalid_argument("fraction in (0, 1]");
    const auto count = static_cast<std::size_t>(
        std::ceil(fraction * static_cast<double>(data.size())));
    const auto neighborhood = local_neighborhood(data, count);

    std::vector<Eigen::VectorXd> points;
    std::vector<double> values;
    points.reserve(neighborhood.size());
    values.reserve(neighborhood.size());
    for (std::size_t index : neighborhood) {
        points.push_back(data[index].x);
        values.push_back(data[index].y);
    }
    const Eigen::VectorXd weights = exploitation_weights(values, data.best().y, eta);
    Eigen::VectorXd candidate = exploitation_point(points, weights);
    if (!min_separation_ok(candidate, data, separation)) return std::nullopt;
    return candidate;
}

RunResult run(const Objective& objective, int dimension, const SbocConfig& config) {
    if (!objective) throw std::invalid_argument("objective is required");
    validate_config(dimension, config);

    const double separation =
        config.separation > 0.0 ? config.separation : default_separation(dimension);
    const int min_trainable =
        std::max(surrogate_min_points(config.surrogate, dimension), dimension + 2);

    std::vector<Eigen::VectorXd> design;
    if (!config.initial_design.empty()) {
        for (const auto& x : config.initial_design) {
            if (x.size() != dimension) throw std::invalid_argument("initial point dimension");
            if ((x.array() < 0.0).any() || (x.array() > 1.0).any()) {
                throw std::invalid_argument("initial points must be normalized to [0, 1]");
            }
        }
        if (config.max_evaluations < static_cast<int>(config.initial_design.size())) {
            throw std::invalid_argument("budget smaller than the supplied initial design");
        }
        design = config.initial_design;
    } else {
        const int count = config.initial_points > 0 ? config.initial_points : 5 * dimension;
        if (count < min_trainable) {
            throw std::invalid_argument("initial design too small to train the model");
        }
        if (config.max_evaluations <= count) {
            throw std::invalid_argument("budget must exceed the initial design size");
        }
        design = sobol_points(dimension, count);
    }

    RunState state;
    state.objective = &objective;

    // An iteration can add zero points when every candidate is screened as a
    // duplicate.  That only persists once the archive saturates the cube at
    // the separation radius, but it must end the run rather than spin, so a
    // long streak of pointless iterations terminates with the incumbent.
    constexpr int kStallLimit = 25;
    int stalled_iterations = 0;

    const RngStream rng(config.seed, "sboc");
    try {
        for (const auto& x : design) state.evaluate(0, Strategy::Initial, x);

        for (int iteration = 1;
             static_cast<int>(state.result.data.size()) < config.max_evaluations; ++iteration) {
            const RngStream iter_rng = rng.derive("iteration", iteration);
            IterationRecord info;
            info.iteration = iteration;
            info.eta = config.eta_schedule[(iteration - 1) % config.eta_schedule.size()];

            // A design too small for the model family is topped up once with
            // further quasi-random points (only reachable with a
            // user-supplied design; the generated design is pre-validated).
            if (static_cast<int>(state.result.data.size()) < min_trainable) {
                if (min_trainable > config.max_evaluations) {
                    throw TooFewPoints("budget cannot accommodate a trainable design");
                }
                augment_design(state, dimension, min_trainable, separation);
                if (static_cast<int>(state.result.data.size()) >= config.max_evaluations) {
                    break;  // the top-up itself consumed the budget
                }
            }
            const auto model = train_surrogate(state.result.data,
                                               iter_rng.derive("surrogate"), config.surrogate);

            // Candidate 1: the model's own minimizer, searched from every
            // archive point.
            const CompassResult search = minimize_surrogate(
                *model, state.result.data.coordinates(), config.surrogate_search);
            if (min_separation_ok(search.x, state.result.data, separation)) {
                state.evaluate(iteration, Strategy::SurrogateMin, search.x);
                info.surrogate_point_added = true;
            }

            // Candidate 2: midpoint of the widest gap between neighboring
            // clusters of the archive.
            const std::vector<Eigen::VectorXd> points = state.result.data.coordinates();
            const RngStream cluster_rng = iter_rng.derive("clustering");
            Clustering clustering;
            ElbowOptions elbow;
            elbow.threshold = config.elbow_threshold;
            elbow.max_clusters = kMaxClusterSearch;
            try {
                clustering = elbow_select(points, cluster_rng, elbow).clustering;
            } catch (const DegenerateSpread&) {
                clustering = kmeans(points, 2, cluster_rng.derive("kmeans-c", 2));
            }
            info.cluster_count = clustering.cluster_count;
            const Eigen::VectorXd explore = exploration_point(clustering, points);
            if (min_separation_ok(explore, state.result.data, separation)) {
                state.evaluate(iteration, Strategy::Explore, explore);
                info.explore_point_added = true;
            }

            // Candidate 3: value-weighted average of the incumbent's
            // neighborhood.
            info.neighborhood_size = static_cast<int>(
                std::ceil(config.neighborhood_fraction *
                          static_cast<double>(state.result.data.size())));
            const auto exploit = exploitation_candidate(
                state.result.data, info.eta, config.neighborhood_fraction, separation);
            if (exploit) {
                state.evaluate(iteration, Strategy::Exploit, *exploit);
                info.exploit_point_added = true;
            }

            info.best_y_end = state.result.data.best().y;
            state.result.iterations.push_back(info);

            if (info.surrogate_point_added || info.explore_point_added ||
                info.exploit_point_added) {
                stalled_iterations = 0;
            } else if (++stalled_iterations >= kStallLimit) {
                break;
            }
        }
        state.result.status = RunStatus::Success;
    } catch (const ObjectiveFailure& failure) {
        state.result.status = RunStatus::ObjectiveFailure;
        state.result.message = failure.what();
    } catch (const Error& failure) {
        state.result.status = RunStatus::SurrogateFailure;
        state.result.message = failure.what();
    }

    if (!state.result.data.empty()) {
        const auto [best_x, best_y] = incumbent(state.result.data);
        state.result.best_x = best_x;
        state.result.best_y = best_y;
    }
    return state.result;
}

void write_trace(std::ostream& out, const RunResult& result) {
    if (result.trace.empty()) return;
    const Eigen::Index dimension = result.trace.front().x.size();

    out << "iter,K,strategy";
    char buffer[64];
    for (Eigen::Index d = 1; d <= dimension; ++d) {
        std::snprintf(buffer, sizeof(buffer), ",x%lld", static_cast<long long>(d));
        out << buffer;
    }
    out << ",f";
    for (Eigen::Index d = 1; d <= dimension; ++d) {
        std::snprintf(buffer, sizeof(buffer), ",xbest%lld", static_cast<long long>(d));
        out << buffer;
    }
    out << ",fbest\n";

    const auto append_value = [&](double value) {
        std::snprintf(buffer, sizeof(buffer), ",%.12g", value);
        out << buffer;
    };
    for (std::size_t i = 0; i < result.trace.size(); ++i) {
        const PointRecord& record = result.trace[i];
        out << record.iteration << ',' << (i + 1) << ',' << strategy_name(record.strategy);
        for (Eigen::Index d = 0; d < dimension; ++d) append_value(record.x[d]);
        append_value(record.y);
        for (Eigen::Index d = 0; d < dimension; ++d) append_value(record.best_x[d]);
        append_value(record.best_y);
        out << '\n';
    }
}

}  // namespace sboc
