#include "sboc/clustering.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

#include "sboc/errors.hpp"

namespace sboc {

namespace {

double squared_distance(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
    return (a - b).squaredNorm();
}

/// Nearest-centroid labels; ties go to the lowest centroid index.
std::vector<int> assign_labels(const std::vector<Eigen::VectorXd>& points,
                               const std::vector<Eigen::VectorXd>& centroids) {
    std::vector<int> labels(points.size(), 0);
    for (std::size_t i = 0; i < points.size(); ++i) {
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t c = 0; c < centroids.size(); ++c) {
            const double d2 = squared_distance(points[i], centroids[c]);
            if (d2 < best) {
                best = d2;
                labels[i] = static_cast<int>(c);
            }
        }
    }
    return labels;
}

/// Moves the point farthest from its own centroid into each empty cluster.
/// Returns true when a repair was needed.
bool repair_empty_clusters(const std::vector<Eigen::VectorXd>& points,
                           std::vector<Eigen::VectorXd>& centroids, std::vector<int>& labels) {
    const int cluster_count = static_cast<int>(centroids.size());
    std::vector<int> counts(cluster_count, 0);
    for (int label : labels) ++counts[label];

    bool repaired = false;
    for (int e = 0; e < cluster_count; ++e) {
        if (counts[e] > 0) continue;
        int donor = -1;
        double farthest = -1.0;
        for (std::size_t i = 0; i < points.size(); ++i) {
            if (counts[labels[i]] < 2) continue;  // never empty another cluster
            const double d2 = squared_distance(points[i], centroids[labels[i]]);
            if (d2 > farthest) {
                farthest = d2;
                donor = static_cast<int>(i);
            }
        }
        if (donor < 0) break;  // fewer distinct points than clusters; give up
        --counts[labels[donor]];
        labels[donor] = e;
        counts[e] = 1;
        centroids[e] = points[donor];
        repaired = true;
    }
    return repaired;
}

std::vector<Eigen::VectorXd> cluster_means(const std::vector<Eigen::VectorXd>& points,
                                           const std::vector<int>& labels, int cluster_count) {
    const Eigen::Index dim = points.front().size();
    std::vector<Eigen::VectorXd> means(cluster_count, Eigen::VectorXd::Zero(dim));
    std::vector<int> counts(cluster_count, 0);
    for (std::size_t i = 0; i < points.size(); ++i) {
        means[labels[i]] += points[i];
        ++counts[labels[i]];
    }
    for (int c = 0; c < cluster_count; ++c) {
        if (counts[c] > 0) means[c] /= static_cast<double>(counts[c]);
    }
    return means;
}

/// k-means++ seeding: first seed uniform, then each next seed drawn with
/// probability proportional to the squared distance to the nearest seed.
std::vector<Eigen::VectorXd> seed_centroids(const std::vector<Eigen::VectorXd>& points,
                                            int cluster_count, RngStream& rng) {
    const std::size_t n = points.size();
    std::vector<Eigen::VectorXd> centroids;
    centroids.reserve(cluster_count);
    centroids.push_back(points[rng.uniform_int(static_cast<std::uint64_t>(n))]);

    std::vector<double> d2(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) d2[i] = squared_distance(points[i], centroids[0]);

    while (static_cast<int>(centroids.size()) < cluster_count) {
        double total = 0.0;
        for (double v : d2) total += v;
        std::size_t pick = 0;
        if (total > 0.0) {
            double target = rng.uniform01() * total;
            double running = 0.0;
            pick = n - 1;
            for (std::size_t i = 0; i < n; ++i) {
                running += d2[i];
                if (running >= target && d2[i] > 0.0) {
                    pick = i;
                    break;
                }
            }
        } else {
            pick = rng.uniform_int(static_cast<std::uint64_t>(n));
        }
        centroids.push_back(points[pick]);
        for (std::size_t i = 0; i < n; ++i) {
            d2[i] = std::min(d2[i], squared_distance(points[i], centroids.back()));
        }
    }
    return centroids;
}

void fill_dispersion(Clustering& result, const std::vector<Eigen::VectorXd>& points) {
    result.icsd.assign(result.cluster_count, 0.0);
    for (std::size_t i = 0; i < points.size(); ++i) {
        result.icsd[result.labels[i]] += (points[i] - result.centroids[result.labels[i]]).norm();
    }
    result.ticsd = 0.0;
    for (double v : result.icsd) result.ticsd += v;
}

}  // namespace

Clustering kmeans_single(const std::vector<Eigen::VectorXd>& points, int cluster_count,
                         RngStream rng, int max_iterations) {
    if (cluster_count < 1) throw std::invalid_argument("cluster count must be positive");
    if (points.size() < static_cast<std::size_t>(cluster_count)) {
        throw TooFewPoints("k-means needs at least as many points as clusters");
    }

    std::vector<Eigen::VectorXd> centroids = seed_centroids(points, cluster_count, rng);
    std::vector<int> labels;
    for (int iteration = 0; iteration < max_iterations; ++iteration) {
        std::vector<int> next = assign_labels(points, centroids);
        const bool repaired = repair_empty_clusters(points, centroids, next);
        if (!repaired && next == labels) break;  // label fixed point
        labels = std::move(next);
        centroids = cluster_means(points, labels, cluster_count);
    }
    // Final consistency pass so labels match the returned centroids.
    labels = assign_labels(points, centroids);
    repair_empty_clusters(points, centroids, labels);

    Clustering result;
    result.cluster_count = cluster_count;
    result.labels = std::move(labels);
    result.centroids = std::move(centroids);
    fill_dispersion(result, points);
    return result;
}

Clustering kmeans(const std::vector<Eigen::VectorXd>& points, int cluster_count,
                  const RngStream& rng, const KmeansOptions& options) {
    if (options.restarts < 1) throw std::invalid_argument("restarts must be positive");
    Clustering best;
    bool have_best = false;
    for (int r = 0; r < options.restarts; ++r) {
        Clustering candidate =
            kmeans_single(points, cluster_count, rng.derive("restart", r), options.max_iterations);
        if (!have_best || candidate.ticsd < best.ticsd) {
            best = std::move(candidate);
            have_best = true;
        }
    }
    return best;
}

ElbowResult elbow_select(const std::vector<Eigen::VectorXd>& points, const RngStream& rng,
                         const ElbowOptions& options) {
    const int n = static_cast<int>(points.size());
    const int cap = std::min(options.max_clusters, n - 1);
    if (cap < 2) throw TooFewPoints("cluster-count selection needs at least three points");

    ElbowResult result;

    // Dispersion about the global centroid plays the role of the one-cluster
    // partition.
    Eigen::VectorXd mean = Eigen::VectorXd::Zero(points.front().size());
    for (const auto& p : points) mean += p;
    mean /= static_cast<double>(n);
    double t1 = 0.0;
    for (const auto& p : points) t1 += (p - mean).norm();
    result.ticsd.push_back(t1);

    Clustering current = kmeans(points, 2, rng.derive("kmeans-c", 2), options.kmeans);
    double t2 = std::min(current.ticsd, t1);
    result.ticsd.push_back(t2);

    const double denom = t1 - t2;
    if (!(denom > 1e-12 * t1)) {
        throw DegenerateSpread("dispersion drop from one to two clusters is negligible");
    }

    double previous = t2;
    for (int c = 2; c < cap; ++c) {
        Clustering next = kmeans(points, c + 1, rng.derive("kmeans-c", c + 1), options.kmeans);
        const double t_next = std::min(next.ticsd, previous);  // keep the curve non-increasing
        result.ticsd.push_back(t_next);
        if ((previous - t_next) / denom < options.threshold) {
            result.cluster_count = c;
            result.clustering = std::move(current);
            return result;
        }
        previous = t_next;
        current = std::move(next);
    }
    result.cluster_count = cap;
    result.clustering = std::move(current);
    return result;
}

InterClusterDistance inter_cluster_distance(const Clustering& clustering,
                                            const std::vector<Eigen::VectorXd>& points,
                                            int cluster_u, int cluster_v) {
    if (cluster_u == cluster_v) throw std::invalid_argument("clusters must differ");
    InterClusterDistance best;
    best.distance = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (clustering.labels[i] != cluster_u) continue;
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (clustering.labels[j] != cluster_v) continue;
            const double d = (points[i] - points[j]).norm();
            if (d < best.distance) {
                best.distance = d;
                best.point_u = static_cast<int>(i);
                best.point_v = static_cast<int>(j);
            }
        }
    }
    if (best.point_u < 0) throw std::invalid_argument("both clusters must be non-empty");
    return best;
}

Eigen::VectorXd exploration_point(const Clustering& clustering,
                                  const std::vector<Eigen::VectorXd>& points) {
    const int count = clustering.cluster_count;
    if (count < 2) throw std::invalid_argument("exploration needs at least two clusters");

    std::vector<std::vector<InterClusterDistance>> icd(count,
                                                       std::vector<InterClusterDistance>(count));
    for (int u = 0; u < count; ++u) {
        for (int v = u + 1; v < count; ++v) {
            icd[u][v] = inter_cluster_distance(clustering, points, u, v);
            icd[v][u] = icd[u][v];
            std::swap(icd[v][u].point_u, icd[v][u].point_v);
        }
    }

    // Each cluster's nearest neighbor, then the most separated such pair.
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < count; ++u) {
        int nearest = -1;
        double nearest_distance = std::numeric_limits<double>::infinity();
        for (int v = 0; v < count; ++v) {
            if (v == u) continue;
            if (icd[u][v].distance < nearest_distance) {
                nearest_distance = icd[u][v].distance;
                nearest = v;
            }
        }
        const std::pair<int, int> key{std::min(u, nearest), std::max(u, nearest)};
        if (std::find(pairs.begin(), pairs.end(), key) == pairs.end()) pairs.push_back(key);
    }

    std::pair<int, int> winner = pairs.front();
    double winner_distance = icd[winner.first][winner.second].distance;
    for (const auto& candidate : pairs) {
        const double d = icd[candidate.first][candidate.second].distance;
        if (d > winner_distance || (d == winner_distance && candidate < winner)) {
            winner = candidate;
            winner_distance = d;
        }
    }

    const InterClusterDistance& link = icd[winner.first][winner.second];
    return 0.5 * (points[link.point_u] + points[link.point_v]);
}

Clustering clustering_from_labels(const std::vector<Eigen::VectorXd>& points,
                                  const std::vector<int>& labels, int cluster_count) {
    if (labels.size() != points.size()) throw std::invalid_argument("one label per point required");
    if (cluster_count < 1) throw std::invalid_argument("cluster count must be positive");
    std::vector<int> counts(cluster_count, 0);
    for (int label : labels) {
        if (label < 0 || label >= cluster_count) throw std::invalid_argument("label out of range");
        ++counts[label];
    }
    for (int c = 0; c < cluster_count; ++c) {
        if (counts[c] == 0) throw std::invalid_argument("every cluster must be non-empty");
    }

    Clustering result;
    result.cluster_count = cluster_count;
    result.labels = labels;
    result.centroids = cluster_means(points, labels, cluster_count);
    fill_dispersion(result, points);
    return result;
}

bool is_lloyd_fixed_point(const Clustering& clustering,
                          const std::vector<Eigen::VectorXd>& points) {
    for (std::size_t i = 0; i < points.size(); ++i) {
        const double own = (points[i] - clustering.centroids[clustering.labels[i]]).norm();
        for (int c = 0; c < clustering.cluster_count; ++c) {
            const double other = (points[i] - clustering.centroids[c]).norm();
            if (other < own - 1e-12) return false;
        }
    }
    return true;
}

}  // namespace sboc
