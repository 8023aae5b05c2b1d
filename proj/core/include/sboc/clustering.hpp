#pragma once

#include <vector>

#include <Eigen/Core>

#include "sboc/rng.hpp"

namespace sboc {

/// Result of a k-means partition over a point set.
///
/// `icsd[c]` is the sum of plain Euclidean distances of cluster c's members
/// to their centroid; `ticsd` is the total over clusters.  Labels always
/// assign every point to its nearest centroid (Lloyd fixed point) and no
/// cluster is empty.
struct Clustering {
    int cluster_count = 0;
    std::vector<int> labels;
    std::vector<Eigen::VectorXd> centroids;
    std::vector<double> icsd;
    double ticsd = 0.0;
};

struct KmeansOptions {
    int restarts = 10;
    int max_iterations = 100;
};

/// One seeded k-means run: k-means++ initialization from `rng`, then Lloyd
/// iterations to a label fixed point (or the iteration cap), with empty
/// clusters repaired by reseeding at the point farthest from its centroid.
Clustering kmeans_single(const std::vector<Eigen::VectorXd>& points, int cluster_count,
                         RngStream rng, int max_iterations = 100);

/// Best-of-restarts k-means: runs kmeans_single on sub-streams
/// rng.derive("restart", r) for r = 0..restarts-1 and keeps the result with
/// the smallest ticsd (ties: lowest restart index).
Clustering kmeans(const std::vector<Eigen::VectorXd>& points, int cluster_count,
                  const RngStream& rng, const KmeansOptions& options = {});

struct ElbowOptions {
    double threshold = 0.10;   // relative dispersion-drop cutoff
    int max_clusters = 12;     // hard cap on the cluster-count search
    KmeansOptions kmeans;
};

struct ElbowResult {
    int cluster_count = 0;       // selected C*
    Clustering clustering;       // k-means result at C*
    std::vector<double> ticsd;   // clamped dispersion curve, ticsd[0] for C=1
};

/// Picks the cluster count where the dispersion curve flattens: the smallest
/// C >= 2 whose drop to C+1, relative to the first drop, falls below the
/// threshold.  The curve is clamped to be non-increasing first.  Throws
/// DegenerateSpread when the first drop is too small to normalize against.
ElbowResult elbow_select(const std::vector<Eigen::VectorXd>& points, const RngStream& rng,
                         const ElbowOptions& options = {});

/// Minimum pairwise member distance between two clusters, with the achieving
/// point indices (lexicographically smallest pair on ties).
struct InterClusterDistance {
    double distance = 0.0;
    int point_u = -1;  // index into `points`, member of cluster u
    int point_v = -1;  // index into `points`, member of cluster v
};

InterClusterDistance inter_cluster_distance(const Clustering& clustering,
                                            const std::vector<Eigen::VectorXd>& points,
                                            int cluster_u, int cluster_v);

/// Midpoint of the closest point pair of the most separated
/// nearest-neighbor cluster pair: for every cluster take its nearest
/// neighbor by inter-cluster distance, deduplicate the unordered pairs, pick
/// the pair with the largest distance (ties: lexicographically smallest
/// pair), and return the midpoint of its achieving points.
Eigen::VectorXd exploration_point(const Clustering& clustering,
                                  const std::vector<Eigen::VectorXd>& points);

/// Builds a Clustering view (centroids and dispersions) from fixed labels,
/// e.g. for tests or external partitions.  Labels must cover 0..C-1 with no
/// empty cluster; no fixed-point property is implied.
Clustering clustering_from_labels(const std::vector<Eigen::VectorXd>& points,
                                  const std::vector<int>& labels, int cluster_count);

/// True when every point's label is the index of a nearest centroid.
bool is_lloyd_fixed_point(const Clustering& clustering,
                          const std::vector<Eigen::VectorXd>& points);

}  // namespace sboc
