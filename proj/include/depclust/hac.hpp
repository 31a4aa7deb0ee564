#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "depclust/constraints.hpp"
#include "depclust/similarity.hpp"

namespace depclust {

/// Cluster assignment with ids 0..k-1, numbered by each cluster's smallest document.
struct Partition {
  std::vector<std::size_t> assignment;
  std::size_t k = 0;

  friend bool operator==(const Partition&, const Partition&) = default;
};

Partition make_partition(const std::vector<std::vector<std::size_t>>& clusters, std::size_t n);

enum class MergeKind { similarity, must_link };

struct MergeRecord {
  std::vector<std::size_t> a;  // cluster holding the smaller document index
  std::vector<std::size_t> b;
  double similarity = 0.0;     // group-average similarity at merge time
  MergeKind kind = MergeKind::similarity;

  friend bool operator==(const MergeRecord&, const MergeRecord&) = default;
};

using MergeLog = std::vector<MergeRecord>;

struct StopRule {
  enum class Kind { target_k, merge_to_one, non_negative };
  Kind kind = Kind::merge_to_one;
  std::size_t k = 1;

  static StopRule target(std::size_t k) { return {Kind::target_k, k}; }
  static StopRule merge_to_one() { return {Kind::merge_to_one, 1}; }
  /// Halt once the best remaining group-average similarity is negative.
  static StopRule non_negative() { return {Kind::non_negative, 1}; }
};

/// Working state of an agglomerative run. Clusters live in slots indexed by
/// their smallest document; merged-away slots are empty. `active_sim` holds
/// slot-pair group averages, with -1 written over cannot-link-blocked pairs.
struct ClusterState {
  std::vector<std::vector<std::size_t>> clusters;
  Eigen::MatrixXd active_sim;
  MergeLog merge_log;

  std::size_t cluster_count() const;
  std::vector<std::vector<std::size_t>> active_clusters() const;
};

struct ClusteringResult {
  MergeLog merge_log;
  Partition partition;
  std::size_t penalties = 0;   // cannot-link rejections
  std::size_t iterations = 0;  // merges + penalties in the main loop
};

/// Mean of matrix(i, j) over i in a, j in b, summed with a outer and b inner.
double group_average(const SimilarityMatrix& matrix, std::span<const std::size_t> a,
                     std::span<const std::size_t> b);

ClusterState singleton_state(const SimilarityMatrix& matrix);

/// Collapses each must-link component into one cluster (recorded as
/// must-link merges) and rebuilds active_sim.
ClusterState apply_ml_constraints(ClusterState state, const ConstraintSet& ml,
                                  const SimilarityMatrix& matrix);

bool validate_cl(std::span<const std::size_t> a, std::span<const std::size_t> b,
                 const ConstraintSet& cl);

/// Unconstrained group-average HAC.
ClusteringResult hac(const SimilarityMatrix& matrix, StopRule stop = StopRule::merge_to_one());

/// Must-link pre-merge, then greedy group-average merging of the best
/// non-negative pair; cannot-link-violating candidates get a -1 penalty
/// instead. Stops when no non-negative pair remains.
ClusteringResult constrained_hac(const SimilarityMatrix& matrix, const ConstraintSet& constraints);

/// Replays the first merges of the log until k clusters remain.
Partition cut_dendrogram(const MergeLog& log, std::size_t n_leaves, std::size_t k);

/// Partition after replaying the whole log.
Partition final_partition(const MergeLog& log, std::size_t n_leaves);

}  // namespace depclust
