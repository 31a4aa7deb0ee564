#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "depclust/hac.hpp"

namespace depclust {

/// counts(i, j) = number of documents of class i in cluster j.
struct ContingencyTable {
  Eigen::MatrixXd counts;
  std::vector<std::string> class_names;  // row order, sorted

  Eigen::VectorXd cluster_sizes() const { return counts.colwise().sum().transpose(); }
  Eigen::VectorXd class_sizes() const { return counts.rowwise().sum(); }
  double total() const { return counts.sum(); }
};

struct ClusterScore {
  double purity = 0.0;
  double entropy = 0.0;
  std::size_t size = 0;

  friend bool operator==(const ClusterScore&, const ClusterScore&) = default;
};

struct EvaluationReport {
  std::size_t doc_count = 0;
  std::size_t cluster_count = 0;
  double purity = 0.0;
  double entropy = 0.0;     // base 2
  double entropy_ln = 0.0;  // natural log, for comparison only
  double f_score = 0.0;
  std::vector<ClusterScore> per_cluster;

  friend bool operator==(const EvaluationReport&, const EvaluationReport&) = default;
};

enum class LogBase { two, e };

ContingencyTable contingency(const Partition& partition, std::span<const std::string> labels);

double f_measure(const ContingencyTable& table);
double purity(const ContingencyTable& table);
double entropy(const ContingencyTable& table, LogBase base = LogBase::two);

EvaluationReport evaluate(const Partition& partition, std::span<const std::string> labels);

}  // namespace depclust
