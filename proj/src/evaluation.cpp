#include "depclust/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "depclust/error.hpp"

namespace depclust {
namespace {

double cluster_entropy(const ContingencyTable& t, Eigen::Index j, LogBase base) {
  const double size = t.counts.col(j).sum();
  if (size <= 0.0) return 0.0;
  double h = 0.0;
  for (Eigen::Index i = 0; i < t.counts.rows(); ++i) {
    double p = t.counts(i, j) / size;
    if (p > 0.0) h -= p * (base == LogBase::two ? std::log2(p) : std::log(p));
  }
  return h;
}

}  // namespace

ContingencyTable contingency(const Partition& partition, std::span<const std::string> labels) {
  const auto n = partition.assignment.size();
  if (labels.size() != n)
    throw Error("contingency: " + std::to_string(n) + " assigned documents but " +
                std::to_string(labels.size()) + " labels");
  std::map<std::string, Eigen::Index> rows;
  for (std::size_t d = 0; d < n; ++d) {
    if (labels[d].empty()) throw Error("contingency: document " + std::to_string(d) + " is unlabeled");
    rows.emplace(labels[d], 0);
  }
  ContingencyTable t;
  for (auto& [name, row] : rows) {
    row = static_cast<Eigen::Index>(t.class_names.size());
    t.class_names.push_back(name);
  }
  t.counts = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(rows.size()),
                                   static_cast<Eigen::Index>(partition.k));
  for (std::size_t d = 0; d < n; ++d) {
    if (partition.assignment[d] >= partition.k) throw Error("contingency: cluster id out of range");
    t.counts(rows[labels[d]], static_cast<Eigen::Index>(partition.assignment[d])) += 1.0;
  }
  return t;
}

double f_measure(const ContingencyTable& t) {
  const double n = t.total();
  if (n <= 0.0) return 0.0;
  const Eigen::VectorXd cluster = t.cluster_sizes();
  const Eigen::VectorXd klass = t.class_sizes();
  double f = 0.0;
  for (Eigen::Index i = 0; i < t.counts.rows(); ++i) {
    double best = 0.0;
    for (Eigen::Index j = 0; j < t.counts.cols(); ++j) {
      if (t.counts(i, j) <= 0.0) continue;
      double prec = t.counts(i, j) / cluster(j);
      double rec = t.counts(i, j) / klass(i);
      best = std::max(best, 2.0 * prec * rec / (prec + rec));
    }
    f += klass(i) / n * best;
  }
  return f;
}

double purity(const ContingencyTable& t) {
  const double n = t.total();
  if (n <= 0.0) return 0.0;
  return t.counts.colwise().maxCoeff().sum() / n;
}

double entropy(const ContingencyTable& t, LogBase base) {
  const double n = t.total();
  if (n <= 0.0) return 0.0;
  double e = 0.0;
  for (Eigen::Index j = 0; j < t.counts.cols(); ++j)
    e += t.counts.col(j).sum() / n * cluster_entropy(t, j, base);
  return e;
}

EvaluationReport evaluate(const Partition& partition, std::span<const std::string> labels) {
  auto t = contingency(partition, labels);
  EvaluationReport r;
  r.doc_count = partition.assignment.size();
  r.cluster_count = partition.k;
  r.purity = purity(t);
  r.entropy = entropy(t, LogBase::two);
  r.entropy_ln = entropy(t, LogBase::e);
  r.f_score = f_measure(t);
  for (Eigen::Index j = 0; j < t.counts.cols(); ++j) {
    double size = t.counts.col(j).sum();
    r.per_cluster.push_back({size > 0.0 ? t.counts.col(j).maxCoeff() / size : 0.0,
                             cluster_entropy(t, j, LogBase::two), static_cast<std::size_t>(size)});
  }
  return r;
}

}  // namespace depclust
