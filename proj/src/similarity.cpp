#include "depclust/similarity.hpp"

#include <cstdio>

#include "depclust/error.hpp"

namespace depclust {

double graph_similarity(const FeatureVector& a, const FeatureVector& b, double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) throw Error("lambda must lie in [0, 1]");
  double v = lambda < 1.0 ? cosine(a.vertex_features, b.vertex_features) : 0.0;
  double e = lambda > 0.0 ? cosine(a.edge_features, b.edge_features) : 0.0;
  return (1.0 - lambda) * v + lambda * e;
}

SimilarityMatrix similarity_matrix(const std::vector<FeatureVector>& features, double lambda,
                                   std::vector<std::string> doc_ids) {
  const auto n = static_cast<Eigen::Index>(features.size());
  if (doc_ids.empty())
    for (Eigen::Index i = 0; i < n; ++i) doc_ids.push_back(std::to_string(i));
  if (static_cast<Eigen::Index>(doc_ids.size()) != n)
    throw Error("similarity_matrix: doc_ids and features differ in length");

  SimilarityMatrix m{Eigen::MatrixXd::Zero(n, n), std::move(doc_ids)};
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& fi = features[static_cast<std::size_t>(i)];
    m.values(i, i) = fi.vertex_features.empty() ? 0.0 : 1.0;
    for (Eigen::Index j = i + 1; j < n; ++j) {
      double s = graph_similarity(fi, features[static_cast<std::size_t>(j)], lambda);
      m.values(i, j) = s;
      m.values(j, i) = s;
    }
  }
  return m;
}

void write_matrix_csv(const SimilarityMatrix& m, std::ostream& out) {
  for (std::size_t i = 0; i < m.doc_ids.size(); ++i) out << (i ? "," : "") << m.doc_ids[i];
  out << '\n';
  char buf[64];
  for (Eigen::Index i = 0; i < m.values.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.values.cols(); ++j) {
      std::snprintf(buf, sizeof buf, "%.12g", m.values(i, j));
      out << (j ? "," : "") << buf;
    }
    out << '\n';
  }
}

}  // namespace depclust
