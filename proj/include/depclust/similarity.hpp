#pragma once

#include <cmath>
#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "depclust/graph.hpp"

namespace depclust {

/// Symmetric pairwise document similarities. Entries are in [0, 1] when built
/// by similarity_matrix; the clustering code may write -1 penalties into its
/// own working copy.
struct SimilarityMatrix {
  Eigen::MatrixXd values;
  std::vector<std::string> doc_ids;

  std::size_t size() const { return static_cast<std::size_t>(values.rows()); }
  double operator()(std::size_t i, std::size_t j) const {
    return values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  }
};

inline constexpr double kDefaultLambda = 0.5;

/// Cosine over sorted sparse entries; 0 when either side has zero norm.
template <class Key>
double cosine(const SparseVector<Key>& a, const SparseVector<Key>& b);

/// (1 - lambda) * vertex cosine + lambda * edge cosine.
double graph_similarity(const FeatureVector& a, const FeatureVector& b, double lambda);

/// Diagonal is 1 except for documents without vertices, whose whole row is 0.
SimilarityMatrix similarity_matrix(const std::vector<FeatureVector>& features, double lambda,
                                   std::vector<std::string> doc_ids = {});

/// Header row of doc_ids, then n rows of 12-significant-digit decimals.
void write_matrix_csv(const SimilarityMatrix& m, std::ostream& out);

// Implementation

template <class Key>
double cosine(const SparseVector<Key>& a, const SparseVector<Key>& b) {
  double dot = 0.0;
  auto ia = a.entries.begin();
  auto ib = b.entries.begin();
  while (ia != a.entries.end() && ib != b.entries.end()) {
    if (ia->first < ib->first) {
      ++ia;
    } else if (ib->first < ia->first) {
      ++ib;
    } else {
      dot += ia->second * ib->second;
      ++ia;
      ++ib;
    }
  }
  double na = 0.0;
  for (const auto& e : a.entries) na += e.second * e.second;
  double nb = 0.0;
  for (const auto& e : b.entries) nb += e.second * e.second;
  if (na <= 0.0 || nb <= 0.0) return 0.0;
  double c = dot / std::sqrt(na * nb);
  return c < 0.0 ? 0.0 : (c > 1.0 ? 1.0 : c);
}

}  // namespace depclust
