#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "depclust/dependency.hpp"
#include "depclust/text.hpp"

namespace depclust {

using WordPair = std::pair<std::string, std::string>;  // first <= second

/// Simple undirected graph over a document's non-stop words. Every edge has
/// unit length, so only edge existence is stored.
struct DocumentGraph {
  std::string doc_id;
  std::set<std::string, std::less<>> vertices;
  std::set<WordPair> edges;
  std::map<std::string, std::size_t, std::less<>> term_freq;
  std::map<std::string, double, std::less<>> vertex_weight;  // empty until weighted
};

/// Sparse vector with entries sorted by key; lookups and dot products are
/// merge-joins over the sorted entries.
template <class Key>
struct SparseVector {
  std::vector<std::pair<Key, double>> entries;

  bool empty() const { return entries.empty(); }
  std::size_t size() const { return entries.size(); }
};

struct FeatureVector {
  SparseVector<std::string> vertex_features;
  SparseVector<WordPair> edge_features;
};

enum class TfScheme { raw, log_scaled, binary };

DocumentGraph build_graph(const Document& doc, const std::vector<SentenceDeps>& deps);

/// vertex_weight[w] = tf(w) * ln(n_docs / doc_freq[w]); tf per scheme (raw count by default).
DocumentGraph weight_graph(DocumentGraph graph, const Corpus& corpus,
                           TfScheme scheme = TfScheme::raw);

/// Edge features take the smaller of the two endpoint weights.
FeatureVector to_feature_vector(const DocumentGraph& graph);

/// `V <word> <weight>` lines followed by `E <word1> <word2>` lines.
void write_graph(const DocumentGraph& graph, std::ostream& out);

}  // namespace depclust
