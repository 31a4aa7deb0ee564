#include "depclust/graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "depclust/error.hpp"

namespace depclust {

DocumentGraph build_graph(const Document& doc, const std::vector<SentenceDeps>& deps) {
  DocumentGraph g;
  g.doc_id = doc.doc_id;
  for (const auto& s : doc.sentences)
    for (const auto& t : s.tokens) {
      g.vertices.insert(t);
      ++g.term_freq[t];
    }
  for (const auto& sd : deps)
    for (const auto& p : sd.pairs)
      if (g.vertices.contains(p.head) && g.vertices.contains(p.dependent))
        g.edges.emplace(p.head, p.dependent);
  return g;
}

DocumentGraph weight_graph(DocumentGraph graph, const Corpus& corpus, TfScheme scheme) {
  const double n = static_cast<double>(corpus.n_docs());
  graph.vertex_weight.clear();
  for (const auto& [word, count] : graph.term_freq) {
    auto it = corpus.doc_freq.find(word);
    if (it == corpus.doc_freq.end() || it->second == 0)
      throw Error("vertex '" + word + "' of " + graph.doc_id + " missing from corpus doc_freq");
    double tf = 0.0;
    switch (scheme) {
      case TfScheme::raw: tf = static_cast<double>(count); break;
      case TfScheme::log_scaled: tf = 1.0 + std::log(static_cast<double>(count)); break;
      case TfScheme::binary: tf = 1.0; break;
    }
    double idf = std::log(n / static_cast<double>(it->second));
    graph.vertex_weight.emplace(word, tf * idf);
  }
  return graph;
}

FeatureVector to_feature_vector(const DocumentGraph& graph) {
  FeatureVector fv;
  fv.vertex_features.entries.reserve(graph.vertex_weight.size());
  for (const auto& [word, w] : graph.vertex_weight) fv.vertex_features.entries.emplace_back(word, w);

  fv.edge_features.entries.reserve(graph.edges.size());
  for (const auto& e : graph.edges) {
    auto a = graph.vertex_weight.find(e.first);
    auto b = graph.vertex_weight.find(e.second);
    if (a == graph.vertex_weight.end() || b == graph.vertex_weight.end())
      throw Error("graph " + graph.doc_id + " is not weighted");
    fv.edge_features.entries.emplace_back(e, std::min(a->second, b->second));
  }
  return fv;
}

void write_graph(const DocumentGraph& graph, std::ostream& out) {
  char buf[64];
  for (const auto& v : graph.vertices) {
    auto it = graph.vertex_weight.find(v);
    double w = it == graph.vertex_weight.end() ? 0.0 : it->second;
    std::snprintf(buf, sizeof buf, "%.12g", w);
    out << "V " << v << ' ' << buf << '\n';
  }
  for (const auto& [a, b] : graph.edges) out << "E " << a << ' ' << b << '\n';
}

}  // namespace depclust
