#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

#include "depclust/constraints.hpp"
#include "depclust/evaluation.hpp"
#include "depclust/graph.hpp"
#include "depclust/hac.hpp"
#include "depclust/similarity.hpp"
#include "depclust/text.hpp"

namespace depclust {

struct PipelineConfig {
  std::optional<std::filesystem::path> parses_dir;  // CoNLL-U mode when set
  std::size_t window = kDefaultWindow;             // co-occurrence fallback otherwise
  double lambda = kDefaultLambda;
  TfScheme tf = TfScheme::raw;
};

/// Weighted graphs, their feature vectors and the similarity matrix, all
/// indexed like corpus.documents.
struct PreparedCorpus {
  std::vector<DocumentGraph> graphs;
  std::vector<FeatureVector> features;
  SimilarityMatrix matrix;
};

std::vector<SentenceDeps> document_deps(const Document& doc, const PipelineConfig& config);
PreparedCorpus prepare_corpus(const Corpus& corpus, const PipelineConfig& config);

struct ConstrainedOutcome {
  ClusteringResult run;
  std::size_t after_ml_clusters = 0;  // clusters left once must-link components are merged
  EvaluationReport no_change;         // partition where the merge loop stopped
  std::size_t k_effective = 0;        // requested k clamped to what the merge log can reach
  Partition at_k;
  EvaluationReport at_k_report;
};

struct ComparisonReport {
  std::size_t k = 0;
  std::size_t ml_pairs = 0;  // after closure
  std::size_t cl_pairs = 0;
  ClusteringResult unconstrained_run;
  Partition unconstrained;
  EvaluationReport unconstrained_report;
  ConstrainedOutcome constrained;

  double delta_purity() const { return constrained.at_k_report.purity - unconstrained_report.purity; }
  double delta_entropy() const { return constrained.at_k_report.entropy - unconstrained_report.entropy; }
  double delta_f_score() const { return constrained.at_k_report.f_score - unconstrained_report.f_score; }
};

/// Unconstrained HAC cut at k (class count by default) against ConstrainedHAC
/// on the same matrix. Throws if a constrained partition breaks a constraint.
ComparisonReport run_comparison(const Corpus& corpus, const SimilarityMatrix& matrix,
                                const ConstraintSet& constraints,
                                std::optional<std::size_t> k = std::nullopt);

/// Throws Error unless every must-link pair shares a cluster and no
/// cannot-link pair does.
void check_partition(const Partition& partition, const ConstraintSet& closed);

struct SweepRow {
  double fraction = 0.0;
  std::size_t runs = 0;
  double mean_constraints = 0.0;
  double purity = 0.0;  // constrained, cut at k
  double entropy = 0.0;
  double f_score = 0.0;
  double unconstrained_purity = 0.0;
  double unconstrained_entropy = 0.0;
  double unconstrained_f_score = 0.0;
};

struct SweepReport {
  std::vector<SweepRow> rows;
};

/// Runs one oracle-constraint comparison per (fraction, seed) cell, in
/// parallel, and averages each fraction over its seeds.
SweepReport run_sweep(const Corpus& corpus, const SimilarityMatrix& matrix,
                      const std::vector<double>& fractions, const std::vector<std::uint64_t>& seeds,
                      std::optional<std::size_t> k = std::nullopt);

}  // namespace depclust
