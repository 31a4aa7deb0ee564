#include "depclust/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

#include "depclust/error.hpp"

namespace depclust {

std::vector<SentenceDeps> document_deps(const Document& doc, const PipelineConfig& config) {
  if (config.parses_dir) return parse_conllu_for(doc, *config.parses_dir);
  return cooccurrence_deps(doc, config.window);
}

PreparedCorpus prepare_corpus(const Corpus& corpus, const PipelineConfig& config) {
  PreparedCorpus out;
  out.graphs.reserve(corpus.n_docs());
  out.features.reserve(corpus.n_docs());
  for (const auto& doc : corpus.documents) {
    auto g = weight_graph(build_graph(doc, document_deps(doc, config)), corpus, config.tf);
    out.features.push_back(to_feature_vector(g));
    out.graphs.push_back(std::move(g));
  }
  out.matrix = similarity_matrix(out.features, config.lambda, corpus.doc_ids());
  return out;
}

void check_partition(const Partition& partition, const ConstraintSet& closed) {
  const auto& a = partition.assignment;
  for (const auto& [x, y] : closed.ml)
    if (a.at(x) != a.at(y))
      throw Error("must-link pair (" + std::to_string(x) + ", " + std::to_string(y) + ") split");
  for (const auto& [x, y] : closed.cl)
    if (a.at(x) == a.at(y))
      throw Error("cannot-link pair (" + std::to_string(x) + ", " + std::to_string(y) +
                  ") co-clustered");
}

ComparisonReport run_comparison(const Corpus& corpus, const SimilarityMatrix& matrix,
                                const ConstraintSet& constraints, std::optional<std::size_t> k) {
  const auto n = corpus.n_docs();
  if (matrix.size() != n) throw Error("similarity matrix does not match corpus size");
  const auto labels = corpus.labels();
  const auto closed = constraints.closed ? constraints : transitive_closure(constraints, corpus.doc_ids());

  ComparisonReport r;
  r.k = k.value_or(corpus.class_count());
  if (r.k == 0 || r.k > n) throw Error("k must lie in [1, n_docs]");
  r.ml_pairs = closed.ml.size();
  r.cl_pairs = closed.cl.size();

  r.unconstrained_run = hac(matrix, StopRule::merge_to_one());
  r.unconstrained = cut_dendrogram(r.unconstrained_run.merge_log, n, r.k);
  r.unconstrained_report = evaluate(r.unconstrained, labels);

  auto& c = r.constrained;
  c.run = constrained_hac(matrix, closed);
  check_partition(c.run.partition, closed);
  c.no_change = evaluate(c.run.partition, labels);
  const auto ml_merges = static_cast<std::size_t>(
      std::count_if(c.run.merge_log.begin(), c.run.merge_log.end(),
                    [](const MergeRecord& m) { return m.kind == MergeKind::must_link; }));
  c.after_ml_clusters = n - ml_merges;
  c.k_effective = std::clamp(r.k, c.run.partition.k, c.after_ml_clusters);
  c.at_k = cut_dendrogram(c.run.merge_log, n, c.k_effective);
  check_partition(c.at_k, closed);
  c.at_k_report = evaluate(c.at_k, labels);
  return r;
}

SweepReport run_sweep(const Corpus& corpus, const SimilarityMatrix& matrix,
                      const std::vector<double>& fractions, const std::vector<std::uint64_t>& seeds,
                      std::optional<std::size_t> k) {
  if (!std::is_sorted(fractions.begin(), fractions.end()))
    throw Error("sweep fractions must be sorted ascending");
  if (seeds.empty()) throw Error("sweep needs at least one seed");
  if (fractions.empty()) return {};
  const auto labels = corpus.labels();

  struct Cell {
    std::size_t constraints;
    EvaluationReport constrained;
    EvaluationReport baseline;
  };
  std::vector<std::pair<double, std::uint64_t>> jobs;
  for (double f : fractions)
    for (auto seed : seeds) jobs.emplace_back(f, seed);
  std::vector<Cell> cells(jobs.size());
  std::vector<std::exception_ptr> errors(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (auto i = next++; i < jobs.size(); i = next++) {
      try {
        auto set = sample_oracle_constraints(labels, jobs[i].first, jobs[i].second);
        auto report = run_comparison(corpus, matrix, set, k);
        cells[i] = {set.ml.size() + set.cl.size(), report.constrained.at_k_report,
                    report.unconstrained_report};
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const auto threads = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, jobs.size());
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  SweepReport out;
  std::size_t idx = 0;
  const auto runs = static_cast<double>(seeds.size());
  for (double f : fractions) {
    SweepRow row;
    row.fraction = f;
    row.runs = seeds.size();
    for (std::size_t s = 0; s < seeds.size(); ++s) {
      const auto& cell = cells[idx++];
      row.mean_constraints += static_cast<double>(cell.constraints) / runs;
      row.purity += cell.constrained.purity / runs;
      row.entropy += cell.constrained.entropy / runs;
      row.f_score += cell.constrained.f_score / runs;
      row.unconstrained_purity += cell.baseline.purity / runs;
      row.unconstrained_entropy += cell.baseline.entropy / runs;
      row.unconstrained_f_score += cell.baseline.f_score / runs;
    }
    out.rows.push_back(row);
  }
  return out;
}

}  // namespace depclust
