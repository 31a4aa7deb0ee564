// depclust: constrained document clustering over dependency graphs.
//
//   depclust gen-synth --topics 4 --docs-per-topic 25 --seed 1 --out data/synth
//   depclust cluster   --dataset data/synth --oracle-fraction 0.1 --out out/
//   depclust compare   --dataset data/synth --oracle-fraction 0.1 --out out/
//   depclust sweep     --dataset data/synth --fractions 0,0.05,0.1,0.2 --seeds 1,2,3,4,5 --out out/

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "depclust/constraints.hpp"
#include "depclust/error.hpp"
#include "depclust/experiment.hpp"
#include "depclust/io.hpp"
#include "depclust/synthgen.hpp"
#include "depclust/text.hpp"

namespace fs = std::filesystem;
using namespace depclust;

namespace {

struct CommonOptions {
  fs::path dataset;
  std::optional<fs::path> stoplist;
  std::optional<std::size_t> max_docs;
  std::uint64_t seed = 0;
  std::optional<fs::path> parses;
  std::size_t window = kDefaultWindow;
  std::optional<fs::path> constraints;
  std::optional<double> oracle_fraction;
  double lambda = kDefaultLambda;
  std::optional<std::size_t> k;
  std::string tf = "raw";
  fs::path out = ".";
  std::optional<fs::path> dump_graphs;
  std::optional<fs::path> dump_matrix;
  bool ln = false;
};

void add_common(CLI::App& app, CommonOptions& o) {
  app.add_option("--dataset", o.dataset, "Dataset root laid out as <root>/<label>/<file>")
      ->required()
      ->check(CLI::ExistingDirectory);
  app.add_option("--stoplist", o.stoplist, "Stopword file (one word per line)")->check(CLI::ExistingFile);
  app.add_option("--max-docs", o.max_docs, "Keep a seeded uniform subset of this many documents")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", o.seed, "Seed for subset and oracle-constraint sampling");
  auto* parses = app.add_option("--parses", o.parses, "Directory of <doc_id>.conllu parses")
                     ->check(CLI::ExistingDirectory);
  auto* window = app.add_option("--window", o.window, "Co-occurrence window when no parses are given")
                     ->check(CLI::PositiveNumber);
  parses->excludes(window);
  window->excludes(parses);
  app.add_option("--lambda", o.lambda, "Weight of edge cosine in graph similarity")
      ->check(CLI::Range(0.0, 1.0));
  app.add_option("--k", o.k, "Cluster count for evaluation cuts (default: number of labels)")
      ->check(CLI::PositiveNumber);
  app.add_option("--tf", o.tf, "Term-frequency variant")
      ->check(CLI::IsMember({"raw", "log", "binary"}));
  app.add_option("--out", o.out, "Output directory");
  app.add_option("--dump-graphs", o.dump_graphs, "Write one <doc_id>.graph file per document here");
  app.add_option("--dump-matrix", o.dump_matrix, "Write the similarity matrix as CSV");
  app.add_flag("--ln", o.ln, "Also report natural-log entropy");
}

void add_constraint_source(CLI::App& app, CommonOptions& o) {
  auto* file = app.add_option("--constraints", o.constraints, "ML/CL constraint file")
                   ->check(CLI::ExistingFile);
  auto* oracle = app.add_option("--oracle-fraction", o.oracle_fraction,
                                "Sample this fraction of all pairs as label-derived constraints")
                     ->check(CLI::Range(0.0, 1.0));
  file->excludes(oracle);
  oracle->excludes(file);
}

PipelineConfig pipeline_of(const CommonOptions& o) {
  PipelineConfig c;
  c.parses_dir = o.parses;
  c.window = o.window;
  c.lambda = o.lambda;
  c.tf = o.tf == "log" ? TfScheme::log_scaled : o.tf == "binary" ? TfScheme::binary : TfScheme::raw;
  return c;
}

Corpus load(const CommonOptions& o) {
  Stoplist stop = o.stoplist ? read_stoplist(*o.stoplist) : default_stoplist();
  return load_corpus(o.dataset, stop, {o.max_docs, o.seed});
}

ConstraintSet constraints_of(const CommonOptions& o, const Corpus& corpus) {
  if (o.constraints) return parse_constraints_file(*o.constraints, corpus.doc_ids());
  if (o.oracle_fraction) return sample_oracle_constraints(corpus.labels(), *o.oracle_fraction, o.seed);
  return {};
}

std::ofstream open_out(const fs::path& path) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write file " + path.string());
  return out;
}

void write_json(const fs::path& path, const nlohmann::json& j) { open_out(path) << j.dump(2) << '\n'; }

PreparedCorpus prepare(const CommonOptions& o, const Corpus& corpus) {
  auto prepared = prepare_corpus(corpus, pipeline_of(o));
  if (o.dump_graphs) {
    fs::create_directories(*o.dump_graphs);
    for (const auto& g : prepared.graphs) {
      auto out = open_out(*o.dump_graphs / (g.doc_id + ".graph"));
      write_graph(g, out);
    }
  }
  if (o.dump_matrix) {
    auto out = open_out(*o.dump_matrix);
    write_matrix_csv(prepared.matrix, out);
  }
  return prepared;
}

int run_cluster(const CommonOptions& o, bool unconstrained) {
  auto corpus = load(o);
  auto prepared = prepare(o, corpus);
  const auto ids = corpus.doc_ids();
  const auto labels = corpus.labels();
  const auto k = o.k.value_or(corpus.class_count());
  if (k > corpus.n_docs()) throw Error("--k exceeds the number of documents");
  fs::create_directories(o.out);

  nlohmann::json report;
  if (unconstrained) {
    auto run = hac(prepared.matrix, StopRule::merge_to_one());
    auto part = cut_dendrogram(run.merge_log, corpus.n_docs(), k);
    auto merges = open_out(o.out / "merges.jsonl");
    write_merge_log(run.merge_log, ids, merges);
    write_json(o.out / "partition.json", partition_json(part, ids));
    report = {{"mode", "unconstrained"}, {"k", k}, {"at_k", report_json(evaluate(part, labels), o.ln)}};
    std::cout << report_csv_row(evaluate(part, labels)) << '\n';
  } else {
    auto cmp = run_comparison(corpus, prepared.matrix, constraints_of(o, corpus), k);
    const auto& c = cmp.constrained;
    auto merges = open_out(o.out / "merges.jsonl");
    write_merge_log(c.run.merge_log, ids, merges);
    write_json(o.out / "partition.json", partition_json(c.run.partition, ids));
    write_json(o.out / "partition_k.json", partition_json(c.at_k, ids));
    report = {{"mode", "constrained"},
              {"k", k},
              {"k_effective", c.k_effective},
              {"constraints", {{"ml_pairs", cmp.ml_pairs}, {"cl_pairs", cmp.cl_pairs}}},
              {"penalties", c.run.penalties},
              {"no_change", report_json(c.no_change, o.ln)},
              {"at_k", report_json(c.at_k_report, o.ln)}};
    std::cout << report_csv_row(c.at_k_report) << '\n';
  }
  write_json(o.out / "report.json", report);
  return 0;
}

int run_compare(const CommonOptions& o) {
  auto corpus = load(o);
  auto prepared = prepare(o, corpus);
  auto cmp = run_comparison(corpus, prepared.matrix, constraints_of(o, corpus), o.k);
  fs::create_directories(o.out);
  auto merges = open_out(o.out / "merges.jsonl");
  write_merge_log(cmp.constrained.run.merge_log, corpus.doc_ids(), merges);
  write_json(o.out / "report.json", comparison_json(cmp, o.ln));
  std::cout << "unconstrained," << report_csv_row(cmp.unconstrained_report) << '\n'
            << "constrained," << report_csv_row(cmp.constrained.at_k_report) << '\n';
  return 0;
}

int run_sweep_cmd(const CommonOptions& o, const std::vector<double>& fractions,
                  std::vector<std::uint64_t> seeds) {
  auto corpus = load(o);
  auto prepared = prepare(o, corpus);
  if (seeds.empty()) seeds = {o.seed};
  auto sweep = run_sweep(corpus, prepared.matrix, fractions, seeds, o.k);
  fs::create_directories(o.out);
  auto out = open_out(o.out / "sweep.csv");
  write_sweep_csv(sweep, out);
  write_sweep_csv(sweep, std::cout);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Constrained document clustering over dependency graphs"};
  app.require_subcommand(1);

  CommonOptions cluster_opts;
  auto* cluster = app.add_subcommand("cluster", "Cluster one corpus and write merges, partition and report");
  add_common(*cluster, cluster_opts);
  add_constraint_source(*cluster, cluster_opts);
  bool constrained_flag = false;
  bool unconstrained_flag = false;
  auto* con = cluster->add_flag("--constrained", constrained_flag, "ConstrainedHAC (default)");
  auto* uncon = cluster->add_flag("--unconstrained", unconstrained_flag, "Plain group-average HAC");
  con->excludes(uncon);
  uncon->excludes(con);

  CommonOptions compare_opts;
  auto* compare = app.add_subcommand("compare", "Constrained vs unconstrained on identical matrices");
  add_common(*compare, compare_opts);
  add_constraint_source(*compare, compare_opts);

  CommonOptions sweep_opts;
  std::vector<double> fractions{0.0, 0.05, 0.10, 0.20};
  std::vector<std::uint64_t> seeds;
  auto* sweep = app.add_subcommand("sweep", "Oracle-constraint fraction sweep, seed-averaged");
  add_common(*sweep, sweep_opts);
  sweep->add_option("--fractions", fractions, "Ascending constraint fractions")->delimiter(',');
  sweep->add_option("--seeds", seeds, "Seeds to average over (default: --seed)")->delimiter(',');

  SynthSpec synth;
  fs::path synth_out;
  auto* gen = app.add_subcommand("gen-synth", "Write a labeled synthetic corpus");
  gen->add_option("--topics", synth.n_topics, "Number of topics")->check(CLI::PositiveNumber);
  gen->add_option("--docs-per-topic", synth.docs_per_topic, "Documents per topic")
      ->check(CLI::PositiveNumber);
  gen->add_option("--topic-vocab", synth.topic_vocab_size, "Words per topic vocabulary")
      ->check(CLI::PositiveNumber);
  gen->add_option("--shared-vocab", synth.shared_vocab_size, "Words in the shared vocabulary")
      ->check(CLI::PositiveNumber);
  gen->add_option("--topic-prob", synth.topic_word_prob, "Probability a token is topic-specific")
      ->check(CLI::Range(0.0, 1.0));
  gen->add_option("--sentence-len-min", synth.sentence_len.min, "Fewest tokens per sentence");
  gen->add_option("--sentence-len-max", synth.sentence_len.max, "Most tokens per sentence");
  gen->add_option("--sentences-min", synth.sentences_per_doc.min, "Fewest sentences per document");
  gen->add_option("--sentences-max", synth.sentences_per_doc.max, "Most sentences per document");
  gen->add_option("--seed", synth.seed, "Generator seed");
  gen->add_option("--out", synth_out, "Output dataset directory")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*cluster) return run_cluster(cluster_opts, unconstrained_flag);
    if (*compare) return run_compare(compare_opts);
    if (*sweep) return run_sweep_cmd(sweep_opts, fractions, seeds);
    if (*gen) {
      write_dataset(generate_documents(synth), synth_out);
      std::cout << synth.n_topics * synth.docs_per_topic << " documents written to "
                << synth_out.string() << '\n';
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "depclust: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
