#include "depclust/io.hpp"

#include <cstdio>

namespace depclust {
namespace {

nlohmann::json ids_of(const std::vector<std::size_t>& members, std::span<const std::string> doc_ids) {
  auto out = nlohmann::json::array();
  for (auto m : members) out.push_back(m < doc_ids.size() ? doc_ids[m] : std::to_string(m));
  return out;
}

}  // namespace

std::string format_decimal(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void write_merge_log(const MergeLog& log, std::span<const std::string> doc_ids, std::ostream& out) {
  std::size_t step = 0;
  for (const auto& m : log) {
    nlohmann::json line = {{"step", ++step},
                           {"a", ids_of(m.a, doc_ids)},
                           {"b", ids_of(m.b, doc_ids)},
                           {"sim", m.similarity},
                           {"kind", m.kind == MergeKind::must_link ? "must-link" : "similarity"}};
    out << line.dump() << '\n';
  }
}

nlohmann::json partition_json(const Partition& p, std::span<const std::string> doc_ids) {
  auto out = nlohmann::json::object();
  for (std::size_t d = 0; d < p.assignment.size(); ++d)
    out[d < doc_ids.size() ? doc_ids[d] : std::to_string(d)] = p.assignment[d];
  return out;
}

nlohmann::json report_json(const EvaluationReport& r, bool with_ln) {
  nlohmann::json j = {{"doc_count", r.doc_count},
                      {"clusters", r.cluster_count},
                      {"purity", r.purity},
                      {"entropy", r.entropy},
                      {"f_score", r.f_score}};
  if (with_ln) j["entropy_ln"] = r.entropy_ln;
  auto per = nlohmann::json::array();
  for (const auto& c : r.per_cluster)
    per.push_back({{"purity", c.purity}, {"entropy", c.entropy}, {"size", c.size}});
  j["per_cluster"] = std::move(per);
  return j;
}

std::string report_csv_row(const EvaluationReport& r) {
  return std::to_string(r.doc_count) + "," + format_decimal(r.purity) + "," +
         format_decimal(r.entropy) + "," + format_decimal(r.f_score);
}

nlohmann::json comparison_json(const ComparisonReport& r, bool with_ln) {
  const auto& c = r.constrained;
  return {
      {"k", r.k},
      {"constraints", {{"ml_pairs", r.ml_pairs}, {"cl_pairs", r.cl_pairs}}},
      {"unconstrained", report_json(r.unconstrained_report, with_ln)},
      {"constrained",
       {{"at_k", report_json(c.at_k_report, with_ln)},
        {"k_effective", c.k_effective},
        {"no_change", report_json(c.no_change, with_ln)},
        {"after_ml_clusters", c.after_ml_clusters},
        {"penalties", c.run.penalties},
        {"merges", c.run.merge_log.size()}}},
      {"delta",
       {{"purity", r.delta_purity()}, {"entropy", r.delta_entropy()}, {"f_score", r.delta_f_score()}}},
  };
}

void write_sweep_csv(const SweepReport& sweep, std::ostream& out) {
  out << "fraction,runs,mean_constraints,purity,entropy,f_score,"
         "unconstrained_purity,unconstrained_entropy,unconstrained_f_score\n";
  for (const auto& r : sweep.rows)
    out << format_decimal(r.fraction) << ',' << r.runs << ',' << format_decimal(r.mean_constraints)
        << ',' << format_decimal(r.purity) << ',' << format_decimal(r.entropy) << ','
        << format_decimal(r.f_score) << ',' << format_decimal(r.unconstrained_purity) << ','
        << format_decimal(r.unconstrained_entropy) << ',' << format_decimal(r.unconstrained_f_score)
        << '\n';
}

}  // namespace depclust
