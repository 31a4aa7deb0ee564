#pragma once

#include <ostream>
#include <span>
#include <string>

#include "json.hpp"

#include "depclust/evaluation.hpp"
#include "depclust/experiment.hpp"
#include "depclust/hac.hpp"

namespace depclust {

/// {"step": i, "a": [doc_ids], "b": [doc_ids], "sim": x, "kind": "similarity"|"must-link"}
/// per line, steps numbered from 1.
void write_merge_log(const MergeLog& log, std::span<const std::string> doc_ids, std::ostream& out);

/// {doc_id: cluster_id}
nlohmann::json partition_json(const Partition& p, std::span<const std::string> doc_ids);

nlohmann::json report_json(const EvaluationReport& r, bool with_ln = false);

/// doc_count,purity,entropy,f_score
std::string report_csv_row(const EvaluationReport& r);

nlohmann::json comparison_json(const ComparisonReport& r, bool with_ln = false);

void write_sweep_csv(const SweepReport& sweep, std::ostream& out);

/// Fixed-width decimal formatting shared by every CSV writer.
std::string format_decimal(double v);

}  // namespace depclust
