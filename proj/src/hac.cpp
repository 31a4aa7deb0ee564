#include "depclust/hac.hpp"

#include <algorithm>
#include <iterator>
#include <limits>
#include <optional>

#include "depclust/error.hpp"
#include "disjoint_sets.hpp"

namespace depclust {
namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
constexpr double kPenalty = -1.0;

struct Candidate {
  std::size_t i;
  std::size_t j;
  double sim;
};

// Slot-based agglomeration with a cached best partner per row. Row i caches the
// maximum over active j > i (smallest j on ties), so scanning rows in order and
// keeping the first strict maximum yields the lexicographically smallest pair.
class Agglomerator {
 public:
  Agglomerator(const SimilarityMatrix& matrix, ClusterState state)
      : matrix_(matrix), state_(std::move(state)) {
    const auto n = state_.clusters.size();
    best_sim_.assign(n, 0.0);
    best_j_.assign(n, kNone);
    for (std::size_t i = 0; i < n; ++i) refresh_row(i);
  }

  std::optional<Candidate> best() const {
    std::optional<Candidate> out;
    for (std::size_t i = 0; i < best_j_.size(); ++i) {
      if (best_j_[i] == kNone) continue;
      if (!out || best_sim_[i] > out->sim) out = Candidate{i, best_j_[i], best_sim_[i]};
    }
    return out;
  }

  void merge(std::size_t i, std::size_t j, MergeKind kind) {
    auto& ci = state_.clusters[i];
    auto& cj = state_.clusters[j];
    state_.merge_log.push_back({ci, cj, sim(i, j), kind});

    std::vector<std::size_t> merged;
    merged.reserve(ci.size() + cj.size());
    std::merge(ci.begin(), ci.end(), cj.begin(), cj.end(), std::back_inserter(merged));
    ci = std::move(merged);
    cj.clear();
    best_j_[j] = kNone;

    const auto n = state_.clusters.size();
    for (std::size_t r = 0; r < n; ++r) {
      if (r == i || state_.clusters[r].empty()) continue;
      double s = r < i ? group_average(matrix_, state_.clusters[r], ci)
                       : group_average(matrix_, ci, state_.clusters[r]);
      set_sim(r, i, s);
    }
    refresh_row(i);
    for (std::size_t r = 0; r < std::min(j, n); ++r) {
      if (r == i || best_j_[r] == kNone) continue;
      if (best_j_[r] == i || best_j_[r] == j) {
        refresh_row(r);
      } else if (r < i && (sim(r, i) > best_sim_[r] ||
                           (sim(r, i) == best_sim_[r] && i < best_j_[r]))) {
        best_sim_[r] = sim(r, i);
        best_j_[r] = i;
      }
    }
  }

  void penalize(std::size_t i, std::size_t j) {
    set_sim(i, j, kPenalty);
    refresh_row(i);
  }

  void rebuild() {
    const auto n = state_.clusters.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (state_.clusters[i].empty()) continue;
      for (std::size_t j = i + 1; j < n; ++j)
        if (!state_.clusters[j].empty())
          set_sim(i, j, group_average(matrix_, state_.clusters[i], state_.clusters[j]));
    }
    for (std::size_t i = 0; i < n; ++i) refresh_row(i);
  }

  const ClusterState& state() const { return state_; }
  ClusterState release() { return std::move(state_); }

 private:
  double sim(std::size_t i, std::size_t j) const {
    return state_.active_sim(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  }

  void set_sim(std::size_t i, std::size_t j, double s) {
    state_.active_sim(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = s;
    state_.active_sim(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = s;
  }

  void refresh_row(std::size_t i) {
    best_j_[i] = kNone;
    if (state_.clusters[i].empty()) return;
    for (std::size_t j = i + 1; j < state_.clusters.size(); ++j) {
      if (state_.clusters[j].empty()) continue;
      if (best_j_[i] == kNone || sim(i, j) > best_sim_[i]) {
        best_sim_[i] = sim(i, j);
        best_j_[i] = j;
      }
    }
  }

  const SimilarityMatrix& matrix_;
  ClusterState state_;
  std::vector<double> best_sim_;
  std::vector<std::size_t> best_j_;
};

void require_non_empty(const SimilarityMatrix& matrix) {
  if (matrix.size() == 0) throw Error("cannot cluster an empty similarity matrix");
  if (matrix.values.rows() != matrix.values.cols()) throw Error("similarity matrix is not square");
}

}  // namespace

Partition make_partition(const std::vector<std::vector<std::size_t>>& clusters, std::size_t n) {
  std::vector<std::size_t> owner(n, kNone);
  for (std::size_t c = 0; c < clusters.size(); ++c)
    for (auto d : clusters[c]) {
      if (d >= n || owner[d] != kNone) throw Error("clusters do not partition the documents");
      owner[d] = c;
    }
  Partition p;
  p.assignment.assign(n, kNone);
  std::vector<std::size_t> id_of(clusters.size(), kNone);
  for (std::size_t d = 0; d < n; ++d) {
    if (owner[d] == kNone) throw Error("clusters do not cover every document");
    auto& id = id_of[owner[d]];
    if (id == kNone) id = p.k++;
    p.assignment[d] = id;
  }
  return p;
}

std::size_t ClusterState::cluster_count() const {
  return static_cast<std::size_t>(
      std::count_if(clusters.begin(), clusters.end(), [](const auto& c) { return !c.empty(); }));
}

std::vector<std::vector<std::size_t>> ClusterState::active_clusters() const {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& c : clusters)
    if (!c.empty()) out.push_back(c);
  return out;
}

double group_average(const SimilarityMatrix& matrix, std::span<const std::size_t> a,
                     std::span<const std::size_t> b) {
  if (a.empty() || b.empty()) return 0.0;
  double sum = 0.0;
  for (auto x : a)
    for (auto y : b) sum += matrix(x, y);
  return sum / (static_cast<double>(a.size()) * static_cast<double>(b.size()));
}

ClusterState singleton_state(const SimilarityMatrix& matrix) {
  require_non_empty(matrix);
  ClusterState s;
  s.clusters.resize(matrix.size());
  for (std::size_t i = 0; i < matrix.size(); ++i) s.clusters[i] = {i};
  s.active_sim = matrix.values;
  return s;
}

ClusterState apply_ml_constraints(ClusterState state, const ConstraintSet& ml,
                                  const SimilarityMatrix& matrix) {
  if (ml.ml.empty()) return state;
  const auto n = state.clusters.size();
  Agglomerator agg(matrix, std::move(state));
  for (const auto& comp : ml_components(ml, n)) {
    for (std::size_t m = 1; m < comp.size(); ++m) {
      const auto& clusters = agg.state().clusters;
      if (clusters[comp[0]].empty() || clusters[comp[m]].empty())
        throw Error("apply_ml_constraints expects the initial singleton state");
      agg.merge(comp[0], comp[m], MergeKind::must_link);
    }
  }
  agg.rebuild();
  return agg.release();
}

bool validate_cl(std::span<const std::size_t> a, std::span<const std::size_t> b,
                 const ConstraintSet& cl) {
  if (cl.cl.empty() || a.empty() || b.empty()) return true;
  if (a.size() * b.size() <= cl.cl.size()) {
    for (auto x : a)
      for (auto y : b)
        if (cl.cannot_link(x, y)) return false;
    return true;
  }
  auto in = [](std::span<const std::size_t> c, std::size_t d) {
    return std::binary_search(c.begin(), c.end(), d);
  };
  for (const auto& [x, y] : cl.cl)
    if ((in(a, x) && in(b, y)) || (in(a, y) && in(b, x))) return false;
  return true;
}

ClusteringResult hac(const SimilarityMatrix& matrix, StopRule stop) {
  Agglomerator agg(matrix, singleton_state(matrix));
  const std::size_t target = stop.kind == StopRule::Kind::target_k ? std::max<std::size_t>(stop.k, 1) : 1;
  ClusteringResult result;
  while (agg.state().cluster_count() > target) {
    auto c = agg.best();
    if (!c) break;
    if (stop.kind == StopRule::Kind::non_negative && c->sim < 0.0) break;
    agg.merge(c->i, c->j, MergeKind::similarity);
    ++result.iterations;
  }
  auto state = agg.release();
  result.partition = make_partition(state.active_clusters(), matrix.size());
  result.merge_log = std::move(state.merge_log);
  return result;
}

ClusteringResult constrained_hac(const SimilarityMatrix& matrix, const ConstraintSet& constraints) {
  require_non_empty(matrix);
  ConstraintSet closed;
  if (constraints.closed) {
    if (!check_consistency(constraints).empty())
      throw Error("constrained_hac: constraint set is inconsistent");
    closed = constraints;
  } else {
    closed = transitive_closure(constraints, matrix.doc_ids);
  }
  for (const auto& [a, b] : closed.cl)
    if (b >= matrix.size()) throw Error("constraint references a document outside the corpus");

  Agglomerator agg(matrix, apply_ml_constraints(singleton_state(matrix), closed, matrix));
  ClusteringResult result;
  while (true) {
    auto c = agg.best();
    if (!c || c->sim < 0.0) break;
    ++result.iterations;
    const auto& clusters = agg.state().clusters;
    if (!validate_cl(clusters[c->i], clusters[c->j], closed)) {
      agg.penalize(c->i, c->j);
      ++result.penalties;
      continue;
    }
    agg.merge(c->i, c->j, MergeKind::similarity);
  }
  auto state = agg.release();
  result.partition = make_partition(state.active_clusters(), matrix.size());
  result.merge_log = std::move(state.merge_log);
  return result;
}

Partition cut_dendrogram(const MergeLog& log, std::size_t n_leaves, std::size_t k) {
  if (k == 0) throw Error("cut_dendrogram: k must be positive");
  if (k > n_leaves)
    throw Error("cut_dendrogram: k = " + std::to_string(k) + " exceeds leaf count " +
                std::to_string(n_leaves));
  detail::DisjointSets ds(n_leaves);
  std::size_t count = n_leaves;
  for (auto it = log.begin(); it != log.end() && count > k; ++it) {
    if (it->a.empty() || it->b.empty() || it->a.front() >= n_leaves || it->b.front() >= n_leaves)
      throw Error("cut_dendrogram: malformed merge record");
    if (ds.unite(it->a.front(), it->b.front())) --count;
  }
  if (count > k)
    throw Error("cut_dendrogram: merge log stops at " + std::to_string(count) +
                " clusters, cannot cut at k = " + std::to_string(k));

  std::vector<std::vector<std::size_t>> clusters(n_leaves);
  for (std::size_t d = 0; d < n_leaves; ++d) clusters[ds.find(d)].push_back(d);
  std::erase_if(clusters, [](const auto& c) { return c.empty(); });
  return make_partition(clusters, n_leaves);
}

Partition final_partition(const MergeLog& log, std::size_t n_leaves) {
  std::size_t merges = 0;
  detail::DisjointSets ds(n_leaves);
  for (const auto& r : log)
    if (!r.a.empty() && !r.b.empty() && r.a.front() < n_leaves && r.b.front() < n_leaves &&
        ds.unite(r.a.front(), r.b.front()))
      ++merges;
  return cut_dendrogram(log, n_leaves, n_leaves - merges);
}

}  // namespace depclust
