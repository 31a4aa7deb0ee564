#include "depclust/constraints.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <numeric>
#include <queue>
#include <random>
#include <sstream>

#include "depclust/error.hpp"
#include "disjoint_sets.hpp"

namespace depclust {
namespace {

using detail::DisjointSets;

std::size_t universe(const ConstraintSet& set) {
  std::size_t n = 0;
  for (const auto& [a, b] : set.ml) n = std::max(n, b + 1);
  for (const auto& [a, b] : set.cl) n = std::max(n, b + 1);
  return n;
}

std::string name_of(std::size_t i, std::span<const std::string> names) {
  return i < names.size() ? names[i] : "#" + std::to_string(i);
}

// Shortest must-link path from `from` to `to` in the raw (unclosed) ML graph.
std::vector<std::size_t> ml_path(const ConstraintSet& set, std::size_t from, std::size_t to) {
  std::map<std::size_t, std::vector<std::size_t>> adj;
  for (const auto& [a, b] : set.ml) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::map<std::size_t, std::size_t> prev{{from, from}};
  std::queue<std::size_t> q;
  q.push(from);
  while (!q.empty()) {
    auto u = q.front();
    q.pop();
    if (u == to) break;
    for (auto v : adj[u])
      if (prev.emplace(v, u).second) q.push(v);
  }
  std::vector<std::size_t> path;
  if (!prev.contains(to)) return path;
  for (auto v = to; v != from; v = prev[v]) path.push_back(v);
  path.push_back(from);
  std::reverse(path.begin(), path.end());
  return path;
}

std::vector<std::string> fields(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string f;
  while (in >> f) out.push_back(f);
  return out;
}

}  // namespace

IndexPair make_pair_checked(std::size_t a, std::size_t b) {
  if (a == b) throw Error("constraint pairs a document with itself (" + std::to_string(a) + ")");
  return a < b ? IndexPair{a, b} : IndexPair{b, a};
}

bool ConstraintSet::cannot_link(std::size_t a, std::size_t b) const {
  return a != b && cl.contains(a < b ? IndexPair{a, b} : IndexPair{b, a});
}

ConstraintSet parse_constraints(std::istream& in, std::span<const std::string> doc_ids) {
  std::map<std::string_view, std::size_t> index;
  for (std::size_t i = 0; i < doc_ids.size(); ++i) index.emplace(doc_ids[i], i);

  ConstraintSet set;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto f = fields(line);
    if (f.empty()) continue;
    auto where = "constraints line " + std::to_string(line_no) + ": ";
    if (f.size() != 3 || (f[0] != "ML" && f[0] != "CL"))
      throw Error(where + "expected `ML <doc_id> <doc_id>` or `CL <doc_id> <doc_id>`");
    auto a = index.find(f[1]);
    auto b = index.find(f[2]);
    if (a == index.end()) throw Error(where + "unknown doc_id " + f[1]);
    if (b == index.end()) throw Error(where + "unknown doc_id " + f[2]);
    if (a->second == b->second) throw Error(where + "self-pair " + f[1]);
    if (f[0] == "ML")
      set.add_ml(a->second, b->second);
    else
      set.add_cl(a->second, b->second);
  }
  return set;
}

ConstraintSet parse_constraints_file(const std::filesystem::path& path,
                                     std::span<const std::string> doc_ids) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read file " + path.string());
  return parse_constraints(in, doc_ids);
}

void write_constraints(const ConstraintSet& set, std::span<const std::string> doc_ids,
                       std::ostream& out) {
  for (const auto& [a, b] : set.ml)
    out << "ML " << name_of(a, doc_ids) << ' ' << name_of(b, doc_ids) << '\n';
  for (const auto& [a, b] : set.cl)
    out << "CL " << name_of(a, doc_ids) << ' ' << name_of(b, doc_ids) << '\n';
}

ConstraintSet close_constraints(const ConstraintSet& set) {
  const auto n = universe(set);
  ConstraintSet out;
  out.closed = true;

  for (const auto& comp : ml_components(set, n))
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (std::size_t j = i + 1; j < comp.size(); ++j) out.ml.emplace(comp[i], comp[j]);

  DisjointSets ds(n);
  for (const auto& [a, b] : set.ml) ds.unite(a, b);
  std::map<std::size_t, std::vector<std::size_t>> members;
  for (std::size_t i = 0; i < n; ++i) members[ds.find(i)].push_back(i);

  std::set<IndexPair> linked_components;
  for (const auto& [a, b] : set.cl) {
    auto ra = ds.find(a);
    auto rb = ds.find(b);
    if (ra == rb)
      out.cl.emplace(a, b);
    else
      linked_components.insert(make_pair_checked(ra, rb));
  }
  for (const auto& [ra, rb] : linked_components)
    for (auto x : members[ra])
      for (auto y : members[rb]) out.cl.insert(make_pair_checked(x, y));
  return out;
}

ConstraintSet transitive_closure(const ConstraintSet& set, std::span<const std::string> doc_ids) {
  auto closed = close_constraints(set);
  auto conflicts = check_consistency(closed);
  if (conflicts.empty()) return closed;

  const auto [x, y] = conflicts.front();
  std::ostringstream msg;
  msg << "inconsistent constraints: (" << name_of(x, doc_ids) << ", " << name_of(y, doc_ids)
      << ") is both cannot-link and must-link via ";
  auto path = ml_path(set, x, y);
  for (std::size_t i = 0; i < path.size(); ++i)
    msg << (i ? " -> " : "") << name_of(path[i], doc_ids);
  if (conflicts.size() > 1) msg << " (" << conflicts.size() << " conflicting pairs in total)";
  throw Error(msg.str());
}

std::vector<IndexPair> check_consistency(const ConstraintSet& set) {
  std::vector<IndexPair> out;
  std::set_intersection(set.ml.begin(), set.ml.end(), set.cl.begin(), set.cl.end(),
                        std::back_inserter(out));
  return out;
}

std::vector<std::vector<std::size_t>> ml_components(const ConstraintSet& set, std::size_t n) {
  if (universe(set) > n) throw Error("constraint references a document outside the corpus");
  DisjointSets ds(n);
  for (const auto& [a, b] : set.ml) ds.unite(a, b);
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> slot(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    auto root = ds.find(i);
    if (slot[root] == n) {
      slot[root] = out.size();
      out.emplace_back();
    }
    out[slot[root]].push_back(i);
  }
  return out;
}

ConstraintSet sample_oracle_constraints(std::span<const std::string> labels, double fraction,
                                        std::uint64_t seed) {
  if (!(fraction >= 0.0 && fraction <= 1.0)) throw Error("oracle fraction must lie in [0, 1]");
  const std::size_t n = labels.size();
  std::vector<IndexPair> all;
  all.reserve(n * (n > 0 ? n - 1 : 0) / 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) all.emplace_back(i, j);

  const auto count = static_cast<std::size_t>(std::floor(fraction * static_cast<double>(all.size())));
  std::vector<IndexPair> picked;
  picked.reserve(count);
  std::mt19937_64 rng(seed);
  std::sample(all.begin(), all.end(), std::back_inserter(picked), count, rng);

  ConstraintSet set;
  for (const auto& [a, b] : picked) {
    if (labels[a] == labels[b])
      set.ml.emplace(a, b);
    else
      set.cl.emplace(a, b);
  }
  return set;
}

}  // namespace depclust
