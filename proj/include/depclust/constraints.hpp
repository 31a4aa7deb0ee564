#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <istream>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace depclust {

/// Unordered pair of document indices, stored with first < second.
using IndexPair = std::pair<std::size_t, std::size_t>;

IndexPair make_pair_checked(std::size_t a, std::size_t b);

struct ConstraintSet {
  std::set<IndexPair> ml;
  std::set<IndexPair> cl;
  bool closed = false;

  void add_ml(std::size_t a, std::size_t b) { ml.insert(make_pair_checked(a, b)); }
  void add_cl(std::size_t a, std::size_t b) { cl.insert(make_pair_checked(a, b)); }
  bool empty() const { return ml.empty() && cl.empty(); }
  bool cannot_link(std::size_t a, std::size_t b) const;

  friend bool operator==(const ConstraintSet&, const ConstraintSet&) = default;
};

/// Lines are `ML <doc_id> <doc_id>` or `CL <doc_id> <doc_id>`; `#` starts a comment.
ConstraintSet parse_constraints(std::istream& in, std::span<const std::string> doc_ids);
ConstraintSet parse_constraints_file(const std::filesystem::path& path,
                                     std::span<const std::string> doc_ids);
void write_constraints(const ConstraintSet& set, std::span<const std::string> doc_ids,
                       std::ostream& out);

/// Fixed point of must-link transitivity and cannot-link propagation across
/// must-link components, without throwing. A cannot-link pair whose endpoints
/// end up in one must-link component is kept as-is (not propagated), so it
/// shows up in check_consistency.
ConstraintSet close_constraints(const ConstraintSet& set);

/// close_constraints, then throws Error describing the first conflict (the pair
/// and the must-link chain that joins it) if the result is inconsistent.
ConstraintSet transitive_closure(const ConstraintSet& set,
                                 std::span<const std::string> doc_ids = {});

/// Every pair present in both ml and cl.
std::vector<IndexPair> check_consistency(const ConstraintSet& set);

/// Connected components of the must-link graph over n documents, each sorted,
/// ordered by smallest member. Singletons included.
std::vector<std::vector<std::size_t>> ml_components(const ConstraintSet& set, std::size_t n);

/// Samples floor(fraction * n(n-1)/2) distinct pairs uniformly; same-label
/// pairs become must-links and the rest cannot-links.
ConstraintSet sample_oracle_constraints(std::span<const std::string> labels, double fraction,
                                        std::uint64_t seed);

}  // namespace depclust
