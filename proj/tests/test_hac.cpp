#include <algorithm>
#include <random>

#include "doctest.h"

#include "depclust/error.hpp"
#include "depclust/hac.hpp"
#include "oracles.hpp"

using namespace depclust;
using Clusters = oracle::Clusters;

namespace {

Clusters clusters(const Partition& p) { return oracle::clusters_of(p.assignment); }

SimilarityMatrix three_docs() {
  return oracle::to_matrix({{1.0, 0.9, 0.1}, {0.9, 1.0, 0.1}, {0.1, 0.1, 1.0}});
}

}  // namespace

TEST_CASE("hac on two documents") {
  auto m = oracle::to_matrix({{1.0, 0.4}, {0.4, 1.0}});
  auto r = hac(m);
  REQUIRE(r.merge_log.size() == 1);
  CHECK(r.merge_log[0].a == std::vector<std::size_t>{0});
  CHECK(r.merge_log[0].b == std::vector<std::size_t>{1});
  CHECK(r.merge_log[0].similarity == 0.4);
  CHECK(r.partition.k == 1);
}

TEST_CASE("hac merges the closest pair first") {
  auto m = three_docs();
  CHECK(clusters(hac(m, StopRule::target(2)).partition) == Clusters{{0, 1}, {2}});
  auto full = hac(m);
  REQUIRE(full.merge_log.size() == 2);
  CHECK(full.merge_log[1].a == std::vector<std::size_t>{0, 1});
  CHECK(full.merge_log[1].similarity == doctest::Approx(0.1));
}

TEST_CASE("hac on four documents logs n-1 merges with group averages") {
  auto m = oracle::to_matrix({{1, 0.8, 0.2, 0.1}, {0.8, 1, 0.3, 0.2}, {0.2, 0.3, 1, 0.6}, {0.1, 0.2, 0.6, 1}});
  auto r = hac(m);
  REQUIRE(r.merge_log.size() == 3);
  CHECK(r.merge_log[0].a == std::vector<std::size_t>{0});
  CHECK(r.merge_log[0].b == std::vector<std::size_t>{1});
  CHECK(r.merge_log[1].a == std::vector<std::size_t>{2});
  CHECK(r.merge_log[1].b == std::vector<std::size_t>{3});
  CHECK(r.merge_log[2].similarity == doctest::Approx((0.2 + 0.1 + 0.3 + 0.2) / 4.0));
  CHECK(r.partition.k == 1);
}

TEST_CASE("ties break towards the lexicographically smallest pair") {
  auto m = oracle::to_matrix({{1, 0.5, 0.5}, {0.5, 1, 0.5}, {0.5, 0.5, 1}});
  auto r = hac(m);
  CHECK(r.merge_log[0].a == std::vector<std::size_t>{0});
  CHECK(r.merge_log[0].b == std::vector<std::size_t>{1});
}

TEST_CASE("hac stop rules") {
  auto m = oracle::to_matrix({{1, -0.5, 0.2}, {-0.5, 1, -0.2}, {0.2, -0.2, 1}});
  auto nn = hac(m, StopRule::non_negative());
  CHECK(clusters(nn.partition) == Clusters{{0, 2}, {1}});
  CHECK(hac(m).partition.k == 1);
  CHECK(hac(m, StopRule::target(3)).merge_log.empty());
  CHECK_THROWS_AS(hac(SimilarityMatrix{}), Error);
}

TEST_CASE("apply_ml_constraints") {
  auto m = three_docs();
  ConstraintSet none;
  auto same = apply_ml_constraints(singleton_state(m), none, m);
  CHECK(same.cluster_count() == 3);

  ConstraintSet ml;
  ml.add_ml(1, 2);
  auto s = apply_ml_constraints(singleton_state(m), transitive_closure(ml), m);
  CHECK(s.active_clusters() == std::vector<std::vector<std::size_t>>{{0}, {1, 2}});
  REQUIRE(s.merge_log.size() == 1);
  CHECK(s.merge_log[0].kind == MergeKind::must_link);
  CHECK(s.active_sim(0, 1) == doctest::Approx(0.5));

  ConstraintSet chain;
  chain.add_ml(0, 1);
  chain.add_ml(1, 2);
  auto one = apply_ml_constraints(singleton_state(m), transitive_closure(chain), m);
  CHECK(one.cluster_count() == 1);
  CHECK(one.merge_log.size() == 2);
}

TEST_CASE("validate_cl") {
  ConstraintSet cl;
  cl.add_cl(0, 3);
  std::vector<std::size_t> a{0, 1}, b{2, 3}, c{2};
  CHECK_FALSE(validate_cl(a, b, cl));
  CHECK_FALSE(validate_cl(b, a, cl));
  CHECK(validate_cl(a, c, cl));
  CHECK(validate_cl(a, b, ConstraintSet{}));

  ConstraintSet many;
  for (std::size_t i = 10; i < 30; ++i) many.add_cl(i, i + 1);
  many.add_cl(1, 3);
  CHECK_FALSE(validate_cl(a, b, many));
}

TEST_CASE("constrained_hac keeps cannot-link documents apart") {
  auto m = oracle::to_matrix({{1, 0.9, 0.9}, {0.9, 1, 0.9}, {0.9, 0.9, 1}});
  ConstraintSet s;
  s.add_ml(0, 1);
  s.add_cl(0, 2);
  auto r = constrained_hac(m, s);
  CHECK(clusters(r.partition) == Clusters{{0, 1}, {2}});
  CHECK(r.penalties == 1);
  CHECK(r.merge_log.size() == 1);
  CHECK(r.merge_log[0].kind == MergeKind::must_link);
}

TEST_CASE("constrained_hac with no constraints runs to one cluster on non-negative data") {
  auto m = three_docs();
  auto r = constrained_hac(m, {});
  CHECK(r.partition.k == 1);
  CHECK(r.merge_log == hac(m, StopRule::non_negative()).merge_log);
}

TEST_CASE("penalty blocks a pair without blocking the rest") {
  // 0,1 and 2,3 are tight; CL(1,2) stops the two blocks from joining.
  auto sim = std::vector<std::vector<double>>{
      {1, 0.9, 0.6, 0.5}, {0.9, 1, 0.7, 0.6}, {0.6, 0.7, 1, 0.8}, {0.5, 0.6, 0.8, 1}};
  ConstraintSet s;
  s.add_cl(1, 2);
  auto r = constrained_hac(oracle::to_matrix(sim), s);
  CHECK(clusters(r.partition) == Clusters{{0, 1}, {2, 3}});
  CHECK(clusters(r.partition) == oracle::simulate_constrained(sim, s));
  CHECK(r.penalties >= 1);
}

TEST_CASE("a penalized pair stays blocked after other merges") {
  auto sim = std::vector<std::vector<double>>{
      {1, 0.9, 0.1, 0.1}, {0.9, 1, 0.1, 0.1}, {0.1, 0.1, 1, 0.2}, {0.1, 0.1, 0.2, 1}};
  ConstraintSet s;
  s.add_cl(0, 2);
  s.add_cl(1, 3);
  auto r = constrained_hac(oracle::to_matrix(sim), s);
  CHECK(clusters(r.partition) == oracle::simulate_constrained(sim, s));
  CHECK(clusters(r.partition) == Clusters{{0, 1}, {2, 3}});
}

TEST_CASE("constrained_hac rejects inconsistent constraints") {
  auto m = three_docs();
  ConstraintSet bad;
  bad.add_ml(0, 1);
  bad.add_cl(0, 1);
  CHECK_THROWS_AS(constrained_hac(m, bad), Error);
  bad.closed = true;
  CHECK_THROWS_AS(constrained_hac(m, bad), Error);
  ConstraintSet outside;
  outside.add_cl(0, 7);
  CHECK_THROWS_AS(constrained_hac(m, outside), Error);
}

TEST_CASE("constrained_hac iteration bound") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 12;
    auto m = oracle::to_matrix(oracle::random_matrix(n, rng, 0.0, 1.0));
    auto s = oracle::random_consistent_constraints(n, rng, 0.15);
    auto r = constrained_hac(m, s);
    auto closed = transitive_closure(s);
    CHECK(r.iterations <= (n - 1) + closed.cl.size() + n * n);
    CHECK(r.iterations == r.penalties + (r.merge_log.size() -
                                           static_cast<std::size_t>(std::count_if(
                                               r.merge_log.begin(), r.merge_log.end(),
                                               [](const MergeRecord& x) {
                                                 return x.kind == MergeKind::must_link;
                                               }))));
  }
}

TEST_CASE("cut_dendrogram") {
  auto m = oracle::to_matrix({{1, 0.8, 0.2, 0.1}, {0.8, 1, 0.3, 0.2}, {0.2, 0.3, 1, 0.6}, {0.1, 0.2, 0.6, 1}});
  auto log = hac(m).merge_log;
  CHECK(cut_dendrogram(log, 4, 4).k == 4);
  CHECK(cut_dendrogram(log, 4, 1).k == 1);
  CHECK(clusters(cut_dendrogram(log, 4, 2)) == Clusters{{0, 1}, {2, 3}});
  CHECK(cut_dendrogram(log, 4, 2).assignment == std::vector<std::size_t>{0, 0, 1, 1});
  CHECK_THROWS_AS(cut_dendrogram(log, 4, 0), Error);
  CHECK_THROWS_AS(cut_dendrogram(log, 4, 5), Error);
  MergeLog partial(log.begin(), log.begin() + 1);
  CHECK_THROWS_AS(cut_dendrogram(partial, 4, 2), Error);
  CHECK(final_partition(partial, 4).k == 3);
}

TEST_CASE("hac cut at k equals hac stopped at k") {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 30; ++t) {
    auto m = oracle::to_matrix(oracle::random_matrix(10, rng, 0.0, 1.0));
    auto log = hac(m).merge_log;
    for (std::size_t k = 1; k <= 10; ++k)
      CHECK(cut_dendrogram(log, 10, k) == hac(m, StopRule::target(k)).partition);
  }
}

TEST_CASE("make_partition numbers clusters by smallest member") {
  auto p = make_partition({{2, 3}, {0}, {1, 4}}, 5);
  CHECK(p.assignment == std::vector<std::size_t>{0, 1, 2, 2, 1});
  CHECK(p.k == 3);
  CHECK_THROWS_AS(make_partition({{0, 1}, {1}}, 2), Error);
  CHECK_THROWS_AS(make_partition({{0}}, 2), Error);
}
