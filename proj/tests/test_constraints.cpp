#include <random>
#include <sstream>

#include "doctest.h"

#include "depclust/constraints.hpp"
#include "depclust/error.hpp"
#include "oracles.hpp"

using namespace depclust;

namespace {

const std::vector<std::string> kIds{"d1", "d2", "d3", "d4"};

ConstraintSet parse(const std::string& text) {
  std::istringstream in(text);
  return parse_constraints(in, kIds);
}

}  // namespace

TEST_CASE("parse_constraints") {
  auto s = parse("ML d1 d2\nCL d1 d3\n");
  CHECK(s.ml == std::set<IndexPair>{{0, 1}});
  CHECK(s.cl == std::set<IndexPair>{{0, 2}});
  CHECK_FALSE(s.closed);

  CHECK(parse("").empty());
  CHECK(parse("# only a comment\n\n   \n").empty());
  CHECK(parse("ML d2 d1\nML d1 d2  # again\n").ml == std::set<IndexPair>{{0, 1}});
}

TEST_CASE("parse_constraints errors carry line numbers") {
  CHECK_THROWS_WITH_AS(parse("ML d1 d2\nXX d1 d2\n"), doctest::Contains("line 2"), Error);
  CHECK_THROWS_WITH_AS(parse("ML d1\n"), doctest::Contains("line 1"), Error);
  CHECK_THROWS_WITH_AS(parse("\nCL d1 d1\n"), doctest::Contains("self-pair"), Error);
  CHECK_THROWS_WITH_AS(parse("CL d1 d9\n"), doctest::Contains("unknown doc_id d9"), Error);
  CHECK_THROWS_AS(parse_constraints_file("/nonexistent/constraints.txt", kIds), Error);
}

TEST_CASE("write_constraints round-trips through parse_constraints") {
  auto s = parse("ML d1 d2\nCL d4 d3\nML d3 d2\n");
  std::ostringstream out;
  write_constraints(s, kIds, out);
  CHECK(parse(out.str()) == s);
}

TEST_CASE("transitive_closure examples") {
  CHECK(transitive_closure({}).empty());
  CHECK(transitive_closure({}).closed);

  ConstraintSet chain;
  chain.add_ml(0, 1);
  chain.add_ml(1, 2);
  CHECK(transitive_closure(chain).ml == std::set<IndexPair>{{0, 1}, {0, 2}, {1, 2}});

  ConstraintSet prop;
  prop.add_ml(0, 1);
  prop.add_cl(1, 2);
  auto closed = transitive_closure(prop);
  CHECK(closed.cl == std::set<IndexPair>{{0, 2}, {1, 2}});
}

TEST_CASE("cannot-link does not chain through cannot-link") {
  ConstraintSet s;
  s.add_cl(0, 1);
  s.add_cl(1, 2);
  CHECK(transitive_closure(s).cl == s.cl);
}

TEST_CASE("closure is idempotent") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 100; ++t) {
    auto set = oracle::random_consistent_constraints(12, rng, 0.1);
    auto once = transitive_closure(set);
    CHECK(transitive_closure(once) == once);
  }
}

TEST_CASE("closure matches brute-force fixed point") {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 100; ++t) {
    auto set = oracle::random_consistent_constraints(10, rng, 0.12);
    auto expected = oracle::brute_force_closure(set);
    CHECK(transitive_closure(set) == expected);
  }
}

TEST_CASE("inconsistent sets are reported with a derivation chain") {
  ConstraintSet direct;
  direct.add_ml(0, 1);
  direct.add_cl(0, 1);
  CHECK(check_consistency(close_constraints(direct)) == std::vector<IndexPair>{{0, 1}});

  ConstraintSet derived;
  derived.add_ml(0, 1);
  derived.add_ml(1, 2);
  derived.add_cl(0, 2);
  CHECK(check_consistency(close_constraints(derived)) == std::vector<IndexPair>{{0, 2}});
  CHECK_THROWS_WITH_AS(transitive_closure(derived, kIds), doctest::Contains("d1 -> d2 -> d3"), Error);

  ConstraintSet fine;
  fine.add_ml(0, 1);
  fine.add_cl(2, 3);
  CHECK(check_consistency(transitive_closure(fine)).empty());
}

TEST_CASE("ml_components") {
  ConstraintSet s;
  s.add_ml(3, 1);
  s.add_ml(1, 4);
  auto comps = ml_components(s, 6);
  CHECK(comps == std::vector<std::vector<std::size_t>>{{0}, {1, 3, 4}, {2}, {5}});
  CHECK_THROWS_AS(ml_components(s, 3), Error);
}

TEST_CASE("sample_oracle_constraints") {
  const std::vector<std::string> labels{"a", "a", "b"};
  CHECK(sample_oracle_constraints(labels, 0.0, 1).empty());
  auto all = sample_oracle_constraints(labels, 1.0, 1);
  CHECK(all.ml == std::set<IndexPair>{{0, 1}});
  CHECK(all.cl == std::set<IndexPair>{{0, 2}, {1, 2}});
  CHECK(sample_oracle_constraints(labels, 0.5, 3).ml.size() +
            sample_oracle_constraints(labels, 0.5, 3).cl.size() ==
        1);
  CHECK_THROWS_AS(sample_oracle_constraints(labels, 1.2, 1), Error);

  std::vector<std::string> many;
  for (int i = 0; i < 40; ++i) many.push_back(std::string(1, static_cast<char>('a' + i % 4)));
  CHECK(sample_oracle_constraints(many, 0.1, 7) == sample_oracle_constraints(many, 0.1, 7));
  auto s = sample_oracle_constraints(many, 0.1, 7);
  CHECK(s.ml.size() + s.cl.size() == 78);  // floor(0.1 * 780)
}

TEST_CASE("oracle-sampled constraints are always consistent") {
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<int> lab(0, 3);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    std::vector<std::string> labels;
    for (int i = 0; i < 30; ++i) labels.push_back(std::to_string(lab(rng)));
    auto closed = close_constraints(sample_oracle_constraints(labels, 0.2, seed));
    CHECK(check_consistency(closed).empty());
    for (auto [a, b] : closed.ml) CHECK(labels[a] == labels[b]);
    for (auto [a, b] : closed.cl) CHECK(labels[a] != labels[b]);
  }
}
