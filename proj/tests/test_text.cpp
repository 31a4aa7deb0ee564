#include <filesystem>
#include <fstream>
#include <random>

#include "doctest.h"

#include "depclust/error.hpp"
#include "depclust/text.hpp"

using namespace depclust;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir(const std::string& name) {
  auto dir = fs::temp_directory_path() / ("depclust_text_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

void write(const fs::path& p, const std::string& text) {
  fs::create_directories(p.parent_path());
  std::ofstream(p) << text;
}

}  // namespace

TEST_CASE("clean_text examples") {
  CHECK(clean_text("") == "");
  CHECK(clean_text("Maker of iPhone is \"APPLE\".") == "maker of iphone is apple.");
  CHECK(clean_text("Top  10   tips!!") == "top tips!");
}

TEST_CASE("clean_text keeps intra-word apostrophes and hyphens only") {
  CHECK(clean_text("The co-founder's plan") == "the co-founder's plan");
  CHECK(clean_text("'quoted' -- dash - here") == "quoted dash here");
  CHECK(clean_text("steve,jobs;apple") == "steve jobs apple");
  CHECK(clean_text("a . . b") == "a. b");
}

TEST_CASE("clean_text postconditions and idempotence on random input") {
  std::mt19937_64 rng(7);
  const std::string alphabet = "aBcZ09 .?!,;:'\"-()\t\n\xc3\xa9";
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  std::uniform_int_distribution<int> len(0, 60);
  for (int trial = 0; trial < 500; ++trial) {
    std::string raw;
    for (int i = len(rng); i > 0; --i) raw.push_back(alphabet[pick(rng)]);
    auto once = clean_text(raw);
    CHECK(clean_text(once) == once);
    CHECK(once.find("  ") == std::string::npos);
    for (char c : once) {
      CHECK_FALSE((c >= '0' && c <= '9'));
      CHECK_FALSE((c >= 'A' && c <= 'Z'));
      bool allowed = (c >= 'a' && c <= 'z') || c == ' ' || c == '.' || c == '?' || c == '!' ||
                     c == '\'' || c == '-';
      CHECK(allowed);
    }
  }
}

TEST_CASE("split_sentences") {
  CHECK(split_sentences("a. b? c!") == std::vector<std::string>{"a", "b", "c"});
  CHECK(split_sentences("maker of iphone is apple. steve jobs was the ceo at apple") ==
        std::vector<std::string>{"maker of iphone is apple", "steve jobs was the ceo at apple"});
  CHECK(split_sentences("no terminator here") == std::vector<std::string>{"no terminator here"});
  CHECK(split_sentences("").empty());
  CHECK(split_sentences(". ! ?").empty());
}

TEST_CASE("remove_stopwords") {
  const auto& stop = default_stoplist();
  CHECK(remove_stopwords({"maker", "of", "iphone", "is", "apple"}, stop) ==
        std::vector<std::string>{"maker", "iphone", "apple"});
  CHECK(remove_stopwords({}, stop).empty());
  CHECK(remove_stopwords({"the", "the", "the"}, stop).empty());
  std::vector<std::string> words{"the", "cat", "of", "x"};
  CHECK(remove_stopwords(words, Stoplist{}) == words);
}

TEST_CASE("make_document builds stopword-free lowercase sentences") {
  auto doc = make_document({"d1", "tech", "Maker of iPhone is \"APPLE\". Steve Jobs was the CEO at Apple."},
                           default_stoplist());
  REQUIRE(doc.sentences.size() == 2);
  CHECK(doc.sentences[0].tokens == std::vector<std::string>{"maker", "iphone", "apple"});
  CHECK(doc.sentences[1].tokens == std::vector<std::string>{"steve", "jobs", "ceo", "apple"});
  CHECK(doc.sentences[1].original_index == 1);
  CHECK_FALSE(doc.degenerate());

  auto empty = make_document({"d2", "x", "123 456 !!! the of."}, default_stoplist());
  CHECK(empty.degenerate());
}

TEST_CASE("build_corpus document frequencies") {
  auto corpus = build_corpus({{"a", "x", "apple pie. apple tart."},
                              {"b", "x", "apple cider."},
                              {"c", "y", "banana."},
                              {"d", "y", "apple banana."}},
                             default_stoplist());
  CHECK(corpus.n_docs() == 4);
  CHECK(corpus.class_count() == 2);
  CHECK(corpus.doc_freq.at("apple") == 3);
  CHECK(corpus.doc_freq.at("banana") == 2);
  for (const auto& [term, df] : corpus.doc_freq) {
    CHECK(df >= 1);
    CHECK(df <= corpus.n_docs());
  }
  auto all = build_corpus({{"a", "x", "common one."}, {"b", "y", "common two."}}, default_stoplist());
  CHECK(all.doc_freq.at("common") == all.n_docs());
  CHECK_THROWS_AS(build_corpus({{"a", "x", "t"}, {"a", "y", "u"}}, default_stoplist()), Error);
}

TEST_CASE("load_corpus reads label directories") {
  auto root = scratch_dir("load");
  write(root / "sport" / "s1.txt", "Football match tonight.");
  write(root / "sport" / "s2.txt", "Tennis final.");
  write(root / "tech" / "t1.txt", "New phone released.");
  write(root / "tech" / "t2.txt", "Phone battery review.");

  auto corpus = load_corpus(root, default_stoplist());
  CHECK(corpus.n_docs() == 4);
  CHECK(corpus.class_count() == 2);
  CHECK(corpus.doc_ids() == std::vector<std::string>{"s1", "s2", "t1", "t2"});
  CHECK(corpus.documents[2].label == "tech");
  CHECK(corpus.doc_freq.at("phone") == 2);

  auto subset = load_corpus(root, default_stoplist(), {std::size_t{2}, 9});
  CHECK(subset.n_docs() == 2);
  auto again = load_corpus(root, default_stoplist(), {std::size_t{2}, 9});
  CHECK(subset.doc_ids() == again.doc_ids());
}

TEST_CASE("load_corpus errors") {
  auto root = scratch_dir("empty");
  fs::create_directories(root / "label");
  CHECK_THROWS_WITH_AS(load_corpus(root, default_stoplist()), "empty corpus", Error);
  CHECK_THROWS_AS(load_corpus(root / "missing", default_stoplist()), Error);

  auto dup = scratch_dir("dup");
  write(dup / "a" / "same.txt", "one.");
  write(dup / "b" / "same.txt", "two.");
  CHECK_THROWS_AS(load_corpus(dup, default_stoplist()), Error);
}

TEST_CASE("read_stoplist") {
  auto dir = scratch_dir("stop");
  write(dir / "stop.txt", "# comment\nFoo\n\nbar\n");
  auto s = read_stoplist(dir / "stop.txt");
  CHECK(s == Stoplist{"bar", "foo"});
  CHECK_THROWS_AS(read_stoplist(dir / "nope.txt"), Error);
}
