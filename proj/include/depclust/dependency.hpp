#pragma once

#include <cstddef>
#include <filesystem>
#include <istream>
#include <set>
#include <string>
#include <vector>

#include "depclust/text.hpp"

namespace depclust {

/// Undirected word relation. Stored with head <= dependent so that the same
/// relation read in either direction compares equal; relation_tag does not
/// take part in comparisons.
struct DependencyPair {
  std::string head;
  std::string dependent;
  std::string relation_tag;

  DependencyPair(std::string a, std::string b, std::string tag = {});

  friend bool operator==(const DependencyPair& x, const DependencyPair& y) {
    return x.head == y.head && x.dependent == y.dependent;
  }
  friend bool operator<(const DependencyPair& x, const DependencyPair& y) {
    return x.head != y.head ? x.head < y.head : x.dependent < y.dependent;
  }
};

struct SentenceDeps {
  std::size_t sentence_index = 0;
  std::set<DependencyPair> pairs;
};

/// Reads CoNLL-U. Multi-word token ranges (1-2) and empty nodes (1.1) are
/// skipped; every other token contributes (lowercase FORM, lowercase head FORM)
/// unless it attaches to the root or both forms are equal.
std::vector<SentenceDeps> parse_conllu(std::istream& in);

/// Parses <doc_id>.conllu and checks it has one sentence per cleaned sentence of doc.
std::vector<SentenceDeps> parse_conllu_for(const Document& doc,
                                           const std::filesystem::path& parses_dir);

SentenceDeps cooccurrence_deps(const Sentence& sentence, std::size_t window);
std::vector<SentenceDeps> cooccurrence_deps(const Document& doc, std::size_t window);

inline constexpr std::size_t kDefaultWindow = 2;

}  // namespace depclust
