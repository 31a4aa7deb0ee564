#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace depclust {

using Stoplist = std::set<std::string, std::less<>>;

struct Sentence {
  std::vector<std::string> tokens;  // lowercase, stopword-free
  std::size_t original_index = 0;
};

/// A document as read from disk, before cleaning.
struct RawDocument {
  std::string doc_id;
  std::string label;
  std::string text;
};

struct Document {
  std::string doc_id;
  std::string label;
  std::string raw_text;
  std::vector<Sentence> sentences;

  /// True when cleaning left no tokens at all. Such documents keep their
  /// index in the corpus but contribute an empty graph.
  bool degenerate() const;
};

struct Corpus {
  std::vector<Document> documents;
  std::map<std::string, std::size_t, std::less<>> doc_freq;

  std::size_t n_docs() const { return documents.size(); }
  std::vector<std::string> doc_ids() const;
  std::vector<std::string> labels() const;
  std::size_t class_count() const;
  std::optional<std::size_t> index_of(std::string_view doc_id) const;
};

// Cleaning pipeline. clean_text lowercases, drops digits, strips every
// delimiter except sentence terminators (. ? !) and apostrophes/hyphens
// between two letters, and collapses runs of spaces and terminators.
std::string clean_text(std::string_view raw);
std::vector<std::string> split_sentences(std::string_view cleaned);
std::vector<std::string> tokenize(std::string_view sentence);
std::vector<std::string> remove_stopwords(const std::vector<std::string>& tokens,
                                          const Stoplist& stoplist);

const Stoplist& default_stoplist();
/// One word per line; blank lines and `#` comments ignored. Words are lowercased.
Stoplist read_stoplist(const std::filesystem::path& path);

Document make_document(const RawDocument& raw, const Stoplist& stoplist);
Corpus build_corpus(const std::vector<RawDocument>& raw, const Stoplist& stoplist);

struct LoadOptions {
  std::optional<std::size_t> max_docs;
  std::uint64_t seed = 0;
};

/// Reads <root>/<label>/<file>. Documents are ordered by (label, filename);
/// doc_id is the file stem and must be unique across labels. When max_docs is
/// smaller than the number of files, a seeded uniform subset is kept (in the
/// same order).
std::vector<RawDocument> read_dataset(const std::filesystem::path& root,
                                      const LoadOptions& options = {});
Corpus load_corpus(const std::filesystem::path& root, const Stoplist& stoplist,
                   const LoadOptions& options = {});

/// Writes documents in the layout read_dataset expects (<dir>/<label>/<doc_id>.txt).
void write_dataset(const std::vector<RawDocument>& docs, const std::filesystem::path& dir);

}  // namespace depclust
