#include "depclust/text.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <numeric>
#include <random>
#include <sstream>

#include "depclust/error.hpp"

namespace depclust {
namespace {

bool is_letter(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_terminator(char c) { return c == '.' || c == '?' || c == '!'; }
bool is_joiner(char c) { return c == '\'' || c == '-'; }

char to_lower(char c) { return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

// SMART-style short English list; small enough to keep content words such as
// "apple" or "maker" intact.
constexpr const char* kDefaultStopwords[] = {
    "a",       "about",   "above",  "after",   "again",   "against", "all",     "am",
    "an",      "and",     "any",    "are",     "aren't",  "as",      "at",      "be",
    "because", "been",    "before", "being",   "below",   "between", "both",    "but",
    "by",      "can",     "can't",  "cannot",  "could",   "couldn't", "did",    "didn't",
    "do",      "does",    "doesn't", "doing",  "don't",   "down",    "during",  "each",
    "few",     "for",     "from",   "further", "had",     "hadn't",  "has",     "hasn't",
    "have",    "haven't", "having", "he",      "he'd",    "he'll",   "he's",    "her",
    "here",    "here's",  "hers",   "herself", "him",     "himself", "his",     "how",
    "how's",   "i",       "i'd",    "i'll",    "i'm",     "i've",    "if",      "in",
    "into",    "is",      "isn't",  "it",      "it's",    "its",     "itself",  "let's",
    "me",      "more",    "most",   "mustn't", "my",      "myself",  "no",      "nor",
    "not",     "of",      "off",    "on",      "once",    "only",    "or",      "other",
    "ought",   "our",     "ours",   "ourselves", "out",   "over",    "own",     "same",
    "shan't",  "she",     "she'd",  "she'll",  "she's",   "should",  "shouldn't", "so",
    "some",    "such",    "than",   "that",    "that's",  "the",     "their",   "theirs",
    "them",    "themselves", "then", "there",  "there's", "these",   "they",    "they'd",
    "they'll", "they're", "they've", "this",   "those",   "through", "to",      "too",
    "under",   "until",   "up",     "very",    "was",     "wasn't",  "we",      "we'd",
    "we'll",   "we're",   "we've",  "were",    "weren't", "what",    "what's",  "when",
    "when's",  "where",   "where's", "which",  "while",   "who",     "who's",   "whom",
    "why",     "why's",   "will",   "with",    "won't",   "would",   "wouldn't", "you",
    "you'd",   "you'll",  "you're", "you've",  "your",    "yours",   "yourself", "yourselves",
    "also",    "just",    "s",      "t",       "re",      "ve",      "ll",      "d",
};

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw Error("cannot read file " + path.string());
  return buf.str();
}

}  // namespace

bool Document::degenerate() const {
  return std::all_of(sentences.begin(), sentences.end(),
                     [](const Sentence& s) { return s.tokens.empty(); });
}

std::vector<std::string> Corpus::doc_ids() const {
  std::vector<std::string> out;
  out.reserve(documents.size());
  for (const auto& d : documents) out.push_back(d.doc_id);
  return out;
}

std::vector<std::string> Corpus::labels() const {
  std::vector<std::string> out;
  out.reserve(documents.size());
  for (const auto& d : documents) out.push_back(d.label);
  return out;
}

std::size_t Corpus::class_count() const {
  std::set<std::string_view> distinct;
  for (const auto& d : documents) distinct.insert(d.label);
  return distinct.size();
}

std::optional<std::size_t> Corpus::index_of(std::string_view doc_id) const {
  for (std::size_t i = 0; i < documents.size(); ++i)
    if (documents[i].doc_id == doc_id) return i;
  return std::nullopt;
}

std::string clean_text(std::string_view raw) {
  std::string folded;
  folded.reserve(raw.size());
  for (char c : raw)
    if (!is_digit(c)) folded.push_back(to_lower(c));

  std::string out;
  out.reserve(folded.size());
  for (std::size_t i = 0; i < folded.size(); ++i) {
    char c = folded[i];
    if (is_joiner(c)) {
      bool inner = i > 0 && i + 1 < folded.size() && is_letter(folded[i - 1]) &&
                   is_letter(folded[i + 1]);
      c = inner ? c : ' ';
    } else if (!is_letter(c) && !is_terminator(c)) {
      c = ' ';
    }

    if (c == ' ') {
      if (!out.empty() && out.back() != ' ') out.push_back(' ');
    } else if (is_terminator(c)) {
      while (!out.empty() && out.back() == ' ') out.pop_back();
      if (out.empty() || !is_terminator(out.back())) out.push_back(c);
    } else {
      out.push_back(c);
    }
  }
  while (!out.empty() && out.back() == ' ') out.pop_back();
  return out;
}

std::vector<std::string> split_sentences(std::string_view cleaned) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= cleaned.size(); ++i) {
    if (i == cleaned.size() || is_terminator(cleaned[i])) {
      auto piece = trim(cleaned.substr(start, i - start));
      if (!piece.empty()) out.emplace_back(piece);
      start = i + 1;
    }
  }
  return out;
}

std::vector<std::string> tokenize(std::string_view sentence) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < sentence.size()) {
    while (i < sentence.size() && sentence[i] == ' ') ++i;
    std::size_t j = i;
    while (j < sentence.size() && sentence[j] != ' ') ++j;
    if (j > i) out.emplace_back(sentence.substr(i, j - i));
    i = j;
  }
  return out;
}

std::vector<std::string> remove_stopwords(const std::vector<std::string>& tokens,
                                          const Stoplist& stoplist) {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  std::copy_if(tokens.begin(), tokens.end(), std::back_inserter(out),
               [&](const std::string& t) { return !stoplist.contains(t); });
  return out;
}

const Stoplist& default_stoplist() {
  static const Stoplist list(std::begin(kDefaultStopwords), std::end(kDefaultStopwords));
  return list;
}

Stoplist read_stoplist(const std::filesystem::path& path) {
  std::istringstream in(read_file(path));
  Stoplist out;
  std::string line;
  while (std::getline(in, line)) {
    auto word = std::string(trim(std::string_view(line)));
    if (!word.empty() && word.back() == '\r') word.pop_back();
    if (word.empty() || word.front() == '#') continue;
    std::transform(word.begin(), word.end(), word.begin(), to_lower);
    out.insert(std::move(word));
  }
  return out;
}

Document make_document(const RawDocument& raw, const Stoplist& stoplist) {
  Document doc{raw.doc_id, raw.label, raw.text, {}};
  auto pieces = split_sentences(clean_text(raw.text));
  doc.sentences.reserve(pieces.size());
  for (std::size_t i = 0; i < pieces.size(); ++i)
    doc.sentences.push_back({remove_stopwords(tokenize(pieces[i]), stoplist), i});
  return doc;
}

Corpus build_corpus(const std::vector<RawDocument>& raw, const Stoplist& stoplist) {
  Corpus corpus;
  corpus.documents.reserve(raw.size());
  std::set<std::string, std::less<>> seen;
  for (const auto& r : raw) {
    if (!seen.insert(r.doc_id).second) throw Error("duplicate doc_id " + r.doc_id);
    corpus.documents.push_back(make_document(r, stoplist));
  }
  for (const auto& doc : corpus.documents) {
    std::set<std::string_view> vocab;
    for (const auto& s : doc.sentences) vocab.insert(s.tokens.begin(), s.tokens.end());
    for (auto term : vocab) {
      auto it = corpus.doc_freq.find(term);
      if (it == corpus.doc_freq.end())
        corpus.doc_freq.emplace(std::string(term), 1);
      else
        ++it->second;
    }
  }
  return corpus;
}

std::vector<RawDocument> read_dataset(const std::filesystem::path& root,
                                      const LoadOptions& options) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::is_directory(root, ec)) throw Error("cannot read dataset directory " + root.string());

  std::vector<fs::path> label_dirs;
  for (const auto& entry : fs::directory_iterator(root))
    if (entry.is_directory() && entry.path().filename().string().front() != '.')
      label_dirs.push_back(entry.path());
  std::sort(label_dirs.begin(), label_dirs.end());

  std::vector<std::pair<std::string, fs::path>> files;
  for (const auto& dir : label_dirs) {
    std::vector<fs::path> in_dir;
    for (const auto& entry : fs::directory_iterator(dir))
      if (entry.is_regular_file() && entry.path().filename().string().front() != '.')
        in_dir.push_back(entry.path());
    std::sort(in_dir.begin(), in_dir.end());
    for (auto& p : in_dir) files.emplace_back(dir.filename().string(), std::move(p));
  }
  if (files.empty()) throw Error("empty corpus");

  std::vector<std::size_t> keep(files.size());
  std::iota(keep.begin(), keep.end(), std::size_t{0});
  if (options.max_docs && *options.max_docs < files.size()) {
    std::vector<std::size_t> picked;
    std::mt19937_64 rng(options.seed);
    std::sample(keep.begin(), keep.end(), std::back_inserter(picked), *options.max_docs, rng);
    keep = std::move(picked);
  }

  std::vector<RawDocument> docs;
  docs.reserve(keep.size());
  for (auto idx : keep) {
    const auto& [label, path] = files[idx];
    docs.push_back({path.stem().string(), label, read_file(path)});
  }
  return docs;
}

Corpus load_corpus(const std::filesystem::path& root, const Stoplist& stoplist,
                   const LoadOptions& options) {
  return build_corpus(read_dataset(root, options), stoplist);
}

void write_dataset(const std::vector<RawDocument>& docs, const std::filesystem::path& dir) {
  namespace fs = std::filesystem;
  for (const auto& doc : docs) {
    auto label_dir = dir / doc.label;
    fs::create_directories(label_dir);
    auto path = label_dir / (doc.doc_id + ".txt");
    std::ofstream out(path, std::ios::binary);
    out << doc.text;
    if (!out) throw Error("cannot write file " + path.string());
  }
}

}  // namespace depclust
