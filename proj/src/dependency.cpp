#include "depclust/dependency.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>

#include "depclust/error.hpp"

namespace depclust {
namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](char c) { return (c >= 'A' && c <= 'Z') ? char(c - 'A' + 'a') : c; });
  return s;
}

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> cols;
  std::size_t start = 0;
  while (true) {
    auto tab = line.find('\t', start);
    cols.push_back(line.substr(start, tab - start));
    if (tab == std::string::npos) break;
    start = tab + 1;
  }
  return cols;
}

std::optional<std::size_t> parse_index(const std::string& s) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

struct Token {
  std::size_t id;
  std::string form;
  std::size_t head;
  std::string deprel;
};

SentenceDeps resolve(const std::vector<Token>& tokens, std::size_t index,
                     std::size_t first_line) {
  SentenceDeps out{index, {}};
  for (const auto& t : tokens) {
    if (t.head == 0) continue;
    auto it = std::find_if(tokens.begin(), tokens.end(),
                           [&](const Token& h) { return h.id == t.head; });
    if (it == tokens.end())
      throw Error("conllu: sentence starting at line " + std::to_string(first_line) +
                  " references missing head " + std::to_string(t.head));
    if (it->form == t.form) continue;
    out.pairs.emplace(t.form, it->form, t.deprel);
  }
  return out;
}

}  // namespace

DependencyPair::DependencyPair(std::string a, std::string b, std::string tag)
    : head(std::move(a)), dependent(std::move(b)), relation_tag(std::move(tag)) {
  if (head.empty() || dependent.empty()) throw Error("dependency pair with empty word");
  if (dependent < head) std::swap(head, dependent);
}

std::vector<SentenceDeps> parse_conllu(std::istream& in) {
  std::vector<SentenceDeps> out;
  std::vector<Token> tokens;
  std::size_t line_no = 0;
  std::size_t first_line = 0;
  std::string line;

  auto flush = [&] {
    if (!tokens.empty()) out.push_back(resolve(tokens, out.size(), first_line));
    tokens.clear();
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      flush();
      continue;
    }
    if (line.front() == '#') continue;

    auto cols = split_tabs(line);
    if (cols.size() != 10)
      throw Error("conllu line " + std::to_string(line_no) + ": expected 10 columns, got " +
                  std::to_string(cols.size()));
    if (cols[0].find_first_of("-.") != std::string::npos) continue;
    auto id = parse_index(cols[0]);
    auto head = parse_index(cols[6]);
    if (!id || *id == 0 || !head)
      throw Error("conllu line " + std::to_string(line_no) + ": bad ID or HEAD column");
    if (cols[1].empty() || cols[1] == "_")
      throw Error("conllu line " + std::to_string(line_no) + ": missing FORM");
    if (tokens.empty()) first_line = line_no;
    tokens.push_back({*id, lower(cols[1]), *head, cols[7]});
  }
  flush();
  return out;
}

std::vector<SentenceDeps> parse_conllu_for(const Document& doc,
                                           const std::filesystem::path& parses_dir) {
  auto path = parses_dir / (doc.doc_id + ".conllu");
  std::ifstream in(path);
  if (!in) throw Error("cannot read file " + path.string());
  auto deps = parse_conllu(in);
  if (deps.size() != doc.sentences.size())
    throw Error("conllu sentence count mismatch for " + doc.doc_id + ": parse has " +
                std::to_string(deps.size()) + ", document has " +
                std::to_string(doc.sentences.size()));
  return deps;
}

SentenceDeps cooccurrence_deps(const Sentence& sentence, std::size_t window) {
  if (window == 0) throw Error("co-occurrence window must be >= 1");
  SentenceDeps out{sentence.original_index, {}};
  const auto& tok = sentence.tokens;
  for (std::size_t i = 0; i < tok.size(); ++i)
    for (std::size_t j = i + 1; j < tok.size() && j - i <= window; ++j)
      if (tok[i] != tok[j]) out.pairs.emplace(tok[i], tok[j]);
  return out;
}

std::vector<SentenceDeps> cooccurrence_deps(const Document& doc, std::size_t window) {
  std::vector<SentenceDeps> out;
  out.reserve(doc.sentences.size());
  for (const auto& s : doc.sentences) out.push_back(cooccurrence_deps(s, window));
  return out;
}

}  // namespace depclust
