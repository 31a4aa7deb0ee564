#include "depclust/synthgen.hpp"

#include <cstdio>
#include <random>

#include "depclust/error.hpp"

namespace depclust {
namespace {

// Fixed-width base-26 spelling; generated words never contain digits so they
// survive cleaning unchanged.
std::string letters(std::size_t value, std::size_t width) {
  std::string s(width, 'a');
  for (std::size_t i = width; i-- > 0;) {
    s[i] = static_cast<char>('a' + value % 26);
    value /= 26;
  }
  if (value != 0) throw Error("synthetic vocabulary too large");
  return s;
}

std::size_t draw(std::mt19937_64& rng, CountRange r) {
  return std::uniform_int_distribution<std::size_t>(r.min, r.max)(rng);
}

}  // namespace

void SynthSpec::validate() const {
  if (n_topics == 0 || docs_per_topic == 0 || topic_vocab_size == 0 || shared_vocab_size == 0)
    throw Error("synthetic spec: all counts must be >= 1");
  if (sentence_len.min == 0 || sentence_len.min > sentence_len.max ||
      sentences_per_doc.min == 0 || sentences_per_doc.min > sentences_per_doc.max)
    throw Error("synthetic spec: ranges must satisfy 1 <= min <= max");
  if (!(topic_word_prob > 0.0 && topic_word_prob <= 1.0))
    throw Error("synthetic spec: topic_word_prob must lie in (0, 1]");
}

std::string topic_label(std::size_t topic) { return "topic" + letters(topic, 2); }

std::string topic_word(std::size_t topic, std::size_t index) {
  return "q" + letters(topic, 2) + letters(index, 3);
}

std::string shared_word(std::size_t index) { return "zx" + letters(index, 3); }

std::vector<RawDocument> generate_documents(const SynthSpec& spec) {
  spec.validate();
  std::mt19937_64 rng(spec.seed);
  std::bernoulli_distribution from_topic(spec.topic_word_prob);
  std::uniform_int_distribution<std::size_t> topic_pick(0, spec.topic_vocab_size - 1);
  std::uniform_int_distribution<std::size_t> shared_pick(0, spec.shared_vocab_size - 1);

  std::vector<RawDocument> docs;
  docs.reserve(spec.n_topics * spec.docs_per_topic);
  char id[32];
  for (std::size_t t = 0; t < spec.n_topics; ++t) {
    for (std::size_t d = 0; d < spec.docs_per_topic; ++d) {
      std::string text;
      const auto sentences = draw(rng, spec.sentences_per_doc);
      for (std::size_t s = 0; s < sentences; ++s) {
        const auto len = draw(rng, spec.sentence_len);
        for (std::size_t w = 0; w < len; ++w) {
          auto word = from_topic(rng) ? topic_word(t, topic_pick(rng)) : shared_word(shared_pick(rng));
          if (w == 0) word[0] = static_cast<char>(word[0] - 'a' + 'A');
          text += word;
          text += (w + 1 == len) ? ". " : " ";
        }
      }
      text.back() = '\n';
      std::snprintf(id, sizeof id, "_doc%03zu", d);
      auto label = topic_label(t);
      docs.push_back({label + id, label, std::move(text)});
    }
  }
  return docs;
}

Corpus generate_corpus(const SynthSpec& spec, const Stoplist& stoplist) {
  return build_corpus(generate_documents(spec), stoplist);
}

}  // namespace depclust
