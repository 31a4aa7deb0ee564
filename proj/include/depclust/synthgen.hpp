#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "depclust/text.hpp"

namespace depclust {

struct CountRange {
  std::size_t min = 1;
  std::size_t max = 1;
};

/// Token-level topic mixture: each token comes from the document's topic
/// vocabulary with probability topic_word_prob, otherwise from a vocabulary
/// shared by all topics. Topic vocabularies are disjoint.
struct SynthSpec {
  std::size_t n_topics = 4;
  std::size_t docs_per_topic = 25;
  std::size_t topic_vocab_size = 200;
  std::size_t shared_vocab_size = 50;
  CountRange sentence_len{3, 6};
  CountRange sentences_per_doc{2, 3};
  double topic_word_prob = 0.7;
  std::uint64_t seed = 0;

  void validate() const;
};

std::string topic_label(std::size_t topic);
std::string topic_word(std::size_t topic, std::size_t index);
std::string shared_word(std::size_t index);

/// Documents ordered by topic then index; doc_id is <label>_doc<index>.
std::vector<RawDocument> generate_documents(const SynthSpec& spec);
Corpus generate_corpus(const SynthSpec& spec, const Stoplist& stoplist = default_stoplist());

}  // namespace depclust
