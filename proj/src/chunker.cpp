#include "screenparse/chunker.hpp"

#include <stdexcept>

namespace screenparse {

PhraseGroup::PhraseGroup(TaggedWord first)
    : abstract_(first.abstract_),
      span{first.position(), first.position()},
      lexical_start(case_fold(first.token.surface)) {
  words.push_back(std::move(first));
}

void PhraseGroup::append(TaggedWord word) {
  span.second = word.position();
  words.push_back(std::move(word));
}

bool opens_group(const PhraseGroup& current, const TaggedWord& word) {
  return word.phrase_start || word.abstract_ != current.abstract_;
}

std::vector<PhraseGroup> chunk(std::span<const TaggedWord> tagged) {
  std::vector<PhraseGroup> groups;
  for (std::size_t i = 0; i < tagged.size(); ++i) {
    if (i > 0 && tagged[i].position() <= tagged[i - 1].position())
      throw std::invalid_argument("chunk: positions must be strictly increasing");
    if (groups.empty() || opens_group(groups.back(), tagged[i]))
      groups.emplace_back(tagged[i]);
    else
      groups.back().append(tagged[i]);
  }
  return groups;
}

std::optional<PhraseGroup> IncrementalChunker::push(TaggedWord word) {
  if (last_position_ && word.position() <= *last_position_)
    throw std::invalid_argument("chunker: word at position " +
                                std::to_string(word.position()) + " arrived after position " +
                                std::to_string(*last_position_));
  last_position_ = word.position();
  if (!open_) {
    open_.emplace(std::move(word));
    return std::nullopt;
  }
  if (!opens_group(*open_, word)) {
    open_->append(std::move(word));
    return std::nullopt;
  }
  PhraseGroup closed = std::move(*open_);
  open_.emplace(std::move(word));
  return closed;
}

std::optional<PhraseGroup> IncrementalChunker::flush() {
  std::optional<PhraseGroup> out = std::move(open_);
  open_.reset();
  last_position_.reset();
  return out;
}

}  // namespace screenparse
