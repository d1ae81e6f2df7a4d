#ifndef SCREENPARSE_CHUNKER_HPP_
#define SCREENPARSE_CHUNKER_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "screenparse/channel.hpp"

namespace screenparse {

/// Flat chunk of words sharing one abstract category.
struct PhraseGroup {
  std::vector<TaggedWord> words;
  std::string abstract_;
  std::pair<std::size_t, std::size_t> span{0, 0};  // first and last position
  std::string lexical_start;                        // case-folded first surface

  explicit PhraseGroup(TaggedWord first);
  PhraseGroup() = default;

  void append(TaggedWord word);
  const TaggedWord& first() const { return words.front(); }

  friend bool operator==(const PhraseGroup&, const PhraseGroup&) = default;
};

/// True if `word` must open a new group after `current`: it is marked as a
/// phrase start or its abstract category differs from the group's.
bool opens_group(const PhraseGroup& current, const TaggedWord& word);

/// Groups a tag stream: a group opens at the first word, at every phrase
/// start, and at every change of abstract category.
std::vector<PhraseGroup> chunk(std::span<const TaggedWord> tagged);

class IncrementalChunker {
 public:
  /// Adds the next word; returns the previous group if this word closed it.
  /// Throws std::invalid_argument for out-of-order positions.
  std::optional<PhraseGroup> push(TaggedWord word);
  /// Releases the open group, if any, and resets the chunker.
  std::optional<PhraseGroup> flush();

  bool has_open_group() const { return open_.has_value(); }

 private:
  std::optional<PhraseGroup> open_;
  std::optional<std::size_t> last_position_;
};

}  // namespace screenparse

#endif  // SCREENPARSE_CHUNKER_HPP_
