#ifndef SCREENPARSE_CORRECTION_HPP_
#define SCREENPARSE_CORRECTION_HPP_

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "screenparse/channel.hpp"
#include "screenparse/chunker.hpp"

namespace screenparse {

enum class RepairKind { PauseDeletion, WordRepair, PhraseRepair };

std::string_view to_string(RepairKind kind);
RepairKind repair_kind_from_string(std::string_view text);

using Span = std::pair<std::size_t, std::size_t>;

struct RepairEvent {
  RepairKind kind = RepairKind::PauseDeletion;
  Span removed_span{0, 0};
  std::optional<Span> kept_span;
  std::vector<std::string> evidence;

  friend bool operator==(const RepairEvent&, const RepairEvent&) = default;
};

/// Orders events by removed position, then kind.
bool event_order(const RepairEvent& a, const RepairEvent& b);

// Detector names reported as evidence.
inline constexpr std::string_view kPauseDetector = "pause";
inline constexpr std::string_view kInterjectionDetector = "interjection";
inline constexpr std::string_view kLexWordDetector = "lex-word-eq";
inline constexpr std::string_view kBasWordDetector = "bas-syn-eq";
inline constexpr std::string_view kLexStartDetector = "lex-start-eq";
inline constexpr std::string_view kAbsGroupDetector = "abs-syn-eq";

// Sub-word detectors.
bool is_pause(const Token& token);
/// Bracketed input, or a word whose basic tag is the interjection category.
bool is_interjection(const Token& token, std::string_view basic_tag = {});
bool is_interjection(const TaggedWord& word);

/// Deletion event for pauses, interjections and unknown vocal input. Looks
/// only at the two sub-word detectors, never at other tags.
std::optional<RepairEvent> pause_error(const TaggedWord& word);

// Word-level detectors and repair.
bool word_equal_lex(const TaggedWord& prev, const TaggedWord& cur);
bool word_equal_bas(const TaggedWord& prev, const TaggedWord& cur);
/// Drops the earlier of two adjacent words iff they are lexically equal.
std::optional<RepairEvent> word_error(const TaggedWord& prev, const TaggedWord& cur);

// Group-level detectors and repair.
bool lex_start_equal(const PhraseGroup& prev, const PhraseGroup& cur);
bool abs_syn_equal(const PhraseGroup& prev, const PhraseGroup& cur);
/// Drops `prev` iff both groups share the abstract category and the
/// lexical start. Both groups must be adjacent after pause deletion.
std::optional<RepairEvent> phrase_error(const PhraseGroup& prev, const PhraseGroup& cur);

/// A word that survived pause deletion. `drops_previous` names the earlier
/// surviving word when this one repeats it.
struct FilteredWord {
  TaggedWord word;
  std::optional<std::size_t> drops_previous;

  friend bool operator==(const FilteredWord&, const FilteredWord&) = default;
};

/// Incremental pause filter plus word repair. Every non-pause word passes
/// through at once; a repetition marks its predecessor for removal.
class WordFilter {
 public:
  std::optional<FilteredWord> push(TaggedWord word);
  const std::vector<RepairEvent>& events() const { return events_; }
  std::vector<RepairEvent> take_events();

 private:
  std::optional<TaggedWord> last_;
  std::vector<RepairEvent> events_;
};

/// Copy of `group` without the words at `removed`; none if nothing is left.
std::optional<PhraseGroup> without_positions(const PhraseGroup& group,
                                             const std::set<std::size_t>& removed);

/// Incremental phrase repair over finalized groups with word-repaired words
/// already stripped. Each group is held until the next group finalizes and
/// is then either released or dropped as a reparandum.
class PhraseCorrector {
 public:
  std::vector<PhraseGroup> push(PhraseGroup group);
  std::vector<PhraseGroup> flush();
  const std::vector<RepairEvent>& events() const { return events_; }
  std::vector<RepairEvent> take_events();

 private:
  std::vector<RepairEvent> events_;
  std::optional<PhraseGroup> held_;
};

/// Whole-utterance correction, computed without the incremental machinery:
/// pause deletion, chunking of what is left, word repair inside the chunks,
/// then phrase repair between consecutive chunks that still hold words.
struct CorrectionResult {
  std::vector<TaggedWord> filtered;    // after pause deletion and word repair
  std::vector<PhraseGroup> chunks;     // chunks of the pause-filtered stream
  std::vector<PhraseGroup> groups;     // surviving groups after both repairs
  std::vector<RepairEvent> events;     // ordered by event_order
};

CorrectionResult correct(std::span<const TaggedWord> tagged);

/// Positions of all words in `groups`, in order.
std::vector<std::size_t> surviving_positions(std::span<const PhraseGroup> groups);

}  // namespace screenparse

#endif  // SCREENPARSE_CORRECTION_HPP_
