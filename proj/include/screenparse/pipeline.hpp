#ifndef SCREENPARSE_PIPELINE_HPP_
#define SCREENPARSE_PIPELINE_HPP_

#include <array>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "screenparse/caseframe.hpp"
#include "screenparse/channel.hpp"
#include "screenparse/chunker.hpp"
#include "screenparse/correction.hpp"

namespace screenparse {

enum class Stage { Tagged = 0, Filtered, Chunked, Corrected, Framed };
inline constexpr std::size_t kStageCount = 5;

std::string_view to_string(Stage stage);

struct FramedGroup {
  PhraseGroup group;
  Placement placement;
};

using HypothesisPayload = std::variant<TaggedWord, PhraseGroup, FramedGroup>;

/// One message between stages. For group payloads the position is the
/// group's first word.
struct Hypothesis {
  std::size_t position = 0;
  Stage stage = Stage::Tagged;
  HypothesisPayload payload;

  std::string summary() const;
};

/// Orders hypotheses by position, then stage.
bool hypothesis_order(const Hypothesis& a, const Hypothesis& b);

/// Incremental analysis of one utterance at a time.
///
/// Five stages (tag, pause/word filter, chunk, phrase correction, frame)
/// run per token position. Stage s at position p depends only on stage s-1
/// at p and stage s at p-1, so any executor honoring that order produces the
/// same result. process_token() runs all five stages for the new token;
/// submit()/run() expose the individual steps.
class Pipeline {
 public:
  explicit Pipeline(CategoryChannel channel, SlotPolicy policy = {});

  /// Token positions must continue the current utterance (0, 1, 2, ...).
  std::vector<Hypothesis> process_token(const Token& token);
  /// Wraps `surface` in a token at the next position.
  std::vector<Hypothesis> process_token(std::string surface);

  /// Finishes the utterance and resets every stage and the channel.
  UtteranceAnalysis flush();

  void submit(const Token& token);
  std::size_t submitted() const { return tokens_.size(); }
  bool ready(Stage stage, std::size_t position) const;
  bool done(Stage stage, std::size_t position) const;
  std::vector<Hypothesis> run(Stage stage, std::size_t position);

  /// Line per hypothesis: `pos<TAB>stage<TAB>summary`. Pass nullptr to stop.
  void set_trace(std::ostream* out) { trace_ = out; }

  const CategoryChannel& channel() const { return channel_; }

 private:
  void emit(std::vector<Hypothesis>& out, Hypothesis h);
  void forward_closed(std::optional<PhraseGroup> closed, std::vector<Hypothesis>& out,
                      std::vector<PhraseGroup>& sink);
  void feed_corrector(PhraseGroup group, std::vector<Hypothesis>& out,
                      std::vector<PhraseGroup>& sink);
  void feed_frames(PhraseGroup group, std::vector<Hypothesis>& out);
  void reset_state();

  CategoryChannel channel_;
  SlotPolicy policy_;
  std::ostream* trace_ = nullptr;

  std::vector<Token> tokens_;
  std::vector<TaggedWord> tagged_;
  std::array<std::size_t, kStageCount> progress_{};

  // Inboxes keyed by the position whose upstream step produced the items.
  std::vector<std::vector<TaggedWord>> filter_inbox_;
  std::vector<std::vector<FilteredWord>> chunk_inbox_;
  std::vector<std::vector<PhraseGroup>> correct_inbox_;
  std::vector<std::vector<PhraseGroup>> frame_inbox_;

  WordFilter filter_;
  IncrementalChunker chunker_;
  std::set<std::size_t> reparanda_;  // word-repaired positions
  PhraseCorrector corrector_;
  FrameBuilder frames_;
  std::vector<PhraseGroup> groups_;
};

/// Whole-utterance analysis computed directly from the batch operations.
/// Resets the channel before and after.
UtteranceAnalysis analyze_batch(CategoryChannel& channel, std::span<const Token> tokens,
                                const SlotPolicy& policy = {});

/// Token-at-a-time analysis through `pipeline`, then flush.
UtteranceAnalysis analyze_incremental(Pipeline& pipeline, std::span<const Token> tokens);

}  // namespace screenparse

#endif  // SCREENPARSE_PIPELINE_HPP_
