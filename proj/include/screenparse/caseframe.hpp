#ifndef SCREENPARSE_CASEFRAME_HPP_
#define SCREENPARSE_CASEFRAME_HPP_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "screenparse/chunker.hpp"
#include "screenparse/correction.hpp"

namespace screenparse {

/// A phrase group placed in a frame slot. `group` indexes the analysis'
/// surviving group list.
struct SlotFill {
  std::string key;  // abstract label + "#" + 1-based ordinal, e.g. "PG#2"
  std::size_t group = 0;
  bool incompatible = false;

  friend bool operator==(const SlotFill&, const SlotFill&) = default;
};

struct Frame {
  std::size_t index = 0;
  std::optional<std::size_t> verb_group;
  std::vector<SlotFill> slots;

  friend bool operator==(const Frame&, const Frame&) = default;
};

/// Slot compatibility configuration. Groups whose abstract label is in the
/// blocklist are flagged; when a semantic label is available, the pair
/// (syntactic, semantic) must also appear in the compatibility table.
struct SlotPolicy {
  std::set<std::string> blocklist{std::string(group::kSpecial)};
  std::set<std::pair<std::string, std::string>> compatible;

  /// `SYN_LABEL<TAB>SEM_LABEL` per line, `#` comments.
  static std::set<std::pair<std::string, std::string>> load_compat_table(std::istream& in,
                                                                         const std::string& source);
  static std::set<std::pair<std::string, std::string>> load_compat_table(
      const std::filesystem::path& path);
};

/// Next free key for the group's abstract label in `frame`.
std::string find_slot(const Frame& frame, const PhraseGroup& group);

/// True when the proposed slot is not possible for the group.
bool slot_error(const SlotPolicy& policy, const PhraseGroup& group, std::string_view key,
                std::optional<std::string_view> semantic_label = std::nullopt);

/// True when the incoming group is a verb group and the frame already has one.
bool verb_error(const Frame& frame, const PhraseGroup& incoming);

/// Where FrameBuilder put a group.
struct Placement {
  std::size_t frame = 0;
  std::optional<SlotFill> slot;  // none: the group became the frame's verb group
};

/// Fills frames from corrected groups in arrival order.
class FrameBuilder {
 public:
  explicit FrameBuilder(SlotPolicy policy = {}) : policy_(std::move(policy)) {}

  Placement add(const PhraseGroup& group,
                std::optional<std::string_view> semantic_label = std::nullopt);
  const std::vector<Frame>& frames() const { return frames_; }
  std::vector<Frame> take_frames();
  const SlotPolicy& policy() const { return policy_; }

 private:
  SlotPolicy policy_;
  std::vector<Frame> frames_;
  std::size_t next_group_ = 0;
};

std::vector<Frame> build_frames(std::span<const PhraseGroup> groups,
                                const SlotPolicy& policy = {});

/// The fault-tolerant interpretation of one utterance.
struct UtteranceAnalysis {
  std::vector<Token> tokens;
  std::vector<std::size_t> surviving;  // positions of kept tokens
  std::vector<TaggedWord> tagged;
  std::vector<PhraseGroup> groups;     // after correction
  std::vector<RepairEvent> repairs;
  std::vector<Frame> frames;

  bool empty() const { return tokens.empty(); }
  friend bool operator==(const UtteranceAnalysis&, const UtteranceAnalysis&) = default;
};

/// Inputs gathered while an utterance is processed.
struct AnalysisState {
  std::vector<Token> tokens;
  std::vector<TaggedWord> tagged;
  std::vector<PhraseGroup> groups;
  std::vector<RepairEvent> repairs;
  std::vector<Frame> frames;
};

/// Converts the collected per-word state into the structured analysis:
/// events are put in canonical order and the surviving set is derived from
/// the corrected groups.
UtteranceAnalysis interpret(AnalysisState state);

/// Aligned table: surface, basic, abstract, start flag, kept/removed,
/// followed by repairs and frames.
void write_text(const UtteranceAnalysis& analysis, std::ostream& out);

}  // namespace screenparse

#endif  // SCREENPARSE_CASEFRAME_HPP_
