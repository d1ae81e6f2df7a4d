#include "screenparse/correction.hpp"

#include <algorithm>
#include <stdexcept>

namespace screenparse {

std::string_view to_string(RepairKind kind) {
  switch (kind) {
    case RepairKind::PauseDeletion: return "PauseDeletion";
    case RepairKind::WordRepair: return "WordRepair";
    case RepairKind::PhraseRepair: return "PhraseRepair";
  }
  return "PauseDeletion";
}

RepairKind repair_kind_from_string(std::string_view text) {
  if (text == "PauseDeletion") return RepairKind::PauseDeletion;
  if (text == "WordRepair") return RepairKind::WordRepair;
  if (text == "PhraseRepair") return RepairKind::PhraseRepair;
  throw std::invalid_argument("unknown repair kind: " + std::string(text));
}

bool event_order(const RepairEvent& a, const RepairEvent& b) {
  if (a.removed_span.first != b.removed_span.first)
    return a.removed_span.first < b.removed_span.first;
  return static_cast<int>(a.kind) < static_cast<int>(b.kind);
}

bool is_pause(const Token& token) { return token.kind == TokenKind::PauseMarker; }

bool is_interjection(const Token& token, std::string_view basic_tag) {
  return token.kind == TokenKind::Bracketed || basic_tag == basic::kInterjection;
}

bool is_interjection(const TaggedWord& word) {
  return is_interjection(word.token, word.basic);
}

std::optional<RepairEvent> pause_error(const TaggedWord& word) {
  const bool pause = is_pause(word.token);
  const bool interjection = is_interjection(word);
  if (!pause && !interjection) return std::nullopt;
  RepairEvent event{RepairKind::PauseDeletion, {word.position(), word.position()}, std::nullopt,
                    {}};
  if (pause) event.evidence.emplace_back(kPauseDetector);
  if (interjection) event.evidence.emplace_back(kInterjectionDetector);
  return event;
}

bool word_equal_lex(const TaggedWord& prev, const TaggedWord& cur) {
  return case_fold(prev.token.surface) == case_fold(cur.token.surface);
}

bool word_equal_bas(const TaggedWord& prev, const TaggedWord& cur) {
  return prev.basic == cur.basic;
}

std::optional<RepairEvent> word_error(const TaggedWord& prev, const TaggedWord& cur) {
  if (!word_equal_lex(prev, cur)) return std::nullopt;
  RepairEvent event{RepairKind::WordRepair,
                    {prev.position(), prev.position()},
                    Span{cur.position(), cur.position()},
                    {std::string(kLexWordDetector)}};
  if (word_equal_bas(prev, cur)) event.evidence.emplace_back(kBasWordDetector);
  return event;
}

bool lex_start_equal(const PhraseGroup& prev, const PhraseGroup& cur) {
  return prev.lexical_start == cur.lexical_start;
}

bool abs_syn_equal(const PhraseGroup& prev, const PhraseGroup& cur) {
  return prev.abstract_ == cur.abstract_;
}

std::optional<RepairEvent> phrase_error(const PhraseGroup& prev, const PhraseGroup& cur) {
  if (!abs_syn_equal(prev, cur) || !lex_start_equal(prev, cur)) return std::nullopt;
  return RepairEvent{RepairKind::PhraseRepair,
                     prev.span,
                     cur.span,
                     {std::string(kLexStartDetector), std::string(kAbsGroupDetector)}};
}

// ---------------------------------------------------------------------------

std::optional<FilteredWord> WordFilter::push(TaggedWord word) {
  if (auto deletion = pause_error(word)) {
    events_.push_back(std::move(*deletion));
    return std::nullopt;
  }
  FilteredWord out{word, std::nullopt};
  if (last_) {
    if (auto repair = word_error(*last_, word)) {
      events_.push_back(std::move(*repair));
      out.drops_previous = last_->position();
    }
  }
  last_ = std::move(word);
  return out;
}

std::vector<RepairEvent> WordFilter::take_events() {
  std::vector<RepairEvent> out;
  out.swap(events_);
  return out;
}

std::optional<PhraseGroup> without_positions(const PhraseGroup& group,
                                             const std::set<std::size_t>& removed) {
  std::optional<PhraseGroup> out;
  for (const auto& w : group.words) {
    if (removed.contains(w.position())) continue;
    if (out)
      out->append(w);
    else
      out.emplace(w);
  }
  return out;
}

std::vector<PhraseGroup> PhraseCorrector::push(PhraseGroup group) {
  std::vector<PhraseGroup> released;
  if (held_) {
    if (auto repair = phrase_error(*held_, group))
      events_.push_back(std::move(*repair));
    else
      released.push_back(std::move(*held_));
  }
  held_ = std::move(group);
  return released;
}

std::vector<PhraseGroup> PhraseCorrector::flush() {
  std::vector<PhraseGroup> released;
  if (held_) released.push_back(std::move(*held_));
  held_.reset();
  return released;
}

std::vector<RepairEvent> PhraseCorrector::take_events() {
  std::vector<RepairEvent> out;
  out.swap(events_);
  return out;
}

// ---------------------------------------------------------------------------

CorrectionResult correct(std::span<const TaggedWord> tagged) {
  CorrectionResult result;

  std::vector<TaggedWord> unpaused;
  for (const auto& word : tagged) {
    if (auto deletion = pause_error(word))
      result.events.push_back(std::move(*deletion));
    else
      unpaused.push_back(word);
  }

  std::set<std::size_t> reparanda;
  for (std::size_t i = 0; i < unpaused.size(); ++i) {
    if (i + 1 < unpaused.size()) {
      if (auto repair = word_error(unpaused[i], unpaused[i + 1])) {
        result.events.push_back(std::move(*repair));
        reparanda.insert(unpaused[i].position());
        continue;
      }
    }
    result.filtered.push_back(unpaused[i]);
  }

  result.chunks = chunk(unpaused);
  std::vector<PhraseGroup> remaining;
  for (const auto& c : result.chunks)
    if (auto g = without_positions(c, reparanda)) remaining.push_back(std::move(*g));

  for (std::size_t i = 0; i < remaining.size(); ++i) {
    if (i + 1 < remaining.size()) {
      if (auto repair = phrase_error(remaining[i], remaining[i + 1])) {
        result.events.push_back(std::move(*repair));
        continue;
      }
    }
    result.groups.push_back(remaining[i]);
  }

  std::stable_sort(result.events.begin(), result.events.end(), event_order);
  return result;
}

std::vector<std::size_t> surviving_positions(std::span<const PhraseGroup> groups) {
  std::vector<std::size_t> out;
  for (const auto& g : groups)
    for (const auto& w : g.words) out.push_back(w.position());
  return out;
}

}  // namespace screenparse
