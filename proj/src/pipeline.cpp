#include "screenparse/pipeline.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace screenparse {

std::string_view to_string(Stage stage) {
  switch (stage) {
    case Stage::Tagged: return "Tagged";
    case Stage::Filtered: return "Filtered";
    case Stage::Chunked: return "Chunked";
    case Stage::Corrected: return "Corrected";
    case Stage::Framed: return "Framed";
  }
  return "Tagged";
}

namespace {

std::string words_of(const PhraseGroup& g) {
  std::string s;
  for (const auto& w : g.words) {
    if (!s.empty()) s += ' ';
    s += w.token.surface;
  }
  return s;
}

}  // namespace

std::string Hypothesis::summary() const {
  std::ostringstream out;
  if (const auto* w = std::get_if<TaggedWord>(&payload)) {
    out << w->token.surface << ' ' << w->basic << ' ' << w->abstract_ << ' '
        << (w->phrase_start ? "start" : "cont");
  } else if (const auto* g = std::get_if<PhraseGroup>(&payload)) {
    out << g->abstract_ << " [" << words_of(*g) << "]";
  } else if (const auto* f = std::get_if<FramedGroup>(&payload)) {
    out << "frame " << f->placement.frame << ' '
        << (f->placement.slot ? f->placement.slot->key : std::string("verb")) << " ["
        << words_of(f->group) << "]";
    if (f->placement.slot && f->placement.slot->incompatible) out << " incompatible";
  }
  return out.str();
}

bool hypothesis_order(const Hypothesis& a, const Hypothesis& b) {
  if (a.position != b.position) return a.position < b.position;
  return static_cast<int>(a.stage) < static_cast<int>(b.stage);
}

Pipeline::Pipeline(CategoryChannel channel, SlotPolicy policy)
    : channel_(std::move(channel)), policy_(policy), frames_(std::move(policy)) {
  channel_.reset();
}

void Pipeline::submit(const Token& token) {
  if (token.position != tokens_.size())
    throw std::invalid_argument("pipeline: expected token at position " +
                                std::to_string(tokens_.size()) + ", got " +
                                std::to_string(token.position));
  tokens_.push_back(token);
  filter_inbox_.emplace_back();
  chunk_inbox_.emplace_back();
  correct_inbox_.emplace_back();
  frame_inbox_.emplace_back();
}

bool Pipeline::ready(Stage stage, std::size_t position) const {
  const auto s = static_cast<std::size_t>(stage);
  if (position >= tokens_.size() || progress_[s] != position) return false;
  return s == 0 || progress_[s - 1] > position;
}

bool Pipeline::done(Stage stage, std::size_t position) const {
  return progress_[static_cast<std::size_t>(stage)] > position;
}

void Pipeline::emit(std::vector<Hypothesis>& out, Hypothesis h) {
  if (trace_)
    *trace_ << h.position << '\t' << to_string(h.stage) << '\t' << h.summary() << '\n';
  out.push_back(std::move(h));
}

void Pipeline::forward_closed(std::optional<PhraseGroup> closed, std::vector<Hypothesis>& out,
                              std::vector<PhraseGroup>& sink) {
  if (!closed) return;
  // Every reparandum inside the group is known once the group has closed.
  auto kept = without_positions(*closed, reparanda_);
  if (!kept) return;
  emit(out, {kept->span.first, Stage::Chunked, *kept});
  sink.push_back(std::move(*kept));
}

void Pipeline::feed_corrector(PhraseGroup group, std::vector<Hypothesis>& out,
                              std::vector<PhraseGroup>& sink) {
  for (auto& g : corrector_.push(std::move(group))) {
    emit(out, {g.span.first, Stage::Corrected, g});
    sink.push_back(std::move(g));
  }
}

void Pipeline::feed_frames(PhraseGroup group, std::vector<Hypothesis>& out) {
  Placement placement = frames_.add(group);
  const std::size_t first = group.span.first;
  groups_.push_back(group);
  emit(out, {first, Stage::Framed, FramedGroup{std::move(group), std::move(placement)}});
}

std::vector<Hypothesis> Pipeline::run(Stage stage, std::size_t position) {
  if (!ready(stage, position))
    throw std::logic_error("pipeline: stage " + std::string(to_string(stage)) +
                           " is not ready for position " + std::to_string(position));
  std::vector<Hypothesis> out;
  switch (stage) {
    case Stage::Tagged: {
      TaggedWord word = channel_.tag_word(tokens_[position]);
      tagged_.push_back(word);
      emit(out, {position, Stage::Tagged, word});
      filter_inbox_[position].push_back(std::move(word));
      break;
    }
    case Stage::Filtered:
      for (auto& word : filter_inbox_[position])
        if (auto passed = filter_.push(std::move(word))) {
          emit(out, {passed->word.position(), Stage::Filtered, passed->word});
          chunk_inbox_[position].push_back(std::move(*passed));
        }
      filter_inbox_[position].clear();
      break;
    case Stage::Chunked:
      for (auto& passed : chunk_inbox_[position]) {
        if (passed.drops_previous) reparanda_.insert(*passed.drops_previous);
        forward_closed(chunker_.push(std::move(passed.word)), out, correct_inbox_[position]);
      }
      chunk_inbox_[position].clear();
      break;
    case Stage::Corrected:
      for (auto& closed : correct_inbox_[position])
        feed_corrector(std::move(closed), out, frame_inbox_[position]);
      correct_inbox_[position].clear();
      break;
    case Stage::Framed:
      for (auto& group : frame_inbox_[position]) feed_frames(std::move(group), out);
      frame_inbox_[position].clear();
      break;
  }
  ++progress_[static_cast<std::size_t>(stage)];
  return out;
}

std::vector<Hypothesis> Pipeline::process_token(const Token& token) {
  submit(token);
  std::vector<Hypothesis> out;
  for (std::size_t s = 0; s < kStageCount; ++s) {
    auto produced = run(static_cast<Stage>(s), token.position);
    std::move(produced.begin(), produced.end(), std::back_inserter(out));
  }
  std::stable_sort(out.begin(), out.end(), hypothesis_order);
  return out;
}

std::vector<Hypothesis> Pipeline::process_token(std::string surface) {
  return process_token(Token(std::move(surface), tokens_.size()));
}

UtteranceAnalysis Pipeline::flush() {
  std::vector<Hypothesis> out;
  for (std::size_t s = 0; s < kStageCount; ++s)
    while (progress_[s] < tokens_.size()) run(static_cast<Stage>(s), progress_[s]);

  // End of utterance travels down the stages in order.
  std::vector<PhraseGroup> closed;
  forward_closed(chunker_.flush(), out, closed);
  std::vector<PhraseGroup> corrected;
  for (auto& c : closed) feed_corrector(std::move(c), out, corrected);
  for (auto& g : corrector_.flush()) {
    emit(out, {g.span.first, Stage::Corrected, g});
    corrected.push_back(std::move(g));
  }
  for (auto& g : corrected) feed_frames(std::move(g), out);

  AnalysisState state;
  state.tokens = std::move(tokens_);
  state.tagged = std::move(tagged_);
  state.groups = std::move(groups_);
  state.repairs = filter_.take_events();
  for (auto& e : corrector_.take_events()) state.repairs.push_back(std::move(e));
  state.frames = frames_.take_frames();
  reset_state();
  return interpret(std::move(state));
}

void Pipeline::reset_state() {
  channel_.reset();
  tokens_.clear();
  tagged_.clear();
  progress_.fill(0);
  filter_inbox_.clear();
  chunk_inbox_.clear();
  correct_inbox_.clear();
  frame_inbox_.clear();
  filter_ = WordFilter{};
  chunker_ = IncrementalChunker{};
  reparanda_.clear();
  corrector_ = PhraseCorrector{};
  frames_ = FrameBuilder(policy_);
  groups_.clear();
}

UtteranceAnalysis analyze_batch(CategoryChannel& channel, std::span<const Token> tokens,
                                const SlotPolicy& policy) {
  channel.reset();
  AnalysisState state;
  state.tokens.assign(tokens.begin(), tokens.end());
  for (const auto& t : tokens) state.tagged.push_back(channel.tag_word(t));
  channel.reset();
  CorrectionResult corrected = correct(state.tagged);
  state.frames = build_frames(corrected.groups, policy);
  state.groups = std::move(corrected.groups);
  state.repairs = std::move(corrected.events);
  return interpret(std::move(state));
}

UtteranceAnalysis analyze_incremental(Pipeline& pipeline, std::span<const Token> tokens) {
  for (const auto& t : tokens) pipeline.process_token(t);
  return pipeline.flush();
}

}  // namespace screenparse
