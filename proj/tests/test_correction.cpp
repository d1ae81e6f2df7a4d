#include <gtest/gtest.h>

#include <algorithm>

#include "screenparse/correction.hpp"
#include "support.hpp"

namespace screenparse {
namespace {

using testing::stream;
using testing::word;

std::vector<std::size_t> deleted_by_pause(const std::vector<RepairEvent>& events) {
  std::vector<std::size_t> out;
  for (const auto& e : events)
    if (e.kind == RepairKind::PauseDeletion) out.push_back(e.removed_span.first);
  return out;
}

PhraseGroup group_of(std::initializer_list<testing::Row> rows, std::size_t first_pos) {
  auto words = stream(rows);
  for (auto& w : words) w.token.position += first_pos;
  PhraseGroup g(words.front());
  for (std::size_t i = 1; i < words.size(); ++i) g.append(words[i]);
  return g;
}

TEST(Detectors, IsPause) {
  EXPECT_TRUE(is_pause(Token(".", 0)));
  EXPECT_FALSE(is_pause(Token("train", 0)));
  EXPECT_FALSE(is_pause(Token("[eh]", 0)));
}

TEST(Detectors, IsInterjection) {
  EXPECT_TRUE(is_interjection(Token("[eh]", 0)));
  EXPECT_TRUE(is_interjection(word("[u]", 0, "A", "SG", true)));
  EXPECT_FALSE(is_interjection(word("Yeah", 0, "A", "MG", true)));
  EXPECT_TRUE(is_interjection(word("uh", 0, "I", "IG", true)));
  EXPECT_FALSE(is_interjection(Token(".", 0)));
}

TEST(Detectors, PauseErrorIgnoresTags) {
  const auto ev = pause_error(word("[u]", 7, "A", "SG", true));
  ASSERT_TRUE(ev.has_value());
  EXPECT_EQ(ev->kind, RepairKind::PauseDeletion);
  EXPECT_EQ(ev->removed_span, (Span{7, 7}));
  EXPECT_FALSE(ev->kept_span.has_value());
  EXPECT_FALSE(pause_error(word("train", 3, "-", "IG", true)).has_value());
}

TEST(Detectors, WordEquality) {
  const auto monday = word("Monday", 0, "N", "PG", false);
  EXPECT_TRUE(word_equal_lex(monday, word("monday", 1, "N", "PG", false)));
  const auto from = word("from", 0, "R", "PG", true);
  const auto to = word("to", 1, "R", "PG", true);
  EXPECT_FALSE(word_equal_lex(from, to));
  EXPECT_TRUE(word_equal_bas(from, to));
  const auto train = word("train", 0, "N", "NG", false);
  const auto regensburg = word("Regensburg", 1, "N", "PG", false);
  EXPECT_FALSE(word_equal_lex(train, regensburg));
  EXPECT_TRUE(word_equal_bas(train, regensburg));
}

TEST(PauseDeletion, RepairSentenceDeletions) {
  const auto result = correct(testing::repair_stream());
  const std::vector<std::size_t> expected{3, 4, 7, 12, 15, 16, 17, 18, 21};
  EXPECT_EQ(deleted_by_pause(result.events), expected);
}

TEST(PauseDeletion, NoPausesNoEvents) {
  const auto words = stream({{"a", "D", "NG", true}, {"train", "N", "NG", false}});
  EXPECT_TRUE(correct(words).events.empty());
}

TEST(PauseDeletion, ConsecutivePausesOneEventEach) {
  const auto words = stream({{"a", "D", "NG", true},
                             {".", "-", "IG", true},
                             {".", "-", "IG", true},
                             {"[eh]", "I", "IG", true},
                             {"train", "N", "NG", false}});
  const auto result = correct(words);
  EXPECT_EQ(deleted_by_pause(result.events), (std::vector<std::size_t>{1, 2, 3}));
  ASSERT_EQ(result.groups.size(), 1u);
  EXPECT_EQ(result.groups[0].words.size(), 2u);
}

TEST(WordRepair, RepeatedWordDropsEarlier) {
  const auto words = stream(
      {{"the", "D", "NG", true}, {"the", "D", "NG", true}, {"train", "N", "NG", false}});
  const auto result = correct(words);
  ASSERT_EQ(result.events.size(), 1u);
  EXPECT_EQ(result.events[0].kind, RepairKind::WordRepair);
  EXPECT_EQ(result.events[0].removed_span, (Span{0, 0}));
  EXPECT_EQ(result.events[0].kept_span, (Span{1, 1}));
  EXPECT_EQ(surviving_positions(result.groups), (std::vector<std::size_t>{1, 2}));
}

TEST(WordRepair, CategoryEqualityAloneNeverTriggers) {
  const auto words = stream({{"from", "R", "PG", true},
                             {"Regensburg", "N", "PG", false},
                             {"to", "R", "PG", true},
                             {"Dortmund", "N", "PG", false}});
  EXPECT_FALSE(word_error(words[0], words[2]).has_value());
  EXPECT_TRUE(correct(words).events.empty());
}

TEST(WordRepair, RepeatAcrossPause) {
  const auto words = stream({{"the", "D", "NG", true},
                             {".", "-", "IG", true},
                             {"the", "D", "NG", true},
                             {"train", "N", "NG", false}});
  const auto result = correct(words);
  EXPECT_EQ(surviving_positions(result.groups), (std::vector<std::size_t>{2, 3}));
}

TEST(WordRepair, AtMondayAtMondayIsNotWordLevel) {
  const auto words = stream({{"at", "R", "PG", true},
                             {"Monday", "N", "PG", false},
                             {"at", "R", "PG", true},
                             {"Monday", "N", "PG", false}});
  EXPECT_FALSE(word_error(words[1], words[2]).has_value());
  const auto result = correct(words);
  ASSERT_EQ(result.events.size(), 1u);
  EXPECT_EQ(result.events[0].kind, RepairKind::PhraseRepair);
}

TEST(WordFilter, PassesWordsAtOnce) {
  const auto words = stream({{"the", "D", "NG", true},
                             {"the", "D", "NG", true},
                             {"[eh]", "I", "IG", true},
                             {"train", "N", "NG", false},
                             {"train", "N", "NG", false}});
  WordFilter filter;
  std::vector<FilteredWord> out;
  for (const auto& w : words)
    if (auto passed = filter.push(w)) out.push_back(*passed);
  ASSERT_EQ(out.size(), 4u);
  EXPECT_EQ(out[0].word.position(), 0u);
  EXPECT_FALSE(out[0].drops_previous.has_value());
  EXPECT_EQ(out[1].drops_previous, std::optional<std::size_t>(0));
  EXPECT_FALSE(out[2].drops_previous.has_value());
  EXPECT_EQ(out[3].drops_previous, std::optional<std::size_t>(3));
  auto events = filter.take_events();
  std::stable_sort(events.begin(), events.end(), event_order);
  EXPECT_EQ(events, correct(words).events);
}

TEST(WordRepair, RepeatedOpenerLeavesNoPhraseEvent) {
  const auto words = stream({{"to", "R", "PG", true},
                             {"to", "R", "PG", true},
                             {"Bonn", "N", "PG", false}});
  const auto result = correct(words);
  ASSERT_EQ(result.events.size(), 1u);
  EXPECT_EQ(result.events[0].kind, RepairKind::WordRepair);
  EXPECT_EQ(result.chunks.size(), 2u);
  EXPECT_EQ(surviving_positions(result.groups), (std::vector<std::size_t>{1, 2}));
}

TEST(WordRepair, InsideReparandumGroup) {
  const auto words = stream({{"at", "R", "PG", true},
                             {"at", "R", "PG", false},
                             {"Monday", "N", "PG", false},
                             {"at", "R", "PG", true},
                             {"Monday", "N", "PG", false}});
  const auto result = correct(words);
  ASSERT_EQ(result.events.size(), 2u);
  EXPECT_EQ(result.events[0].kind, RepairKind::WordRepair);
  EXPECT_EQ(result.events[1].kind, RepairKind::PhraseRepair);
  EXPECT_EQ(result.events[1].removed_span, (Span{1, 2}));
  EXPECT_EQ(result.events[1].kept_span, (Span{3, 4}));
}

TEST(WithoutPositions, StripsAndRecomputes) {
  PhraseGroup g(word("the", 4, "D", "NG", true));
  g.append(word("The", 5, "D", "NG", false));
  g.append(word("train", 6, "N", "NG", false));
  const auto stripped = without_positions(g, {4});
  ASSERT_TRUE(stripped.has_value());
  EXPECT_EQ(stripped->span, (Span{5, 6}));
  EXPECT_EQ(stripped->lexical_start, "the");
  EXPECT_FALSE(without_positions(g, {4, 5, 6}).has_value());
}

TEST(PhraseRepair, FiresOnSameLabelAndStart) {
  const auto prev = group_of({{"at", "R", "PG", true}, {"Monday", "N", "PG", false}}, 13);
  const auto cur = group_of({{"at", "R", "PG", true}, {"Monday", "N", "PG", false}}, 19);
  const auto ev = phrase_error(prev, cur);
  ASSERT_TRUE(ev.has_value());
  EXPECT_EQ(ev->removed_span, (Span{13, 14}));
  EXPECT_EQ(ev->kept_span, (Span{19, 20}));
  EXPECT_EQ(ev->evidence, (std::vector<std::string>{"lex-start-eq", "abs-syn-eq"}));
}

TEST(PhraseRepair, DifferentStartRefused) {
  const auto prev = group_of({{"from", "R", "PG", true}, {"Regensburg", "N", "PG", false}}, 5);
  const auto cur = group_of({{"to", "R", "PG", true}, {"Dortmund", "N", "PG", false}}, 7);
  EXPECT_TRUE(abs_syn_equal(prev, cur));
  EXPECT_FALSE(lex_start_equal(prev, cur));
  EXPECT_FALSE(phrase_error(prev, cur).has_value());
}

TEST(PhraseRepair, DifferentLabelRefused) {
  const auto prev = group_of({{"a", "D", "NG", true}, {"train", "N", "NG", false}}, 0);
  const auto cur = group_of({{"a", "D", "PG", true}, {"train", "N", "PG", false}}, 2);
  EXPECT_TRUE(lex_start_equal(prev, cur));
  EXPECT_FALSE(phrase_error(prev, cur).has_value());
}

TEST(PhraseRepair, NonAdjacentRefused) {
  const auto words = stream({{"not", "A", "SG", true},
                             {"after", "R", "PG", true},
                             {".", "-", "IG", true},
                             {"not", "A", "SG", true},
                             {"before", "R", "PG", true},
                             {"nine", "M", "PG", false}});
  const auto result = correct(words);
  for (const auto& e : result.events) EXPECT_EQ(e.kind, RepairKind::PauseDeletion);
  EXPECT_EQ(surviving_positions(result.groups), (std::vector<std::size_t>{0, 1, 3, 4, 5}));
}

TEST(PhraseRepair, RepairSentence) {
  const auto result = correct(testing::repair_stream());
  std::vector<RepairEvent> phrase;
  for (const auto& e : result.events)
    if (e.kind == RepairKind::PhraseRepair) phrase.push_back(e);
  ASSERT_EQ(phrase.size(), 1u);
  EXPECT_EQ(phrase[0].removed_span, (Span{13, 14}));
  EXPECT_EQ(phrase[0].kept_span, (Span{19, 22}));
  EXPECT_EQ(surviving_positions(result.groups),
            (std::vector<std::size_t>{0, 1, 2, 5, 6, 8, 9, 10, 11, 19, 20, 22}));
}

TEST(PhraseRepair, SampleSentenceHasOnlyThePause) {
  const auto result = correct(testing::sample_stream());
  ASSERT_EQ(result.events.size(), 1u);
  EXPECT_EQ(result.events[0].kind, RepairKind::PauseDeletion);
  EXPECT_EQ(result.events[0].removed_span, (Span{11, 11}));
}

TEST(PhraseRepair, CascadeKeepsLast) {
  const auto words = stream({{"at", "R", "PG", true},
                             {"nine", "M", "PG", false},
                             {"at", "R", "PG", true},
                             {"ten", "M", "PG", false},
                             {"at", "R", "PG", true},
                             {"eleven", "M", "PG", false}});
  const auto result = correct(words);
  EXPECT_EQ(surviving_positions(result.groups), (std::vector<std::size_t>{4, 5}));
  EXPECT_EQ(result.events.size(), 2u);
}

TEST(PhraseRepair, RequiresBothConditions) {
  Rng rng(31);
  const std::vector<std::string> labels{"NG", "PG"};
  const std::vector<std::string> starts{"at", "to", "At"};
  for (int trial = 0; trial < 2000; ++trial) {
    PhraseGroup prev(word(starts[rng.below(3)], 0, "R", labels[rng.below(2)], true));
    PhraseGroup cur(word(starts[rng.below(3)], 1, "R", labels[rng.below(2)], true));
    const bool fired = phrase_error(prev, cur).has_value();
    const bool both = prev.abstract_ == cur.abstract_ &&
                      case_fold(prev.first().token.surface) == case_fold(cur.first().token.surface);
    EXPECT_EQ(fired, both);
  }
}

/// Surviving words with the group structure made explicit: every group
/// opens with a phrase start, every other word continues.
std::vector<TaggedWord> restream(const std::vector<PhraseGroup>& groups) {
  std::vector<TaggedWord> out;
  for (const auto& g : groups)
    for (std::size_t i = 0; i < g.words.size(); ++i) {
      out.push_back(g.words[i]);
      out.back().phrase_start = i == 0;
    }
  return out;
}

TEST(Correction, IdempotentAndSubsequence) {
  Rng rng(8);
  const std::vector<std::string> labels{"NG", "PG", "IG"};
  const std::vector<std::string> surfaces{"at", "Monday", ".", "[eh]", "a"};
  for (int trial = 0; trial < 2000; ++trial) {
    const auto words = testing::random_stream(rng, rng.below(20), labels, surfaces);
    const auto once = correct(words);
    const auto survivors = restream(once.groups);
    const auto twice = correct(survivors);
    EXPECT_TRUE(twice.events.empty());
    EXPECT_EQ(twice.groups.size(), once.groups.size());
    EXPECT_EQ(surviving_positions(twice.groups), surviving_positions(once.groups));
    std::size_t j = 0;
    for (const auto& w : words)
      if (j < survivors.size() && survivors[j].token == w.token) ++j;
    EXPECT_EQ(j, survivors.size());
  }
}

TEST(RepairKind, StringRoundTrip) {
  for (auto k : {RepairKind::PauseDeletion, RepairKind::WordRepair, RepairKind::PhraseRepair})
    EXPECT_EQ(repair_kind_from_string(to_string(k)), k);
  EXPECT_THROW(repair_kind_from_string("Other"), std::invalid_argument);
}

}  // namespace
}  // namespace screenparse
