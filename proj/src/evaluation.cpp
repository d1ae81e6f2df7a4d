#include "screenparse/evaluation.hpp"

#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "screenparse/pipeline.hpp"

namespace screenparse {

namespace {

Metrics evaluate_utterance(CategoryChannel& channel, const AnnotatedUtterance& utterance) {
  Metrics m;
  channel.reset();
  for (const auto& gold : utterance.tokens) {
    const TaggedWord w = channel.tag_word(gold.token);
    const bool basic_ok = w.basic == gold.basic;
    const bool abstract_ok = w.abstract_ == gold.abstract_;
    m.basic.correct += basic_ok;
    m.abstract_.correct += abstract_ok;
    m.start.correct += w.phrase_start == gold.start;
    m.combined.correct += basic_ok && abstract_ok;
    ++m.basic.total;
    ++m.abstract_.total;
    ++m.start.total;
    ++m.combined.total;
  }
  channel.reset();
  return m;
}

}  // namespace

Metrics& operator+=(Metrics& lhs, const Metrics& rhs) {
  for (auto [l, r] : {std::pair{&lhs.basic, &rhs.basic}, std::pair{&lhs.abstract_, &rhs.abstract_},
                      std::pair{&lhs.start, &rhs.start}, std::pair{&lhs.combined, &rhs.combined}}) {
    l->correct += r->correct;
    l->total += r->total;
  }
  return lhs;
}

Metrics evaluate(const CategoryChannel& channel, const std::vector<AnnotatedUtterance>& corpus) {
  CategoryChannel work = channel;
  Metrics total;
  for (const auto& utterance : corpus) total += evaluate_utterance(work, utterance);
  return total;
}

InterpretationScore overall_interpretation_rate(
    const std::vector<UtteranceAnalysis>& analyses,
    const std::vector<std::optional<std::vector<std::size_t>>>& gold) {
  if (analyses.size() != gold.size())
    throw std::invalid_argument("analyses and gold sets differ in length");
  InterpretationScore score;
  for (std::size_t i = 0; i < analyses.size(); ++i) {
    if (!gold[i]) {
      ++score.skipped;
      continue;
    }
    ++score.scored;
    score.correct += analyses[i].surviving == *gold[i];
  }
  if (score.scored == 0)
    throw std::invalid_argument("no utterance with a gold surviving set to score");
  return score;
}

std::vector<UtteranceAnalysis> interpret_corpus(const CategoryChannel& channel,
                                                const std::vector<AnnotatedUtterance>& corpus,
                                                const SlotPolicy& policy) {
  CategoryChannel work = channel;
  std::vector<UtteranceAnalysis> out;
  out.reserve(corpus.size());
  for (const auto& u : corpus) {
    const auto tokens = u.plain_tokens();
    out.push_back(analyze_batch(work, tokens, policy));
  }
  return out;
}

void write_metrics_table(std::ostream& out, const std::vector<std::string>& column_names,
                         const std::vector<Metrics>& columns, const ChannelShape& shape) {
  const auto& basic = basic_syntactic_inventory();
  const auto& abstract_ = abstract_syntactic_inventory();
  char buf[128];
  std::snprintf(buf, sizeof buf, "%-16s %4s %4s %4s", "Module", "I", "H", "O");
  out << buf;
  for (const auto& name : column_names) {
    std::snprintf(buf, sizeof buf, " %9s", name.c_str());
    out << buf;
  }
  out << '\n';

  struct Row {
    const char* name;
    std::size_t i, h, o;
    const Accuracy Metrics::*field;
  };
  const Row rows[] = {
      {"disambiguator", basic.width(), shape.disambiguator_hidden, basic.width(), &Metrics::basic},
      {"abstractor", basic.width(), shape.abstractor_hidden, abstract_.width(),
       &Metrics::abstract_},
      {"starter", basic.width(), shape.starter_hidden, 1, &Metrics::start},
      {"combined", 0, 0, 0, &Metrics::combined},
  };
  for (const auto& row : rows) {
    if (row.i)
      std::snprintf(buf, sizeof buf, "%-16s %4zu %4zu %4zu", row.name, row.i, row.h, row.o);
    else
      std::snprintf(buf, sizeof buf, "%-16s %4s %4s %4s", row.name, "-", "-", "-");
    out << buf;
    for (const auto& m : columns) {
      std::snprintf(buf, sizeof buf, " %8.1f%%", (m.*row.field).percent());
      out << buf;
    }
    out << '\n';
  }
}

}  // namespace screenparse
