#ifndef SCREENPARSE_EVALUATION_HPP_
#define SCREENPARSE_EVALUATION_HPP_

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "screenparse/caseframe.hpp"
#include "screenparse/channel.hpp"
#include "screenparse/corpus.hpp"

namespace screenparse {

struct Accuracy {
  std::size_t correct = 0;
  std::size_t total = 0;
  double rate() const { return total ? static_cast<double>(correct) / total : 0.0; }
  double percent() const { return 100.0 * rate(); }
};

/// Per-word accuracies of one channel on an annotated corpus. Words are
/// tagged along the inference path, so the abstractor and starter see the
/// predicted basic category.
struct Metrics {
  Accuracy basic;
  Accuracy abstract_;
  Accuracy start;
  /// A word counts only if both the basic and the abstract category are
  /// argmax-correct.
  Accuracy combined;
};

/// Never touches the caller's channel; tagging runs on a copy.
Metrics evaluate(const CategoryChannel& channel, const std::vector<AnnotatedUtterance>& corpus);

/// Merges per-utterance counts; order-independent.
Metrics& operator+=(Metrics& lhs, const Metrics& rhs);

struct InterpretationScore {
  std::size_t correct = 0;
  std::size_t scored = 0;
  std::size_t skipped = 0;  // utterances without a gold surviving set
  double rate() const { return scored ? static_cast<double>(correct) / scored : 0.0; }
  double percent() const { return 100.0 * rate(); }
};

/// Fraction of utterances whose surviving set equals the gold set exactly.
/// Throws std::invalid_argument when nothing can be scored.
InterpretationScore overall_interpretation_rate(
    const std::vector<UtteranceAnalysis>& analyses,
    const std::vector<std::optional<std::vector<std::size_t>>>& gold);

/// Analyses every corpus utterance (batch path) on a copy of the channel.
std::vector<UtteranceAnalysis> interpret_corpus(const CategoryChannel& channel,
                                                const std::vector<AnnotatedUtterance>& corpus,
                                                const SlotPolicy& policy = {});

/// Four-row table: the three nets and Combined, one column per corpus.
void write_metrics_table(std::ostream& out, const std::vector<std::string>& column_names,
                         const std::vector<Metrics>& columns, const ChannelShape& shape = {});

}  // namespace screenparse

#endif  // SCREENPARSE_EVALUATION_HPP_
