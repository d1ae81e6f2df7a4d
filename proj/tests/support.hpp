// Shared helpers and independent oracles for the test suites.
#ifndef SCREENPARSE_TESTS_SUPPORT_HPP_
#define SCREENPARSE_TESTS_SUPPORT_HPP_

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <string>
#include <vector>

#include "screenparse/channel.hpp"
#include "screenparse/chunker.hpp"
#include "screenparse/lexicon.hpp"
#include "screenparse/srn.hpp"

namespace screenparse::testing {

inline std::filesystem::path data_dir() { return SCREENPARSE_DATA_DIR; }

inline TaggedWord word(std::string surface, std::size_t pos, std::string basic,
                       std::string abstract_, bool start) {
  TaggedWord w;
  w.token = Token(std::move(surface), pos);
  w.basic = std::move(basic);
  w.abstract_ = std::move(abstract_);
  w.phrase_start = start;
  w.start_activation = start ? 1.0 : 0.0;
  return w;
}

/// Hand-tagged stream: {surface, basic, abstract, start}; positions 0..n-1.
struct Row {
  const char* surface;
  const char* basic;
  const char* abstract_;
  bool start;
};

inline std::vector<TaggedWord> stream(std::initializer_list<Row> rows) {
  std::vector<TaggedWord> out;
  for (const auto& r : rows) out.push_back(word(r.surface, out.size(), r.basic, r.abstract_, r.start));
  return out;
}

/// The first sample sentence with the tags printed alongside it.
inline std::vector<TaggedWord> sample_stream() {
  return stream({{"Yeah", "A", "MG", true},      {"I", "U", "NG", true},
                 {"need", "V", "VG", true},      {"a", "D", "NG", true},
                 {"train", "N", "NG", false},    {"from", "R", "PG", true},
                 {"Regensburg", "N", "PG", false}, {"to", "R", "PG", true},
                 {"Dortmund", "N", "PG", false}, {"via", "R", "PG", true},
                 {"Koeln", "N", "PG", false},    {".", "-", "PG", false},
                 {"with", "R", "PG", true},      {"at_least", "J", "PG", false},
                 {"two", "M", "PG", false},      {"hours", "N", "PG", false},
                 {"time", "N", "PG", false},     {"in", "R", "PG", true},
                 {"Koeln", "N", "PG", false}});
}

/// The repair sample sentence; "[u]" carries the adverb tag it was given.
inline std::vector<TaggedWord> repair_stream() {
  return stream({{"when", "A", "MG", true},      {"leaves", "V", "VG", true},
                 {"please", "V", "VG", false},   {".", "-", "IG", true},
                 {"[eh]", "I", "IG", true},      {"a", "D", "NG", true},
                 {"train", "N", "NG", false},    {".", "-", "IG", true},
                 {"from", "R", "PG", true},      {"Regensburg", "N", "PG", false},
                 {"to", "R", "PG", true},        {"Dortmund", "N", "PG", false},
                 {".", "-", "IG", true},         {"at", "R", "PG", true},
                 {"Monday", "N", "PG", false},   {"[mm]", "I", "CG", true},
                 {"[ts]", "I", "IG", true},      {"[u]", "A", "SG", true},
                 {".", "-", "IG", true},         {"at", "R", "PG", true},
                 {"Monday", "N", "PG", false},   {".", "-", "IG", true},
                 {"morning", "A", "PG", false}});
}

inline const char* kSampleSentence =
    "Yeah I need a train from Regensburg to Dortmund via Koeln . with at_least two hours "
    "time in Koeln";
inline const char* kRepairSentence =
    "when leaves please . [eh] a train . from Regensburg to Dortmund . at Monday [mm] [ts] "
    "[u] . at Monday . morning";

inline std::shared_ptr<const Lexicon> bundled_lexicon() {
  static const auto lex =
      std::make_shared<const Lexicon>(Lexicon::load(data_dir() / "lexicon.tsv"));
  return lex;
}

inline CategoryChannel bundled_channel() {
  return CategoryChannel(bundled_lexicon(), basic_syntactic_inventory(),
                         abstract_syntactic_inventory(),
                         CategoryChannel::load_models(data_dir() / "models"));
}

// ---------------------------------------------------------------------------
// Oracles

/// Central finite difference of step_loss with respect to every parameter.
inline std::vector<double> finite_difference_gradient(const SrnModel& model,
                                                      const std::vector<double>& input,
                                                      const std::vector<double>& target,
                                                      double eps = 1e-5) {
  SrnModel probe = model;
  std::vector<double> grad(model.parameter_count());
  for (std::size_t p = 0; p < grad.size(); ++p) {
    const double original = probe.parameter(p);
    probe.parameter(p) = original + eps;
    const double up = step_loss(probe, input, target);
    probe.parameter(p) = original - eps;
    const double down = step_loss(probe, input, target);
    probe.parameter(p) = original;
    grad[p] = (up - down) / (2.0 * eps);
  }
  return grad;
}

inline double relative_error(double a, double b) {
  const double scale = std::max({std::fabs(a), std::fabs(b), 1e-8});
  return std::fabs(a - b) / scale;
}

/// Largest relative error between analytic and finite-difference gradients
/// on a random 3-4-2 network with a random context.
inline double gradient_check_max_error(std::uint64_t seed) {
  Rng rng(seed);
  SrnModel model = SrnModel::random(3, 4, 2, 1.0, rng);
  for (double& c : model.context()) c = rng.uniform(0.05, 0.95);
  std::vector<double> input{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
  std::vector<double> target{rng.uniform(), rng.uniform()};
  const SrnGradient analytic = step_gradient(model, input, target);
  const std::vector<double> numeric = finite_difference_gradient(model, input, target);
  double worst = 0.0;
  for (std::size_t p = 0; p < numeric.size(); ++p)
    worst = std::max(worst, relative_error(analytic.parameter(p), numeric[p]));
  return worst;
}

/// Chunking oracle: enumerate every boundary set and keep the ones that
/// satisfy the grouping conditions. Returns group start indices; the
/// caller asserts there is exactly one solution.
inline std::vector<std::vector<std::size_t>> chunk_boundaries_by_enumeration(
    const std::vector<TaggedWord>& words) {
  std::vector<std::vector<std::size_t>> solutions;
  const std::size_t n = words.size();
  if (n == 0) return {{}};
  for (std::uint64_t mask = 0; mask < (1ULL << (n - 1)); ++mask) {
    std::vector<bool> boundary(n, false);
    boundary[0] = true;
    for (std::size_t i = 1; i < n; ++i) boundary[i] = (mask >> (i - 1)) & 1ULL;
    bool ok = true;
    std::size_t group_first = 0;
    for (std::size_t i = 1; i < n && ok; ++i) {
      const bool required =
          words[i].phrase_start || words[i].abstract_ != words[group_first].abstract_;
      if (boundary[i] != required) ok = false;
      if (boundary[i]) group_first = i;
    }
    if (!ok) continue;
    std::vector<std::size_t> starts;
    for (std::size_t i = 0; i < n; ++i)
      if (boundary[i]) starts.push_back(i);
    solutions.push_back(std::move(starts));
  }
  return solutions;
}

/// Random tag stream over `labels`, positions strictly increasing with gaps.
inline std::vector<TaggedWord> random_stream(Rng& rng, std::size_t length,
                                             const std::vector<std::string>& labels,
                                             const std::vector<std::string>& surfaces) {
  std::vector<TaggedWord> out;
  std::size_t pos = 0;
  for (std::size_t i = 0; i < length; ++i) {
    pos += 1 + rng.below(2);
    out.push_back(word(surfaces[rng.below(surfaces.size())], pos, "N",
                       labels[rng.below(labels.size())], rng.uniform() < 0.4));
  }
  return out;
}

}  // namespace screenparse::testing

#endif  // SCREENPARSE_TESTS_SUPPORT_HPP_
