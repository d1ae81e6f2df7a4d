// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "screenparse/caseframe.hpp"
#include "screenparse/corpus.hpp"
#include "screenparse/correction.hpp"
#include "screenparse/evaluation.hpp"
#include "screenparse/json_io.hpp"
#include "screenparse/pipeline.hpp"
#include "support.hpp"

namespace sp = screenparse;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void report(int id, const char* name, const std::function<Outcome()>& check) {
  Outcome o;
  try {
    o = check();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  if (!o.pass) ++failures;
  std::printf("%s %d %s: %s\n", o.pass ? "PASS" : "FAIL", id, name, o.detail.c_str());
  std::fflush(stdout);
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

std::vector<sp::Metrics> all_evaluations;  // every evaluation run, for criterion 5

sp::Metrics evaluate_logged(const sp::CategoryChannel& channel,
                            const std::vector<sp::AnnotatedUtterance>& corpus) {
  sp::Metrics m = sp::evaluate(channel, corpus);
  all_evaluations.push_back(m);
  return m;
}

// ---------------------------------------------------------------------------

Outcome gradient_check() {
  const auto start = Clock::now();
  double worst = 0.0;
  const int nets = 25;
  for (int seed = 1; seed <= nets; ++seed)
    worst = std::max(worst, sp::testing::gradient_check_max_error(static_cast<std::uint64_t>(seed)));
  const double took = seconds_since(start);
  return {worst < 1e-4 && took < 5.0,
          fmt("%d random 3-4-2 nets, max relative error %.3g, %.3f s", nets, worst, took)};
}

std::string surviving_text(const sp::UtteranceAnalysis& a) {
  std::string s;
  for (std::size_t p : a.surviving) s += (s.empty() ? "" : " ") + a.tokens[p].surface;
  return s;
}

Outcome samples() {
  sp::Pipeline pipeline(sp::testing::bundled_channel());
  const auto sample_run = sp::analyze_incremental(pipeline, sp::tokenize(sp::testing::kSampleSentence));
  const auto repair_run = sp::analyze_incremental(pipeline, sp::tokenize(sp::testing::kRepairSentence));
  std::vector<std::size_t> want3;
  for (std::size_t p = 0; p < 19; ++p)
    if (p != 11) want3.push_back(p);
  const std::vector<std::size_t> want4{0, 1, 2, 5, 6, 8, 9, 10, 11, 19, 20, 22};
  const bool ok3 = sample_run.surviving == want3;
  const bool ok4 = repair_run.surviving == want4;
  return {ok3 && ok4, fmt("first sample %s, repair sample %s (\"%s\")", ok3 ? "exact" : "differs",
                          ok4 ? "exact" : "differs", surviving_text(repair_run).c_str())};
}

Outcome repair_rules() {
  using sp::testing::stream;
  struct Case {
    const char* name;
    std::vector<sp::TaggedWord> words;
    bool expect_repair;
  };
  const std::vector<Case> cases{
      {"same label, same start, adjacent",
       stream({{"at", "R", "PG", true}, {"Monday", "N", "PG", false},
               {"at", "R", "PG", true}, {"Monday", "N", "PG", false}}),
       true},
      {"adjacent once the pause is deleted",
       stream({{"at", "R", "PG", true}, {"Monday", "N", "PG", false}, {".", "-", "IG", true},
               {"[ts]", "I", "IG", true}, {"at", "R", "PG", true}, {"Monday", "N", "PG", false}}),
       true},
      {"start differs (from Regensburg / to Dortmund)",
       stream({{"from", "R", "PG", true}, {"Regensburg", "N", "PG", false},
               {"to", "R", "PG", true}, {"Dortmund", "N", "PG", false}}),
       false},
      {"label differs",
       stream({{"a", "D", "NG", true}, {"train", "N", "NG", false},
               {"a", "D", "PG", true}, {"train", "N", "PG", false}}),
       false},
      {"not adjacent (not after . not before nine)",
       stream({{"not", "A", "SG", true}, {"after", "R", "PG", true}, {".", "-", "IG", true},
               {"not", "A", "SG", true}, {"before", "R", "PG", true}, {"nine", "M", "PG", false}}),
       false},
  };
  std::size_t passed = 0;
  std::string failed;
  for (const auto& c : cases) {
    const auto result = sp::correct(c.words);
    bool repaired = false;
    for (const auto& e : result.events) repaired |= e.kind == sp::RepairKind::PhraseRepair;
    if (repaired == c.expect_repair)
      ++passed;
    else
      failed += std::string(" [") + c.name + "]";
  }
  return {passed == cases.size(),
          fmt("%zu/%zu deterministic cases%s", passed, cases.size(), failed.c_str())};
}

struct TrainedRun {
  sp::CategoryChannel channel;
  double seconds;
};

TrainedRun train_bundled(std::uint64_t seed) {
  const auto corpus = sp::load_corpus(sp::testing::data_dir() / "train.tsv");
  sp::TrainConfig cfg;
  cfg.seed = seed;
  const auto start = Clock::now();
  auto channel = sp::CategoryChannel::untrained(sp::testing::bundled_lexicon(), cfg);
  channel.train(corpus, cfg);
  return {std::move(channel), seconds_since(start)};
}

Outcome learning(const TrainedRun& run) {
  const auto train = sp::load_corpus(sp::testing::data_dir() / "train.tsv");
  const auto test = sp::load_corpus(sp::testing::data_dir() / "test.tsv");
  const auto start = Clock::now();
  const sp::Metrics tr = evaluate_logged(run.channel, train);
  const sp::Metrics te = evaluate_logged(run.channel, test);
  const double took = run.seconds + seconds_since(start);
  const bool ok = tr.basic.percent() >= 95.0 && tr.abstract_.percent() >= 88.0 &&
                  tr.start.percent() >= 90.0 && te.combined.percent() >= 80.0 && took < 120.0;
  return {ok, fmt("train %zu words basic %.1f%% abstract %.1f%% start %.1f%%; "
                  "test %zu words combined %.1f%%; %.1f s",
                  tr.basic.total, tr.basic.percent(), tr.abstract_.percent(), tr.start.percent(),
                  te.combined.total, te.combined.percent(), took)};
}

Outcome combined_bound() {
  // Add evaluations of the bundled models and of untrained channels.
  for (const char* name : {"train.tsv", "test.tsv"}) {
    const auto corpus = sp::load_corpus(sp::testing::data_dir() / name);
    evaluate_logged(sp::testing::bundled_channel(), corpus);
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      sp::TrainConfig cfg;
      cfg.seed = seed;
      evaluate_logged(sp::CategoryChannel::untrained(sp::testing::bundled_lexicon(), cfg), corpus);
    }
  }
  std::size_t violations = 0;
  for (const auto& m : all_evaluations)
    if (m.combined.correct > std::min(m.basic.correct, m.abstract_.correct)) ++violations;
  return {violations == 0,
          fmt("%zu evaluations, %zu violations", all_evaluations.size(), violations)};
}

std::vector<sp::Token> random_tokens(sp::Rng& rng, const std::vector<std::string>& vocabulary) {
  const std::size_t n = 1 + rng.below(30);
  std::string line;
  for (std::size_t i = 0; i < n; ++i) line += vocabulary[rng.below(vocabulary.size())] + " ";
  return sp::tokenize(line);
}

Outcome incremental_batch() {
  sp::CategoryChannel channel = sp::testing::bundled_channel();
  sp::Pipeline pipeline(sp::testing::bundled_channel());
  std::size_t compared = 0, mismatches = 0;
  auto compare = [&](const std::vector<sp::Token>& tokens) {
    const std::string inc = sp::to_json(sp::analyze_incremental(pipeline, tokens)).dump();
    const std::string bat = sp::to_json(sp::analyze_batch(channel, tokens)).dump();
    ++compared;
    if (inc != bat) ++mismatches;
  };
  std::size_t corpus_utts = 0;
  for (const char* name : {"train.tsv", "test.tsv"})
    for (const auto& u : sp::load_corpus(sp::testing::data_dir() / name)) {
      compare(u.plain_tokens());
      ++corpus_utts;
    }
  std::vector<std::string> vocabulary{".", "[eh]", "[mm]", "[u]", "at", "Monday", "the",
                                      "train", "to", "from", "Bonn", "Koeln", "I", "need",
                                      "not", "before", "nine", "Yeah", "please", "morning"};
  sp::Rng rng(2024);
  for (int i = 0; i < 200; ++i) compare(random_tokens(rng, vocabulary));
  return {mismatches == 0, fmt("%zu corpus utterances + 200 random streams, %zu mismatches",
                               corpus_utts, mismatches)};
}

struct ScheduleSearch {
  const sp::UtteranceAnalysis* reference;
  std::size_t positions;
  std::size_t leaves = 0;
  std::size_t mismatches = 0;

  void explore(sp::Pipeline& p) {
    std::vector<std::pair<sp::Stage, std::size_t>> options;
    for (std::size_t s = 0; s < sp::kStageCount; ++s)
      for (std::size_t pos = 0; pos < positions; ++pos)
        if (p.ready(static_cast<sp::Stage>(s), pos))
          options.emplace_back(static_cast<sp::Stage>(s), pos);
    if (options.empty()) {
      ++leaves;
      if (p.flush() != *reference) ++mismatches;
      return;
    }
    for (std::size_t i = 0; i + 1 < options.size(); ++i) {
      sp::Pipeline branch = p;
      branch.run(options[i].first, options[i].second);
      explore(branch);
    }
    p.run(options.back().first, options.back().second);
    explore(p);
  }
};

Outcome scheduling() {
  const auto start = Clock::now();
  std::size_t leaves = 0, mismatches = 0;
  std::string per;
  for (const char* line : {"at Monday at Monday", "the the [eh] train"}) {
    const auto tokens = sp::tokenize(line);
    sp::CategoryChannel channel = sp::testing::bundled_channel();
    const sp::UtteranceAnalysis reference = sp::analyze_batch(channel, tokens);
    sp::Pipeline root(sp::testing::bundled_channel());
    for (const auto& t : tokens) root.submit(t);
    ScheduleSearch search{&reference, tokens.size()};
    search.explore(root);
    leaves += search.leaves;
    mismatches += search.mismatches;
    per += fmt(" \"%s\": %zu", line, search.leaves);
  }
  const std::size_t expected = 2 * 1662804;  // linear extensions of the 5x4 stage grid
  return {leaves == expected && mismatches == 0,
          fmt("schedules%s; %zu mismatches; %.1f s", per.c_str(), mismatches,
              seconds_since(start))};
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome determinism(const TrainedRun& first) {
  const fs::path dir = fs::temp_directory_path() / "screenparse_acceptance";
  fs::remove_all(dir);
  const TrainedRun second = train_bundled(1);
  first.channel.save_models(dir / "a");
  second.channel.save_models(dir / "b");
  bool identical = true;
  for (const char* f : {sp::kDisambiguatorFile, sp::kAbstractorFile, sp::kStarterFile})
    identical &= read_file(dir / "a" / f) == read_file(dir / "b" / f);

  const sp::ChannelModels loaded = sp::CategoryChannel::load_models(dir / "a");
  const sp::ChannelModels& orig = first.channel.models();
  double worst = 0.0;
  sp::Rng rng(99);
  const std::pair<const sp::SrnModel*, const sp::SrnModel*> pairs[] = {
      {&orig.disambiguator, &loaded.disambiguator},
      {&orig.abstractor, &loaded.abstractor},
      {&orig.starter, &loaded.starter}};
  for (auto [a, b] : pairs) {
    sp::SrnModel x = *a, y = *b;
    x.reset_context();
    y.reset_context();
    for (int i = 0; i < 100; ++i) {
      std::vector<double> input(a->n_in());
      for (double& v : input) v = rng.uniform(-1, 1);
      const auto oa = x.forward(input);
      const auto ob = y.forward(input);
      for (std::size_t k = 0; k < oa.size(); ++k) worst = std::max(worst, std::fabs(oa[k] - ob[k]));
    }
  }
  fs::remove_all(dir);
  return {identical && worst <= 1e-12,
          fmt("model files %s across runs; round-trip max output difference %.3g",
              identical ? "identical" : "differ", worst)};
}

}  // namespace

int main() {
  report(1, "gradient correctness", gradient_check);
  report(2, "sample interpretations", samples);
  report(3, "repair rules", repair_rules);
  std::optional<TrainedRun> run;
  report(4, "desk-corpus learning", [&] {
    run = train_bundled(1);
    return learning(*run);
  });
  report(5, "combined bound", combined_bound);
  report(6, "incremental/batch equivalence", incremental_batch);
  report(7, "scheduling invariance", scheduling);
  report(8, "determinism", [&] {
    if (!run) run = train_bundled(1);
    return determinism(*run);
  });
  return failures == 0 ? 0 : 1;
}
