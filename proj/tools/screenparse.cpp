// screenparse: train, parse and evaluate the flat speech parser.

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "screenparse/caseframe.hpp"
#include "screenparse/channel.hpp"
#include "screenparse/corpus.hpp"
#include "screenparse/evaluation.hpp"
#include "screenparse/json_io.hpp"
#include "screenparse/lexicon.hpp"
#include "screenparse/pipeline.hpp"

namespace fs = std::filesystem;
using namespace screenparse;

namespace {

struct RunConfig {
  std::string lexicon;
  std::string models;
  std::string corpus;
  std::string test_corpus;
  std::string transcript;
  std::optional<std::uint64_t> seed;
  std::optional<double> learning_rate;
  std::optional<double> momentum;
  std::optional<int> epochs;
  std::string format = "text";
  bool trace = false;
  std::string compat_table;
  std::optional<std::string> slot_blocklist;
};

std::uint64_t resolve_seed(const RunConfig& cfg) {
  if (cfg.seed) return *cfg.seed;
  if (const char* env = std::getenv("SCREENPARSE_SEED")) {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(env, &used);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw std::invalid_argument(std::string("SCREENPARSE_SEED is not an integer: ") + env);
  }
  return 1;
}

void require_file(const std::string& path, const char* what) {
  if (path.empty()) throw std::invalid_argument(std::string("missing --") + what);
  if (!fs::is_regular_file(path))
    throw std::invalid_argument(std::string(what) + " not found: " + path);
}

void require_models(const std::string& dir) {
  if (dir.empty()) throw std::invalid_argument("missing --models");
  for (const char* f : {kDisambiguatorFile, kAbstractorFile, kStarterFile})
    if (!fs::is_regular_file(fs::path(dir) / f))
      throw std::invalid_argument("model file not found: " + (fs::path(dir) / f).string());
}

SlotPolicy make_policy(const RunConfig& cfg) {
  SlotPolicy policy;
  if (!cfg.compat_table.empty()) {
    require_file(cfg.compat_table, "compat-table");
    policy.compatible = SlotPolicy::load_compat_table(fs::path(cfg.compat_table));
  }
  if (cfg.slot_blocklist) {
    policy.blocklist.clear();
    std::stringstream ss(*cfg.slot_blocklist);
    std::string label;
    while (std::getline(ss, label, ',')) {
      if (label.empty() || label == "none") continue;
      policy.blocklist.insert(abstract_syntactic_inventory().canonical(label));
    }
  }
  return policy;
}

CategoryChannel load_channel(const RunConfig& cfg) {
  auto lexicon = std::make_shared<const Lexicon>(Lexicon::load(fs::path(cfg.lexicon)));
  return CategoryChannel(lexicon, basic_syntactic_inventory(), abstract_syntactic_inventory(),
                         CategoryChannel::load_models(cfg.models));
}

int cmd_train(const RunConfig& cfg) {
  require_file(cfg.lexicon, "lexicon");
  require_file(cfg.corpus, "corpus");
  if (!cfg.test_corpus.empty()) require_file(cfg.test_corpus, "test-corpus");
  if (cfg.models.empty()) throw std::invalid_argument("missing --models");

  TrainConfig train;
  train.seed = resolve_seed(cfg);
  if (cfg.learning_rate) train.learning_rate = *cfg.learning_rate;
  if (cfg.momentum) train.momentum = *cfg.momentum;
  if (cfg.epochs) train.epochs = *cfg.epochs;
  train.validate();

  auto lexicon = std::make_shared<const Lexicon>(Lexicon::load(fs::path(cfg.lexicon)));
  const auto corpus = load_corpus(fs::path(cfg.corpus));
  std::optional<std::vector<AnnotatedUtterance>> test;
  if (!cfg.test_corpus.empty()) test = load_corpus(fs::path(cfg.test_corpus));

  CategoryChannel channel = CategoryChannel::untrained(lexicon, train);
  channel.train(corpus, train);
  channel.save_models(cfg.models);

  std::vector<std::string> names{"train"};
  std::vector<Metrics> columns{evaluate(channel, corpus)};
  if (test) {
    names.emplace_back("test");
    columns.push_back(evaluate(channel, *test));
  }
  std::cout << "trained on " << corpus.size() << " utterances (" << word_count(corpus)
            << " words), seed " << train.seed << ", " << train.epochs << " epochs\n";
  write_metrics_table(std::cout, names, columns);
  return 0;
}

int cmd_parse(const RunConfig& cfg) {
  require_file(cfg.lexicon, "lexicon");
  require_models(cfg.models);
  if (cfg.transcript.empty()) throw std::invalid_argument("missing --transcript");
  if (cfg.transcript != "-") require_file(cfg.transcript, "transcript");
  if (cfg.format != "text" && cfg.format != "jsonl")
    throw std::invalid_argument("--format must be text or jsonl");

  Pipeline pipeline(load_channel(cfg), make_policy(cfg));
  if (cfg.trace) pipeline.set_trace(&std::cerr);

  std::ifstream file;
  std::istream* in = &std::cin;
  if (cfg.transcript != "-") {
    file.open(cfg.transcript);
    in = &file;
  }
  std::string line;
  std::size_t utterance = 0;
  while (std::getline(*in, line)) {
    const auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    const UtteranceAnalysis analysis = analyze_incremental(pipeline, tokens);
    ++utterance;
    if (cfg.format == "jsonl") {
      std::cout << to_json(analysis).dump() << '\n';
    } else {
      if (utterance > 1) std::cout << '\n';
      std::cout << "# utterance " << utterance << '\n';
      write_text(analysis, std::cout);
    }
  }
  return 0;
}

int cmd_eval(const RunConfig& cfg) {
  require_file(cfg.lexicon, "lexicon");
  require_models(cfg.models);
  require_file(cfg.corpus, "corpus");
  const auto corpus = load_corpus(fs::path(cfg.corpus));
  const CategoryChannel channel = load_channel(cfg);
  const Metrics m = evaluate(channel, corpus);
  std::cout << "evaluated " << corpus.size() << " utterances (" << word_count(corpus)
            << " words)\n";
  write_metrics_table(std::cout, {"correct"}, {m});

  std::vector<std::optional<std::vector<std::size_t>>> gold;
  for (const auto& u : corpus) gold.push_back(u.gold_surviving());
  const bool any_gold = std::any_of(gold.begin(), gold.end(), [](const auto& g) { return g.has_value(); });
  if (!any_gold) {
    std::cout << "overall interpretation: n/a (corpus has no keep column)\n";
    return 0;
  }
  const auto analyses = interpret_corpus(channel, corpus, make_policy(cfg));
  const auto score = overall_interpretation_rate(analyses, gold);
  char buf[160];
  std::snprintf(buf, sizeof buf, "overall interpretation: %.1f%% (%zu/%zu utterances", score.percent(),
                score.correct, score.scored);
  std::cout << buf;
  if (score.skipped) std::cout << ", " << score.skipped << " without keep column skipped";
  std::cout << ")\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Incremental fault-tolerant flat parsing of transcribed speech"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--lexicon", cfg.lexicon, "Lexicon file (surface<TAB>labels)");
    sub->add_option("--models", cfg.models, "Directory holding the three model files");
  };
  auto add_slots = [&](CLI::App* sub) {
    sub->add_option("--compat-table", cfg.compat_table, "SYN<TAB>SEM compatibility table");
    sub->add_option("--slot-blocklist", cfg.slot_blocklist,
                    "Comma-separated abstract labels flagged by the slot check (default SG; "
                    "'none' for empty)");
  };

  auto* train = app.add_subcommand("train", "Train the three tagging networks");
  add_common(train);
  train->add_option("--corpus", cfg.corpus, "Annotated training corpus");
  train->add_option("--test-corpus", cfg.test_corpus, "Annotated test corpus for the report");
  train->add_option("--seed", cfg.seed, "Random seed (falls back to SCREENPARSE_SEED, then 1)");
  train->add_option("--lr", cfg.learning_rate, "Learning rate");
  train->add_option("--momentum", cfg.momentum, "Momentum in [0, 1)");
  train->add_option("--epochs", cfg.epochs, "Training epochs");

  auto* parse = app.add_subcommand("parse", "Analyze a transcript, one utterance per line");
  add_common(parse);
  add_slots(parse);
  parse->add_option("--transcript", cfg.transcript, "Transcript file, or - for stdin");
  parse->add_option("--format", cfg.format, "text or jsonl");
  parse->add_flag("--trace", cfg.trace, "Log every hypothesis to stderr");

  auto* eval = app.add_subcommand("eval", "Evaluate trained networks on an annotated corpus");
  add_common(eval);
  add_slots(eval);
  eval->add_option("--corpus", cfg.corpus, "Annotated corpus");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (train->parsed()) return cmd_train(cfg);
    if (parse->parsed()) return cmd_parse(cfg);
    if (eval->parsed()) return cmd_eval(cfg);
  } catch (const std::exception& e) {
    std::cerr << "screenparse: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
