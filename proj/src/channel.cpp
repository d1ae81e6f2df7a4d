#include "screenparse/channel.hpp"

#include <numeric>
#include <stdexcept>

#include "screenparse/error.hpp"

namespace screenparse {

std::size_t argmax(const std::vector<double>& activations, std::size_t label_count) {
  const std::size_t n = std::min(label_count, activations.size());
  if (n == 0) throw std::invalid_argument("argmax over no labels");
  std::size_t best = 0;
  for (std::size_t i = 1; i < n; ++i)
    if (activations[i] > activations[best]) best = i;
  return best;
}

CategoryChannel::CategoryChannel(std::shared_ptr<const Lexicon> lexicon,
                                 const CategoryInventory& basic,
                                 const CategoryInventory& abstract_inv, ChannelModels models)
    : lexicon_(std::move(lexicon)),
      basic_(&basic),
      abstract_(&abstract_inv),
      models_(std::move(models)) {
  if (!lexicon_) throw std::invalid_argument("channel needs a lexicon");
  check_shapes();
  reset();
}

void CategoryChannel::check_shapes() const {
  const auto expect = [](const SrnModel& m, std::size_t in, std::size_t out, const char* what) {
    if (m.n_in() != in || m.n_out() != out)
      throw DimensionError(std::string(what) + " must map " + std::to_string(in) + " -> " +
                           std::to_string(out) + " units, has " + std::to_string(m.n_in()) +
                           " -> " + std::to_string(m.n_out()));
  };
  expect(models_.disambiguator, basic_->width(), basic_->width(), "disambiguator");
  expect(models_.abstractor, basic_->width(), abstract_->width(), "abstractor");
  expect(models_.starter, basic_->width(), 1, "starter");
}

CategoryChannel CategoryChannel::untrained(std::shared_ptr<const Lexicon> lexicon,
                                           const TrainConfig& config, ChannelShape shape) {
  return untrained(std::move(lexicon), basic_syntactic_inventory(),
                   abstract_syntactic_inventory(), config, shape);
}

CategoryChannel CategoryChannel::untrained(std::shared_ptr<const Lexicon> lexicon,
                                           const CategoryInventory& basic,
                                           const CategoryInventory& abstract_,
                                           const TrainConfig& config, ChannelShape shape) {
  config.validate();
  Rng rng(config.seed);
  const std::size_t w = basic.width();
  ChannelModels models{
      SrnModel::random(w, shape.disambiguator_hidden, w, config.init_scale, rng),
      SrnModel::random(w, shape.abstractor_hidden, abstract_.width(), config.init_scale, rng),
      SrnModel::random(w, shape.starter_hidden, 1, config.init_scale, rng)};
  return CategoryChannel(std::move(lexicon), basic, abstract_, std::move(models));
}

TaggedWord CategoryChannel::tag_word(const Token& token) {
  TaggedWord word;
  word.token = token;
  word.basic_activations =
      models_.disambiguator.forward(encode_candidates(lexicon_->lookup(token), *basic_));
  word.basic = basic_->code(argmax(word.basic_activations, basic_->size()));

  const std::vector<double> chosen = basic_->one_hot(word.basic);
  word.abstract_activations = models_.abstractor.forward(chosen);
  word.abstract_ = abstract_->code(argmax(word.abstract_activations, abstract_->size()));

  word.start_activation = models_.starter.forward(chosen).front();
  word.phrase_start = word.start_activation >= kPhraseStartThreshold;
  return word;
}

void CategoryChannel::reset() {
  models_.disambiguator.reset_context();
  models_.abstractor.reset_context();
  models_.starter.reset_context();
}

ChannelTrainingReport CategoryChannel::train(const std::vector<AnnotatedUtterance>& corpus,
                                             const TrainConfig& config) {
  config.validate();
  if (corpus.empty()) throw std::invalid_argument("cannot train on an empty corpus");

  struct Sequences {
    std::vector<TrainingPair> disambiguator, abstractor, starter;
  };
  std::vector<Sequences> data;
  data.reserve(corpus.size());
  for (const auto& utterance : corpus) {
    Sequences seq;
    for (const auto& tok : utterance.tokens) {
      if (!basic_->contains(tok.basic))
        throw ParseError("<corpus>", tok.line, "unknown basic label '" + tok.basic + "'");
      if (!abstract_->contains(tok.abstract_))
        throw ParseError("<corpus>", tok.line, "unknown abstract label '" + tok.abstract_ + "'");
      const std::vector<double> gold_basic = basic_->one_hot(tok.basic);
      seq.disambiguator.push_back(
          {encode_candidates(lexicon_->lookup(tok.token), *basic_), gold_basic});
      seq.abstractor.push_back({gold_basic, abstract_->one_hot(tok.abstract_)});
      seq.starter.push_back({gold_basic, {tok.start ? 1.0 : 0.0}});
    }
    data.push_back(std::move(seq));
  }

  SrnTrainer dis_trainer(models_.disambiguator, config);
  SrnTrainer abs_trainer(models_.abstractor, config);
  SrnTrainer start_trainer(models_.starter, config);
  Rng order_rng(config.seed ^ 0x9e3779b97f4a7c15ULL);
  std::vector<std::size_t> order(data.size());
  std::iota(order.begin(), order.end(), 0);

  ChannelTrainingReport report;
  for (int epoch = 0; epoch < config.epochs; ++epoch) {
    for (std::size_t i = order.size(); i > 1; --i)
      std::swap(order[i - 1], order[order_rng.below(i)]);
    double dis = 0.0, abs = 0.0, start = 0.0;
    for (std::size_t idx : order) {
      dis += dis_trainer.train_sequence(models_.disambiguator, data[idx].disambiguator);
      abs += abs_trainer.train_sequence(models_.abstractor, data[idx].abstractor);
      start += start_trainer.train_sequence(models_.starter, data[idx].starter);
    }
    const double n = static_cast<double>(data.size());
    report.final_disambiguator_mse = dis / n;
    report.final_abstractor_mse = abs / n;
    report.final_starter_mse = start / n;
  }

  // Train-set accuracy of each net on its own (teacher-forced) inputs.
  for (const auto& seq : data) {
    reset();
    for (std::size_t t = 0; t < seq.disambiguator.size(); ++t) {
      const auto d = models_.disambiguator.forward(seq.disambiguator[t].input);
      report.disambiguator.correct +=
          argmax(d, basic_->size()) == argmax(seq.disambiguator[t].target, basic_->size());
      ++report.disambiguator.total;
      const auto a = models_.abstractor.forward(seq.abstractor[t].input);
      report.abstractor.correct +=
          argmax(a, abstract_->size()) == argmax(seq.abstractor[t].target, abstract_->size());
      ++report.abstractor.total;
      const auto s = models_.starter.forward(seq.starter[t].input);
      report.starter.correct +=
          (s.front() >= kPhraseStartThreshold) == (seq.starter[t].target.front() >= 0.5);
      ++report.starter.total;
    }
  }
  reset();
  return report;
}

void CategoryChannel::save_models(const std::filesystem::path& dir) const {
  std::filesystem::create_directories(dir);
  save(models_.disambiguator, dir / kDisambiguatorFile);
  save(models_.abstractor, dir / kAbstractorFile);
  save(models_.starter, dir / kStarterFile);
}

ChannelModels CategoryChannel::load_models(const std::filesystem::path& dir) {
  return ChannelModels{load(dir / kDisambiguatorFile), load(dir / kAbstractorFile),
                       load(dir / kStarterFile)};
}

}  // namespace screenparse
