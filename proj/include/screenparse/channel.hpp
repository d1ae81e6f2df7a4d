#ifndef SCREENPARSE_CHANNEL_HPP_
#define SCREENPARSE_CHANNEL_HPP_

#include <cstddef>
#include <filesystem>
#include <memory>
#include <string>
#include <vector>

#include "screenparse/corpus.hpp"
#include "screenparse/inventory.hpp"
#include "screenparse/lexicon.hpp"
#include "screenparse/srn.hpp"
#include "screenparse/token.hpp"

namespace screenparse {

/// Per-word hypotheses of one category channel.
struct TaggedWord {
  Token token;
  std::string basic;
  std::vector<double> basic_activations;
  std::string abstract_;
  std::vector<double> abstract_activations;
  bool phrase_start = false;
  double start_activation = 0.0;

  std::size_t position() const { return token.position; }
  friend bool operator==(const TaggedWord&, const TaggedWord&) = default;
};

/// Index of the largest activation among the first `label_count` slots;
/// ties go to the lowest index.
std::size_t argmax(const std::vector<double>& activations, std::size_t label_count);

inline constexpr double kPhraseStartThreshold = 0.5;

struct ChannelModels {
  SrnModel disambiguator;  // candidate bits -> basic category
  SrnModel abstractor;     // basic one-hot -> abstract category
  SrnModel starter;        // basic one-hot -> phrase-start unit
};

struct ChannelShape {
  std::size_t disambiguator_hidden = 14;
  std::size_t abstractor_hidden = 7;
  std::size_t starter_hidden = 7;
};

struct ModelAccuracy {
  std::size_t correct = 0;
  std::size_t total = 0;
  double rate() const { return total ? static_cast<double>(correct) / total : 0.0; }
};

struct ChannelTrainingReport {
  ModelAccuracy disambiguator;
  ModelAccuracy abstractor;
  ModelAccuracy starter;
  double final_disambiguator_mse = 0.0;
  double final_abstractor_mse = 0.0;
  double final_starter_mse = 0.0;
};

/// Three SRNs forming one tagging channel. The disambiguator reads the
/// lexical candidate bits of a word; the abstractor and the starter read
/// the one-hot of the chosen basic category. All three carry recurrent
/// context across the words of one utterance.
class CategoryChannel {
 public:
  CategoryChannel(std::shared_ptr<const Lexicon> lexicon, const CategoryInventory& basic,
                  const CategoryInventory& abstract_, ChannelModels models);

  /// Randomly initialized channel using the syntactic inventories.
  static CategoryChannel untrained(std::shared_ptr<const Lexicon> lexicon,
                                   const TrainConfig& config, ChannelShape shape = {});
  static CategoryChannel untrained(std::shared_ptr<const Lexicon> lexicon,
                                   const CategoryInventory& basic,
                                   const CategoryInventory& abstract_,
                                   const TrainConfig& config, ChannelShape shape = {});

  TaggedWord tag_word(const Token& token);
  void reset();

  /// Trains each net on its own target stream. The abstractor and starter
  /// are fed the gold basic category (teacher forcing). Throws on an empty
  /// corpus or labels outside the inventories.
  ChannelTrainingReport train(const std::vector<AnnotatedUtterance>& corpus,
                              const TrainConfig& config);

  const ChannelModels& models() const { return models_; }
  ChannelModels& models() { return models_; }
  const Lexicon& lexicon() const { return *lexicon_; }
  std::shared_ptr<const Lexicon> lexicon_ptr() const { return lexicon_; }
  const CategoryInventory& basic_inventory() const { return *basic_; }
  const CategoryInventory& abstract_inventory() const { return *abstract_; }

  /// Writes/reads disambiguator.srn, abstractor.srn and starter.srn.
  void save_models(const std::filesystem::path& dir) const;
  static ChannelModels load_models(const std::filesystem::path& dir);

 private:
  void check_shapes() const;

  std::shared_ptr<const Lexicon> lexicon_;
  const CategoryInventory* basic_;
  const CategoryInventory* abstract_;
  ChannelModels models_;
};

inline constexpr const char* kDisambiguatorFile = "disambiguator.srn";
inline constexpr const char* kAbstractorFile = "abstractor.srn";
inline constexpr const char* kStarterFile = "starter.srn";

}  // namespace screenparse

#endif  // SCREENPARSE_CHANNEL_HPP_
