#ifndef SCREENPARSE_INVENTORY_HPP_
#define SCREENPARSE_INVENTORY_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace screenparse {

/// Ordered label set for one tagging task.
///
/// Labels are addressed by a short code ("N", "PG") that is also used in the
/// corpus and output formats; each label additionally carries a long name
/// ("Noun", "Prepositional Group"). The network width may exceed the label
/// count; the trailing slots are reserved padding and never name a label.
class CategoryInventory {
 public:
  struct Label {
    std::string code;
    std::string name;
  };

  CategoryInventory(std::vector<Label> labels, std::size_t width,
                    std::vector<std::string> padding = {});

  std::size_t size() const { return labels_.size(); }
  std::size_t width() const { return width_; }

  const std::string& code(std::size_t index) const;
  const std::string& name(std::size_t index) const;
  const std::vector<Label>& labels() const { return labels_; }
  const std::vector<std::string>& padding() const { return padding_; }

  /// Accepts either the short code or the long name (long name matched
  /// case-insensitively).
  std::optional<std::size_t> find(std::string_view label) const;
  /// Like find() but throws std::invalid_argument for unknown labels.
  std::size_t index_of(std::string_view label) const;
  bool contains(std::string_view label) const { return find(label).has_value(); }

  /// Canonical short code for a label given as code or long name.
  const std::string& canonical(std::string_view label) const {
    return code(index_of(label));
  }

  std::vector<double> one_hot(std::string_view label) const;

 private:
  std::vector<Label> labels_;
  std::vector<std::string> padding_;
  std::size_t width_;
};

/// Word categories: J A C D I M N R U V -, padded with OTHER and UNUSED to 13.
const CategoryInventory& basic_syntactic_inventory();
/// Phrase-group categories: CG IG MG NG PG SG VG, padded with OTHER to 8.
const CategoryInventory& abstract_syntactic_inventory();

namespace basic {
inline constexpr std::string_view kAdjective = "J";
inline constexpr std::string_view kAdverb = "A";
inline constexpr std::string_view kConjunction = "C";
inline constexpr std::string_view kDeterminer = "D";
inline constexpr std::string_view kInterjection = "I";
inline constexpr std::string_view kNumeral = "M";
inline constexpr std::string_view kNoun = "N";
inline constexpr std::string_view kPreposition = "R";
inline constexpr std::string_view kPronoun = "U";
inline constexpr std::string_view kVerb = "V";
inline constexpr std::string_view kPause = "-";
}  // namespace basic

namespace group {
inline constexpr std::string_view kConjunction = "CG";
inline constexpr std::string_view kInterjection = "IG";
inline constexpr std::string_view kModus = "MG";
inline constexpr std::string_view kNoun = "NG";
inline constexpr std::string_view kPrepositional = "PG";
inline constexpr std::string_view kSpecial = "SG";
inline constexpr std::string_view kVerb = "VG";
}  // namespace group

}  // namespace screenparse

#endif  // SCREENPARSE_INVENTORY_HPP_
