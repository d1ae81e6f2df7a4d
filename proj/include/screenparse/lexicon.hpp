#ifndef SCREENPARSE_LEXICON_HPP_
#define SCREENPARSE_LEXICON_HPP_

#include <filesystem>
#include <iosfwd>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "screenparse/inventory.hpp"
#include "screenparse/token.hpp"

namespace screenparse {

using LabelSet = std::set<std::string>;

struct LexiconEntry {
  std::string surface;  // case-folded key
  LabelSet candidates;  // short codes, never empty
};

/// Surface form -> candidate basic categories. Read-only after load.
class Lexicon {
 public:
  explicit Lexicon(const CategoryInventory& inventory = basic_syntactic_inventory());

  /// Format: `surface<TAB>label[,label...]` per line, `#` comment lines.
  /// Labels may be short codes or long names.
  static Lexicon load(std::istream& in,
                      const CategoryInventory& inventory = basic_syntactic_inventory());
  static Lexicon load(const std::filesystem::path& path,
                      const CategoryInventory& inventory = basic_syntactic_inventory());

  void add(std::string_view surface, const LabelSet& candidates);

  /// Candidates for a surface form; pause and bracketed forms map to the
  /// pause and interjection categories, unknown words to the open classes.
  LabelSet lookup(std::string_view surface) const;
  LabelSet lookup(const Token& token) const;

  bool contains(std::string_view surface) const;
  std::size_t size() const { return entries_.size(); }
  const CategoryInventory& inventory() const { return *inventory_; }

  static LabelSet open_class_fallback();

 private:
  const CategoryInventory* inventory_;
  std::unordered_map<std::string, LexiconEntry> entries_;
};

/// Binary vector of inventory width with a 1 at every candidate's index.
std::vector<double> encode_candidates(const LabelSet& candidates,
                                      const CategoryInventory& inventory);
/// Inverse of encode_candidates over the label slots.
LabelSet decode_candidates(const std::vector<double>& bits,
                           const CategoryInventory& inventory);

}  // namespace screenparse

#endif  // SCREENPARSE_LEXICON_HPP_
