#include "screenparse/inventory.hpp"

#include <stdexcept>
#include <unordered_set>

#include "screenparse/token.hpp"

namespace screenparse {

CategoryInventory::CategoryInventory(std::vector<Label> labels, std::size_t width,
                                     std::vector<std::string> padding)
    : labels_(std::move(labels)), padding_(std::move(padding)), width_(width) {
  if (labels_.empty()) throw std::invalid_argument("inventory has no labels");
  if (width_ < labels_.size())
    throw std::invalid_argument("inventory width smaller than label count");
  std::unordered_set<std::string> seen;
  for (const auto& label : labels_) {
    if (!seen.insert(label.code).second)
      throw std::invalid_argument("duplicate label code: " + label.code);
  }
}

const std::string& CategoryInventory::code(std::size_t index) const {
  return labels_.at(index).code;
}

const std::string& CategoryInventory::name(std::size_t index) const {
  return labels_.at(index).name;
}

std::optional<std::size_t> CategoryInventory::find(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i].code == label) return i;
  const std::string folded = case_fold(label);
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (case_fold(labels_[i].name) == folded) return i;
  return std::nullopt;
}

std::size_t CategoryInventory::index_of(std::string_view label) const {
  if (auto idx = find(label)) return *idx;
  throw std::invalid_argument("unknown label: " + std::string(label));
}

std::vector<double> CategoryInventory::one_hot(std::string_view label) const {
  std::vector<double> v(width_, 0.0);
  v[index_of(label)] = 1.0;
  return v;
}

const CategoryInventory& basic_syntactic_inventory() {
  static const CategoryInventory inv(
      {{"J", "Adjective"},
       {"A", "Adverb"},
       {"C", "Conjunction"},
       {"D", "Determiner"},
       {"I", "Interjection"},
       {"M", "Numeral"},
       {"N", "Noun"},
       {"R", "Preposition"},
       {"U", "Pronoun"},
       {"V", "Verb"},
       {"-", "Pause"}},
      13, {"OTHER", "UNUSED"});
  return inv;
}

const CategoryInventory& abstract_syntactic_inventory() {
  static const CategoryInventory inv(
      {{"CG", "Conjunction Group"},
       {"IG", "Interjection Group"},
       {"MG", "Modus Group"},
       {"NG", "Noun Group"},
       {"PG", "Prepositional Group"},
       {"SG", "Special Group"},
       {"VG", "Verb Group"}},
      8, {"OTHER"});
  return inv;
}

}  // namespace screenparse
