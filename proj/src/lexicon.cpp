#include "screenparse/lexicon.hpp"

#include <fstream>
#include <istream>
#include <sstream>

#include "screenparse/error.hpp"

namespace screenparse {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

Lexicon load_impl(std::istream& in, const CategoryInventory& inventory,
                  const std::string& source) {
  Lexicon lexicon(inventory);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped.front() == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos)
      throw ParseError(source, line_no, "expected `surface<TAB>labels`");
    const std::string surface = trim(std::string_view(line).substr(0, tab));
    if (surface.empty()) throw ParseError(source, line_no, "empty surface form");
    LabelSet candidates;
    std::istringstream labels(line.substr(tab + 1));
    std::string label;
    while (std::getline(labels, label, ',')) {
      label = trim(label);
      if (label.empty()) continue;
      const auto idx = inventory.find(label);
      if (!idx) throw ParseError(source, line_no, "unknown label '" + label + "'");
      candidates.insert(inventory.code(*idx));
    }
    if (candidates.empty())
      throw ParseError(source, line_no, "no labels for '" + surface + "'");
    lexicon.add(surface, candidates);
  }
  return lexicon;
}

}  // namespace

Lexicon::Lexicon(const CategoryInventory& inventory) : inventory_(&inventory) {}

Lexicon Lexicon::load(std::istream& in, const CategoryInventory& inventory) {
  return load_impl(in, inventory, "<lexicon>");
}

Lexicon Lexicon::load(const std::filesystem::path& path, const CategoryInventory& inventory) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open lexicon: " + path.string());
  return load_impl(in, inventory, path.string());
}

void Lexicon::add(std::string_view surface, const LabelSet& candidates) {
  if (candidates.empty())
    throw std::invalid_argument("lexicon entry without candidates: " + std::string(surface));
  LabelSet canonical;
  for (const auto& label : candidates) canonical.insert(inventory_->canonical(label));
  std::string key = case_fold(surface);
  auto& entry = entries_[key];
  entry.surface = key;
  entry.candidates.insert(canonical.begin(), canonical.end());
}

LabelSet Lexicon::open_class_fallback() {
  return {std::string(basic::kNoun), std::string(basic::kVerb),
          std::string(basic::kAdjective), std::string(basic::kAdverb)};
}

LabelSet Lexicon::lookup(std::string_view surface) const {
  switch (classify_surface(surface)) {
    case TokenKind::PauseMarker: return {std::string(basic::kPause)};
    case TokenKind::Bracketed: return {std::string(basic::kInterjection)};
    case TokenKind::Word: break;
  }
  auto it = entries_.find(case_fold(surface));
  if (it == entries_.end()) return open_class_fallback();
  return it->second.candidates;
}

LabelSet Lexicon::lookup(const Token& token) const { return lookup(token.surface); }

bool Lexicon::contains(std::string_view surface) const {
  return entries_.contains(case_fold(surface));
}

std::vector<double> encode_candidates(const LabelSet& candidates,
                                      const CategoryInventory& inventory) {
  if (candidates.empty()) throw std::invalid_argument("empty candidate set");
  std::vector<double> bits(inventory.width(), 0.0);
  for (const auto& label : candidates) bits[inventory.index_of(label)] = 1.0;
  return bits;
}

LabelSet decode_candidates(const std::vector<double>& bits,
                           const CategoryInventory& inventory) {
  LabelSet out;
  for (std::size_t i = 0; i < inventory.size() && i < bits.size(); ++i)
    if (bits[i] > 0.5) out.insert(inventory.code(i));
  return out;
}

}  // namespace screenparse
