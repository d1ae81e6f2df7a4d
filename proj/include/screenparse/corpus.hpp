#ifndef SCREENPARSE_CORPUS_HPP_
#define SCREENPARSE_CORPUS_HPP_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "screenparse/inventory.hpp"
#include "screenparse/token.hpp"

namespace screenparse {

struct AnnotatedToken {
  Token token;
  std::string basic;      // short code
  std::string abstract_;  // short code
  bool start = false;
  std::optional<bool> keep;
  std::size_t line = 0;  // source line, for diagnostics
};

struct AnnotatedUtterance {
  std::vector<AnnotatedToken> tokens;

  bool has_keep() const;
  std::vector<Token> plain_tokens() const;
  /// Positions marked keep = 1; empty optional when keep bits are absent.
  std::optional<std::vector<std::size_t>> gold_surviving() const;
};

/// Annotated corpus TSV:
///   surface<TAB>basic<TAB>abstract<TAB>start(0|1)[<TAB>keep(0|1)]
/// one token per line, blank line between utterances, `#` comment lines.
/// Keep bits are all-or-nothing within one utterance.
std::vector<AnnotatedUtterance> load_corpus(
    std::istream& in, const std::string& source = "<corpus>",
    const CategoryInventory& basic = basic_syntactic_inventory(),
    const CategoryInventory& abstract_ = abstract_syntactic_inventory());
std::vector<AnnotatedUtterance> load_corpus(
    const std::filesystem::path& path,
    const CategoryInventory& basic = basic_syntactic_inventory(),
    const CategoryInventory& abstract_ = abstract_syntactic_inventory());

std::size_t word_count(const std::vector<AnnotatedUtterance>& corpus);

}  // namespace screenparse

#endif  // SCREENPARSE_CORPUS_HPP_
