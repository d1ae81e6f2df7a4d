#include "screenparse/token.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace screenparse {

std::string_view to_string(TokenKind kind) {
  switch (kind) {
    case TokenKind::Word: return "word";
    case TokenKind::PauseMarker: return "pause";
    case TokenKind::Bracketed: return "bracketed";
  }
  return "word";
}

TokenKind token_kind_from_string(std::string_view text) {
  if (text == "word") return TokenKind::Word;
  if (text == "pause") return TokenKind::PauseMarker;
  if (text == "bracketed") return TokenKind::Bracketed;
  throw std::invalid_argument("unknown token kind: " + std::string(text));
}

TokenKind classify_surface(std::string_view surface) {
  if (surface == ".") return TokenKind::PauseMarker;
  if (surface.size() >= 2 && surface.front() == '[' && surface.back() == ']')
    return TokenKind::Bracketed;
  return TokenKind::Word;
}

Token::Token(std::string surface_text, std::size_t pos)
    : surface(std::move(surface_text)), kind(classify_surface(surface)), position(pos) {}

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> tokens;
  std::istringstream in{std::string(line)};
  std::string word;
  while (in >> word) tokens.emplace_back(word, tokens.size());
  return tokens;
}

std::string case_fold(std::string_view text) {
  std::string out(text);
  for (char& c : out) {
    const auto u = static_cast<unsigned char>(c);
    if (u < 0x80) c = static_cast<char>(std::tolower(u));
  }
  return out;
}

}  // namespace screenparse
