#ifndef SCREENPARSE_TOKEN_HPP_
#define SCREENPARSE_TOKEN_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace screenparse {

enum class TokenKind { Word, PauseMarker, Bracketed };

std::string_view to_string(TokenKind kind);
TokenKind token_kind_from_string(std::string_view text);

/// One unit of transcript input. The kind is derived from the surface:
/// "." is a pause, "[...]" is vocal noise or an interjection.
struct Token {
  std::string surface;
  TokenKind kind = TokenKind::Word;
  std::size_t position = 0;

  Token() = default;
  Token(std::string surface_text, std::size_t pos);

  friend bool operator==(const Token&, const Token&) = default;
};

TokenKind classify_surface(std::string_view surface);

/// Splits one transcript line on whitespace into positioned tokens.
std::vector<Token> tokenize(std::string_view line);

/// ASCII case folding; bytes outside ASCII are left untouched.
std::string case_fold(std::string_view text);

}  // namespace screenparse

#endif  // SCREENPARSE_TOKEN_HPP_
