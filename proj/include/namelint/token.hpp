#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace namelint {

enum class TokenKind : std::uint8_t {
  Identifier,
  NumberLiteral,
  StringLiteral,
  BooleanLiteral,
  NullLiteral,
  Keyword,
  Operator,
  Punctuation,
};

const char *to_string(TokenKind kind);

/// A lexeme with its 1-based line and 0-based byte column. Literal tokens
/// also carry their normalized value: the decoded string contents, the
/// shortest round-trip decimal for numbers, "true"/"false", "null".
struct Token {
  TokenKind kind;
  std::string text;
  std::string value;
  int line = 1;
  int column = 0;

  bool is_literal() const noexcept {
    return kind == TokenKind::NumberLiteral ||
           kind == TokenKind::StringLiteral ||
           kind == TokenKind::BooleanLiteral || kind == TokenKind::NullLiteral;
  }

  bool is(TokenKind k, std::string_view t) const noexcept {
    return kind == k && text == t;
  }

  friend bool operator==(const Token &, const Token &) = default;
};

/// Reserved words the lexer classifies as Keyword. Only a subset of them is
/// accepted by the parser; the rest are recognized so they can be rejected.
bool is_keyword(std::string_view word);

} // namespace namelint
